#pragma once

#include "nodal/operator.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace nodal {

struct SolverOptions {
  int count = 6;
  double tol = 1e-8;          // residual relative to max(1, lambda_count)
  int denseThreshold = 1500;  // below this size use a dense symmetric solver
  int maxIterations = 2000;
  std::uint64_t seed = 1;
  int threads = 1;
  double clusterTol = 1e-3;
};

// One-based run of eigenvalues forming a numerical multiplicity class.
struct Cluster {
  int first = 1;
  int size = 1;
  double mean = 0;

  bool operator==(const Cluster&) const = default;
};

struct EigenSolution {
  std::vector<double> eigenvalues;   // nondecreasing
  Eigen::MatrixXd vectors;           // columns on the unknowns, M-orthonormal
  std::vector<double> residuals;     // ||S x - lambda x|| in the symmetric form
  std::vector<Cluster> clusters;
  std::vector<double> gaps;          // relative gap between consecutive eigenvalues
  double clusterTol = 1e-3;
  std::string method;
  int iterations = 0;
  std::uint64_t seed = 1;
};

EigenSolution solve_eigen(const DiscreteOperator& op, const SolverOptions& opt);

std::vector<double> relative_gaps(const std::vector<double>& evs);
std::vector<Cluster> cluster_multiplicities(const std::vector<double>& evs, double relTol);

GridField field_from_vector(const GridLayout& layout, const Eigen::VectorXd& u);
GridField eigenfield(const DiscreteOperator& op, const EigenSolution& sol, int index); // one-based

} // namespace nodal
