#pragma once

#include "nodal/expression.hpp"
#include "nodal/grid.hpp"

#include <Eigen/Sparse>

namespace nodal {

struct BoundaryCondition {
  enum Kind { Dirichlet, Neumann, Robin } kind = Dirichlet;
  double robin = 0; // coupling h >= 0 in du/dn + h u = 0
};

std::string bc_name(BoundaryCondition::Kind k);
BoundaryCondition::Kind bc_from_name(const std::string& name);

struct EigenProblem {
  DomainSpec domain;
  double gridStep = 1.0 / 32;
  std::string potential = "0";
  BoundaryCondition bc;
};

void validate(const EigenProblem& p);

// Generalized pencil K u = lambda M u on the unknown nodes, M diagonal.
// Dirichlet: five-point Laplacian with M = I. Neumann/Robin: finite-volume
// weights (halved flux along rectangle sides, quarter cells at corners) and
// the Robin term h times the boundary length carried by each node.
struct DiscreteOperator {
  GridLayout grid;
  Eigen::SparseMatrix<double> stiffness;
  Eigen::VectorXd mass;
  BoundaryCondition bc;
  double area = 0;
  double perimeter = 0;

  int size() const { return static_cast<int>(mass.size()); }
  // M^{-1/2} K M^{-1/2}
  Eigen::SparseMatrix<double> symmetric_form() const;
};

DiscreteOperator assemble_operator(const EigenProblem& p);

double max_asymmetry(const Eigen::SparseMatrix<double>& a);

} // namespace nodal
