#pragma once

#include "nodal/eigensolver.hpp"
#include "nodal/nodal_extract.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nodal {

struct LawOptions {
  int randomCombinations = 200;
  std::uint64_t seed = 1;
  int threads = 1;
  double faberKrahnTol = 0.02; // relative slack on lambda_k |Omega| >= kappa pi j01^2
  double pleijelTol = 0.02;    // relative slack on lambda in the Pleijel bound
  ExtractOptions extract;
  bool checkEuler = true;      // run the partition checks on every eigenvector
};

struct EigenLaw {
  int k = 0;            // one-based index
  int clusterFirst = 0; // smallest index with the same eigenvalue
  double lambda = 0;
  int kappa = 0;
  bool courant = false;       // kappa <= clusterFirst
  double lambdaArea = 0;
  double faberKrahnFloor = 0; // kappa pi j01^2
  bool dirichletLaws = false; // Faber-Krahn is checked for Dirichlet problems only
  bool faberKrahn = false;
  int weylCount = 0;          // eigenvalues <= lambda
  double weylTerm = 0;
  double weylDeviation = 0;   // (count - term) / term
  bool euler = true;
  bool parity = true;
  std::string eulerFormula;
};

struct ClusterLaw {
  int first = 0, size = 0;
  double lambda = 0;
  bool truncated = false;    // touches the last computed eigenvalue
  int bound2k1 = 0;          // 2k - 1
  bool nadirashvili = false;
  int bound2k2 = 0;          // 2k - 2, k >= 3 only
  bool applies2k2 = false;
  bool multiplicity2k2 = true;
  bool pleijelApplies = false; // Dirichlet with positive eigenvalue
  double pleijelBound = 0;
  bool pleijel = false;
  int samples = 0;
  int maxSampleKappa = 0;
  bool courantSamples = true;
};

struct LawReport {
  std::vector<EigenLaw> eigen;
  std::vector<ClusterLaw> clusters;
  bool courant = true;
  bool multiplicity = true;
  bool faberKrahn = true;
  bool pleijel = true;
  bool euler = true;
  bool pass = true;
  std::uint64_t seed = 1;
  double area = 0;
};

LawReport verify_spectral_laws(const EigenSolution& sol, const DiscreteOperator& op, const LawOptions& opt = {});

} // namespace nodal
