#include "nodal/eigensolver.hpp"

#include "nodal/errors.hpp"

#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

namespace nodal {

namespace {

// Flip each column so that its entry of largest magnitude is positive.
void canonical_signs(Eigen::MatrixXd& X) {
  for (int c = 0; c < X.cols(); ++c) {
    Eigen::Index at = 0;
    X.col(c).cwiseAbs().maxCoeff(&at);
    if (X(at, c) < 0) X.col(c) *= -1;
  }
}

double gershgorin_lower(const Eigen::SparseMatrix<double>& S) {
  double lo = 0;
  bool first = true;
  Eigen::VectorXd diag = S.diagonal(), off = Eigen::VectorXd::Zero(S.rows());
  for (int k = 0; k < S.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(S, k); it; ++it)
      if (it.row() != it.col()) off[it.row()] += std::abs(it.value());
  for (int i = 0; i < S.rows(); ++i) {
    const double v = diag[i] - off[i];
    if (first || v < lo) lo = v;
    first = false;
  }
  return lo;
}

template <class F>
void parallel_columns(int cols, int threads, F&& f) {
  threads = std::max(1, std::min(threads, cols));
  if (threads == 1) {
    for (int c = 0; c < cols; ++c) f(c);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (int c = t; c < cols; c += threads) f(c);
    });
  for (auto& th : pool) th.join();
}

} // namespace

std::vector<double> relative_gaps(const std::vector<double>& evs) {
  std::vector<double> g;
  for (size_t i = 1; i < evs.size(); ++i) {
    const double scale = std::max(std::abs(evs[i]), std::abs(evs[i - 1]));
    g.push_back(scale > 0 ? (evs[i] - evs[i - 1]) / scale : 0.0);
  }
  return g;
}

std::vector<Cluster> cluster_multiplicities(const std::vector<double>& evs, double relTol) {
  std::vector<Cluster> out;
  const auto gaps = relative_gaps(evs);
  for (size_t i = 0; i < evs.size(); ++i) {
    if (i == 0 || gaps[i - 1] >= relTol) out.push_back({static_cast<int>(i) + 1, 0, 0});
    auto& c = out.back();
    c.mean += (evs[i] - c.mean) / (++c.size);
  }
  return out;
}

GridField field_from_vector(const GridLayout& layout, const Eigen::VectorXd& u) {
  if (u.size() != layout.unknowns()) throw MalformedInput("vector length does not match the grid unknowns");
  GridField f{layout, std::vector<double>(layout.role.size(), 0.0)};
  for (int k = 0; k < layout.unknowns(); ++k) f.values[layout.unknownNode[k]] = u[k];
  return f;
}

GridField eigenfield(const DiscreteOperator& op, const EigenSolution& sol, int index) {
  if (index < 1 || index > static_cast<int>(sol.eigenvalues.size()))
    throw MalformedInput("eigenvector index " + std::to_string(index) + " out of range");
  return field_from_vector(op.grid, sol.vectors.col(index - 1));
}

EigenSolution solve_eigen(const DiscreteOperator& op, const SolverOptions& opt) {
  const int n = op.size();
  const int K = opt.count;
  if (K < 1 || K > n) throw MalformedInput("requested " + std::to_string(K) + " eigenpairs from a problem of size " + std::to_string(n));
  const Eigen::SparseMatrix<double> S = op.symmetric_form();
  const Eigen::VectorXd invSqrtM = op.mass.cwiseSqrt().cwiseInverse();

  EigenSolution sol;
  sol.seed = opt.seed;
  sol.clusterTol = opt.clusterTol;
  Eigen::MatrixXd X;
  Eigen::VectorXd theta;

  if (n <= opt.denseThreshold) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Eigen::MatrixXd(S), Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) throw NoConvergence("dense symmetric solver failed");
    theta = es.eigenvalues().head(K);
    X = es.eigenvectors().leftCols(K);
    sol.method = "dense";
  } else {
    const int b = std::min(n, 2 * K + 4);
    const double sigma = std::min(gershgorin_lower(S), 0.0) - 1.0;
    Eigen::SparseMatrix<double> A = S;
    for (int i = 0; i < n; ++i) A.coeffRef(i, i) -= sigma;
    Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt(A);
    if (llt.info() != Eigen::Success) throw NoConvergence("shifted operator is not positive definite");

    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> normal;
    Eigen::MatrixXd Q(n, b);
    for (int c = 0; c < b; ++c)
      for (int i = 0; i < n; ++i) Q(i, c) = normal(rng);
    Q = Eigen::HouseholderQR<Eigen::MatrixXd>(Q).householderQ() * Eigen::MatrixXd::Identity(n, b);

    double worst = 0;
    int it = 0;
    Eigen::MatrixXd Y(n, b);
    for (; it < opt.maxIterations; ++it) {
      parallel_columns(b, opt.threads, [&](int c) { Y.col(c) = llt.solve(Q.col(c)); });
      Q = Eigen::HouseholderQR<Eigen::MatrixXd>(Y).householderQ() * Eigen::MatrixXd::Identity(n, b);
      // Rayleigh-Ritz on the current subspace.
      const Eigen::MatrixXd SQ = S * Q;
      Eigen::MatrixXd H = Q.transpose() * SQ;
      H = 0.5 * (H + H.transpose());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
      Q = Q * es.eigenvectors();
      theta = es.eigenvalues();
      const Eigen::MatrixXd R = SQ * es.eigenvectors() - Q * theta.asDiagonal();
      const double scale = std::max(1.0, std::abs(theta[K - 1]));
      worst = 0;
      for (int c = 0; c < K; ++c) worst = std::max(worst, R.col(c).norm() / scale);
      if (worst <= opt.tol) break;
    }
    if (it == opt.maxIterations) {
      std::ostringstream msg;
      msg << "subspace iteration stopped after " << it << " iterations with relative residual " << worst << " (tolerance "
          << opt.tol << ", block " << b << ", shift " << sigma << ")";
      throw NoConvergence(msg.str());
    }
    sol.iterations = it + 1;
    theta = theta.head(K).eval();
    X = Q.leftCols(K);
    sol.method = "shift-invert subspace";
  }

  for (int c = 0; c < K; ++c) sol.residuals.push_back((S * X.col(c) - theta[c] * X.col(c)).norm());
  canonical_signs(X);
  sol.vectors = invSqrtM.asDiagonal() * X;
  sol.eigenvalues.assign(theta.data(), theta.data() + K);
  sol.gaps = relative_gaps(sol.eigenvalues);
  sol.clusters = cluster_multiplicities(sol.eigenvalues, opt.clusterTol);
  return sol;
}

} // namespace nodal
