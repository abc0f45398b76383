#include "nodal/operator.hpp"

#include "nodal/errors.hpp"

#include <cmath>

namespace nodal {

std::string bc_name(BoundaryCondition::Kind k) {
  switch (k) {
    case BoundaryCondition::Dirichlet: return "dirichlet";
    case BoundaryCondition::Neumann: return "neumann";
    case BoundaryCondition::Robin: return "robin";
  }
  return "?";
}

BoundaryCondition::Kind bc_from_name(const std::string& name) {
  for (auto k : {BoundaryCondition::Dirichlet, BoundaryCondition::Neumann, BoundaryCondition::Robin})
    if (bc_name(k) == name) return k;
  throw MalformedInput("unknown boundary condition '" + name + "'");
}

void validate(const EigenProblem& p) {
  if (!(p.gridStep > 0)) throw MalformedInput("grid step must be positive");
  if (p.bc.kind == BoundaryCondition::Robin && !(p.bc.robin >= 0)) throw MalformedInput("Robin coupling must be nonnegative");
  if (p.domain.kind == DomainKind::Masked && p.domain.mask.empty()) throw MalformedInput("mask is empty");
}

Eigen::SparseMatrix<double> DiscreteOperator::symmetric_form() const {
  const Eigen::VectorXd s = mass.cwiseSqrt().cwiseInverse();
  return s.asDiagonal() * stiffness * s.asDiagonal();
}

DiscreteOperator assemble_operator(const EigenProblem& p) {
  validate(p);
  const bool dirichlet = p.bc.kind == BoundaryCondition::Dirichlet;
  const double robin = p.bc.kind == BoundaryCondition::Robin ? p.bc.robin : 0.0;
  DiscreteOperator op;
  op.bc = p.bc;
  op.grid = build_layout(p.domain, p.gridStep, dirichlet);
  op.area = domain_area(p.domain, p.gridStep);
  op.perimeter = domain_perimeter(p.domain, p.gridStep);
  const GridLayout& L = op.grid;
  const double h = L.h, inv = 1.0 / (h * h);
  const int n = L.unknowns();
  const Expression V = Expression::parse(p.potential);

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<size_t>(n) * 5);
  op.mass = Eigen::VectorXd::Ones(n);
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);

  const bool rect = p.domain.kind == DomainKind::Rectangle;
  const auto unknown = [&](int i, int j) {
    return (i >= 0 && j >= 0 && i < L.nx && j < L.ny) ? L.unknownIndex[L.node(i, j)] : -1;
  };
  const auto onSide = [&](int i, int j, bool vertical) {
    // Edge of the rectangle boundary, either a vertical side (i fixed) or horizontal.
    return vertical ? (i == 0 || i == L.nx - 1) : (j == 0 || j == L.ny - 1);
  };

  // Masked Robin: scale the staircase boundary length to the true perimeter.
  long missing = 0;
  if (!dirichlet && !rect)
    for (int u = 0; u < n; ++u) {
      const int node = L.unknownNode[u], i = node % L.nx, j = node / L.nx;
      missing += (unknown(i + 1, j) < 0) + (unknown(i - 1, j) < 0) + (unknown(i, j + 1) < 0) + (unknown(i, j - 1) < 0);
    }
  const double robinScale = missing ? op.perimeter / (missing * h) : 1.0;

  for (int u = 0; u < n; ++u) {
    const int node = L.unknownNode[u], i = node % L.nx, j = node / L.nx;
    const double pot = V(L.x(i), L.y(j));
    if (dirichlet) {
      diag[u] += pot;
      diag[u] += 4 * inv;
      for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
        const int w = unknown(i + di, j + dj);
        if (w >= 0) trip.emplace_back(u, w, -inv);
      }
      continue;
    }
    if (rect) {
      const bool sx = i == 0 || i == L.nx - 1, sy = j == 0 || j == L.ny - 1;
      op.mass[u] = (sx ? 0.5 : 1.0) * (sy ? 0.5 : 1.0);
      diag[u] += pot * op.mass[u];
      if (sx || sy) diag[u] += robin / h; // boundary length h per boundary node, over h^2
    } else {
      int miss = 0;
      for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) miss += unknown(i + di, j + dj) < 0;
      diag[u] += pot + robin * robinScale * miss / h;
    }
    for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
      const int w = unknown(i + di, j + dj);
      if (w < 0) continue;
      // Flux through a dual face of length h, halved along the rectangle sides.
      double c = inv;
      if (rect && onSide(i, j, di == 0) && onSide(i + di, j + dj, di == 0)) c *= 0.5;
      trip.emplace_back(u, w, -c);
      diag[u] += c;
    }
  }
  for (int u = 0; u < n; ++u) trip.emplace_back(u, u, diag[u]);
  op.stiffness.resize(n, n);
  op.stiffness.setFromTriplets(trip.begin(), trip.end());
  op.stiffness.makeCompressed();
  return op;
}

double max_asymmetry(const Eigen::SparseMatrix<double>& a) {
  const Eigen::SparseMatrix<double> t = a.transpose();
  const Eigen::SparseMatrix<double> d = a - t;
  double m = 0;
  for (int k = 0; k < d.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(d, k); it; ++it) m = std::max(m, std::abs(it.value()));
  return m;
}

} // namespace nodal
