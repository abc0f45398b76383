#pragma once

#include "nodal/grid.hpp"

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace nodal {

using ScalarField = std::function<double(double, double)>;

// Point of the boundary with outward unit normal; the boundary near it is the
// circle of the given signed curvature (0 for a straight side).
struct BoundarySite {
  double x = 0, y = 0;
  double nx = 0, ny = 0;
  double curvature = 0;
};

struct PrescribeOptions {
  double radius = 0.05;     // interior fitting radius, or half-length of the boundary arc
  double inset = 0.0;       // boundary trace taken at p - inset*n (the normal derivative for Dirichlet data)
  int samples = 15;         // per direction
};

struct PrescribeResult {
  Eigen::VectorXd coefficients; // unit length, largest entry positive
  Eigen::MatrixXd jet;          // rows: suppressed jet functionals, columns: basis
  double jetResidual = 0;       // |J c| over the largest basis jet norm
  int rank = 0;
};

// Interior: u(x0) and the complex harmonic parts of degrees 1..order-1 vanish
// (2*order-1 rows), so the vanishing order is at least `order`.
PrescribeResult prescribe_singular(const std::vector<ScalarField>& basis, double x0, double y0, int order,
                                   const PrescribeOptions& opt = {});

// Boundary: the trace along the site's arc vanishes to the given order (order rows).
PrescribeResult prescribe_singular(const std::vector<ScalarField>& basis, const BoundarySite& site, int order,
                                   const PrescribeOptions& opt = {});

std::vector<ScalarField> as_fields(const std::vector<GridField>& grids);

} // namespace nodal
