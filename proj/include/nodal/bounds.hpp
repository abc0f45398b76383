#pragma once

#include "nodal/surface.hpp"

#include <optional>

namespace nodal {

// Multiplicity bounds for closed surfaces. Cells the table leaves blank stay empty.
struct BoundSet {
  std::optional<long long> cheng;
  std::optional<long long> besson;
  std::optional<long long> nadirashvili;
  std::optional<long long> hhn; // 2k-3, genus zero and k >= 3
  int kMin = 1;

  std::optional<long long> best() const;
};

// Throws UnknownFamily for surfaces with boundary.
BoundSet classical_bounds(const SurfaceSpec& s, int k);

// Bound listed for mult(lambda_2) in the table, when the surface has one.
std::optional<long long> tabulated_mult_lambda2(const SurfaceSpec& s);

double bessel_j0_series(double x);
double j01();         // first positive zero of J0, bisection to 1e-12, cached
double pleijel_gamma(); // 4 / j01^2

struct PleijelBound {
  double multBound = 0;
  double gamma = 0;
};

PleijelBound pleijel_bound(double lambda, double area);

// Lower bound on lambda_k * area for an eigenfunction with kappa nodal domains.
double faber_krahn_floor(int kappa);
double weyl_term(double lambda, double area);

} // namespace nodal
