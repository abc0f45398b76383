#include "nodal/bounds.hpp"

#include "nodal/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nodal {

std::optional<long long> BoundSet::best() const {
  std::optional<long long> b;
  for (const auto& v : {cheng, besson, nadirashvili, hhn})
    if (v && (!b || *v < *b)) b = v;
  return b;
}

BoundSet classical_bounds(const SurfaceSpec& s, int k) {
  validate(s);
  if (k < 1) throw MalformedInput("k must be positive");
  if (has_boundary(s))
    throw UnknownFamily(describe(s) + " has boundary; the classical table covers closed surfaces only");
  const long long K = k;
  BoundSet b;
  if (s.kind == SurfaceKind::ClosedOrientable) {
    const long long g = s.param;
    if (g == 0) {
      b.cheng = K * (K + 1) / 2;
      b.besson = 2 * K - 1;
      b.nadirashvili = 2 * K - 1;
      if (k >= 3) b.hhn = 2 * K - 3;
    } else if (g == 1) {
      b.cheng = (K + 2) * (K + 3) / 2;
      b.besson = 2 * K + 3;
      b.nadirashvili = 2 * K + 2;
    } else {
      b.cheng = (K + 2 * g) * (K + 2 * g + 1) / 2;
      b.besson = 2 * K + 4 * g - 1;
      b.nadirashvili = 2 * K + 4 * g - 3;
    }
  } else {
    const long long c = s.param;
    if (c == 1) {
      b.besson = 4 * K - 1;
      b.nadirashvili = 2 * K + 1;
    } else if (c == 2) {
      b.nadirashvili = 2 * K + 1;
    } else {
      // The table's non-orientable column lists RP2 as 0 and the Klein bottle as 1.
      const long long gc = c - 1;
      b.besson = 4 * K + 4 * gc - 1;
      b.nadirashvili = 2 * K + 2 * gc - 1;
    }
  }
  return b;
}

std::optional<long long> tabulated_mult_lambda2(const SurfaceSpec& s) {
  validate(s);
  if (s.kind == SurfaceKind::ClosedOrientable && s.param == 0) return 3;
  if (s.kind == SurfaceKind::ClosedOrientable && s.param == 1) return 6;
  if (s.kind == SurfaceKind::ClosedNonOrientable && (s.param == 1 || s.param == 2)) return 5;
  return std::nullopt;
}

double bessel_j0_series(double x) {
  const double q = -(x * x) / 4.0;
  double term = 1.0, sum = 1.0;
  for (int m = 1; m < 200; ++m) {
    term *= q / (double(m) * m);
    sum += term;
    if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) break;
  }
  return sum;
}

double j01() {
  static const double root = [] {
    double lo = 2.0, hi = 3.0; // J0(2) > 0 > J0(3)
    while (hi - lo > 1e-13) {
      const double mid = 0.5 * (lo + hi);
      (bessel_j0_series(mid) > 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }();
  return root;
}

double pleijel_gamma() { return 4.0 / (j01() * j01()); }

PleijelBound pleijel_bound(double lambda, double area) {
  if (!(lambda > 0) || !(area > 0)) throw MalformedInput("lambda and area must be positive");
  const double j = j01();
  return {2.0 * lambda * area / (std::numbers::pi * j * j) - 1.0, pleijel_gamma()};
}

double faber_krahn_floor(int kappa) { return kappa * std::numbers::pi * j01() * j01(); }

double weyl_term(double lambda, double area) { return area * lambda / (4.0 * std::numbers::pi); }

} // namespace nodal
