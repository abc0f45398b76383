#include "nodal/ray_fit.hpp"

#include "nodal/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace nodal {

RayFit local_ray_fit(const std::function<double(double, double)>& u, double x0, double y0, double radius, int maxOrder) {
  if (!(radius > 0) || maxOrder < 1) throw MalformedInput("ray fit needs a positive radius and order");
  constexpr int kAngles = 64, kRadii = 3;
  const int n = kAngles * kRadii;
  Eigen::VectorXd values(n);
  std::vector<double> rr(n), ww(n);
  for (int k = 0; k < kRadii; ++k)
    for (int m = 0; m < kAngles; ++m) {
      const int s = k * kAngles + m;
      rr[s] = radius * (k + 1) / kRadii;
      ww[s] = 2 * std::numbers::pi * m / kAngles;
      values[s] = u(x0 + rr[s] * std::cos(ww[s]), y0 + rr[s] * std::sin(ww[s]));
    }
  const double norm = values.norm();
  if (norm == 0) throw NoFit("field vanishes on every sample circle");

  RayFit best;
  best.residual = std::numeric_limits<double>::infinity();
  for (int l = 1; l <= maxOrder; ++l) {
    Eigen::MatrixXd A(n, 2);
    for (int s = 0; s < n; ++s) {
      const double rl = std::pow(rr[s] / radius, l);
      A(s, 0) = rl * std::sin(l * ww[s]);
      A(s, 1) = rl * std::cos(l * ww[s]);
    }
    const Eigen::Vector2d c = A.colPivHouseholderQr().solve(values);
    const double res = (A * c - values).norm() / norm;
    best.residualByOrder.push_back(res);
    if (res < best.residual) {
      best.residual = res;
      best.order = l;
      // Coefficients in the unit scaled by the radius: u ~ (r/radius)^l (...)
      best.a = c[0];
      best.b = c[1];
    }
  }
  if (best.residual > kRayFitThreshold)
    throw NoFit("best order " + std::to_string(best.order) + " leaves relative residual " + std::to_string(best.residual));
  const int l = best.order;
  const double phi = std::atan2(best.b, best.a);
  for (int k = 0; k < 2 * l; ++k) {
    double w = (k * std::numbers::pi - phi) / l;
    w = std::fmod(w, 2 * std::numbers::pi);
    if (w < 0) w += 2 * std::numbers::pi;
    best.rayAngles.push_back(w);
  }
  std::sort(best.rayAngles.begin(), best.rayAngles.end());
  return best;
}

RayFit local_ray_fit(const GridField& u, double x0, double y0, double radius, int maxOrder) {
  return local_ray_fit([&u](double x, double y) { return u.interpolate(x, y); }, x0, y0, radius, maxOrder);
}

} // namespace nodal
