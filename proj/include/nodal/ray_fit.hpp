#pragma once

#include "nodal/grid.hpp"

#include <functional>
#include <vector>

namespace nodal {

struct RayFit {
  int order = 0;                    // the l of r^l (a sin(l w) + b cos(l w))
  double a = 0, b = 0;
  std::vector<double> rayAngles;    // 2l zero directions in [0, 2 pi), sorted
  double residual = 0;              // relative least-squares residual of the best order
  std::vector<double> residualByOrder;
};

inline constexpr double kRayFitThreshold = 0.1;

// Samples three circles (radius/3, 2 radius/3, radius) at 64 angles each and fits
// every order 1..maxOrder. Throws NoFit when no residual is below kRayFitThreshold.
RayFit local_ray_fit(const std::function<double(double, double)>& u, double x0, double y0, double radius, int maxOrder = 6);
RayFit local_ray_fit(const GridField& u, double x0, double y0, double radius, int maxOrder = 6);

} // namespace nodal
