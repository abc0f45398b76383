#include "nodal/grid.hpp"

#include "nodal/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nodal {

namespace {

int steps(double length, double step, const char* what) {
  const double q = length / step;
  const long r = std::lround(q);
  if (r < 1 || std::abs(q - r) > 1e-9 * std::max(1.0, q))
    throw MalformedInput(std::string("grid step does not divide the ") + what);
  return static_cast<int>(r);
}

bool mask_inside(const DomainSpec& d, int i, int j) {
  const int rows = static_cast<int>(d.mask.size());
  const int r = rows - 1 - j;
  if (r < 0 || r >= rows || i < 0 || i >= static_cast<int>(d.mask[r].size())) return false;
  const char c = d.mask[r][i];
  return c == '#' || c == '1';
}

} // namespace

std::string domain_name(DomainKind k) {
  switch (k) {
    case DomainKind::Rectangle: return "rectangle";
    case DomainKind::Disk: return "disk";
    case DomainKind::Annulus: return "annulus";
    case DomainKind::Masked: return "mask";
  }
  return "?";
}

DomainKind domain_from_name(const std::string& name) {
  for (auto k : {DomainKind::Rectangle, DomainKind::Disk, DomainKind::Annulus, DomainKind::Masked})
    if (domain_name(k) == name) return k;
  throw MalformedInput("unknown domain kind '" + name + "'");
}

double domain_area(const DomainSpec& d, double step) {
  switch (d.kind) {
    case DomainKind::Rectangle: return d.width * d.height;
    case DomainKind::Disk: return std::numbers::pi * d.radius * d.radius;
    case DomainKind::Annulus: return std::numbers::pi * (d.rOut * d.rOut - d.rIn * d.rIn);
    case DomainKind::Masked: {
      long count = 0;
      for (const auto& row : d.mask) count += std::count_if(row.begin(), row.end(), [](char c) { return c == '#' || c == '1'; });
      return count * step * step;
    }
  }
  return 0;
}

double domain_perimeter(const DomainSpec& d, double step) {
  switch (d.kind) {
    case DomainKind::Rectangle: return 2 * (d.width + d.height);
    case DomainKind::Disk: return 2 * std::numbers::pi * d.radius;
    case DomainKind::Annulus: return 2 * std::numbers::pi * (d.rOut + d.rIn);
    case DomainKind::Masked: {
      const int rows = static_cast<int>(d.mask.size());
      int cols = 0;
      for (const auto& r : d.mask) cols = std::max(cols, static_cast<int>(r.size()));
      long edges = 0;
      for (int j = 0; j < rows; ++j)
        for (int i = 0; i < cols; ++i) {
          if (!mask_inside(d, i, j)) continue;
          edges += !mask_inside(d, i + 1, j) + !mask_inside(d, i - 1, j) + !mask_inside(d, i, j + 1) + !mask_inside(d, i, j - 1);
        }
      return edges * step;
    }
  }
  return 0;
}

double GridField::max_abs() const {
  double m = 0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

double GridField::interpolate(double x, double y) const {
  const auto& L = layout;
  const double fx = (x - L.x0) / L.h, fy = (y - L.y0) / L.h;
  const int i = static_cast<int>(std::floor(fx)), j = static_cast<int>(std::floor(fy));
  const double tx = fx - i, ty = fy - j;
  const auto v = [&](int a, int b) { return (a < 0 || b < 0 || a >= L.nx || b >= L.ny) ? 0.0 : at(a, b); };
  return (1 - tx) * (1 - ty) * v(i, j) + tx * (1 - ty) * v(i + 1, j) + (1 - tx) * ty * v(i, j + 1) + tx * ty * v(i + 1, j + 1);
}

GridLayout build_layout(const DomainSpec& d, double step, bool dirichlet) {
  if (!(step > 0)) throw MalformedInput("grid step must be positive");
  GridLayout L;
  L.h = step;
  std::function<bool(int, int)> inside;
  std::function<bool(int, int)> edge = [](int, int) { return false; };
  switch (d.kind) {
    case DomainKind::Rectangle: {
      if (!(d.width > 0) || !(d.height > 0)) throw MalformedInput("rectangle sides must be positive");
      L.nx = steps(d.width, step, "rectangle width") + 1;
      L.ny = steps(d.height, step, "rectangle height") + 1;
      inside = [](int, int) { return true; };
      edge = [&L](int i, int j) { return i == 0 || j == 0 || i == L.nx - 1 || j == L.ny - 1; };
      break;
    }
    case DomainKind::Disk:
    case DomainKind::Annulus: {
      const bool disk = d.kind == DomainKind::Disk;
      const double ro = disk ? d.radius : d.rOut, ri = disk ? 0.0 : d.rIn;
      if (!(ro > 0) || ri < 0 || !(ri < ro)) throw MalformedInput("radii must satisfy 0 <= rIn < rOut");
      const int n = static_cast<int>(std::ceil(ro / step)) + 1;
      L.nx = L.ny = 2 * n + 1;
      L.x0 = L.y0 = -n * step;
      const double eps = 1e-12 * ro;
      inside = [&L, ro, ri, eps, disk](int i, int j) {
        const double r = std::hypot(L.x(i), L.y(j));
        return r < ro - eps && (disk || r > ri + eps);
      };
      break;
    }
    case DomainKind::Masked: {
      L.ny = static_cast<int>(d.mask.size());
      for (const auto& r : d.mask) L.nx = std::max(L.nx, static_cast<int>(r.size()));
      inside = [&d](int i, int j) { return mask_inside(d, i, j); };
      break;
    }
  }
  if (L.nx <= 0 || L.ny <= 0) throw DegenerateGrid("empty lattice");
  L.role.assign(static_cast<size_t>(L.nx) * L.ny, NodeRole::Exterior);
  L.unknownIndex.assign(L.role.size(), -1);
  int iMin = L.nx, iMax = -1, jMin = L.ny, jMax = -1;
  for (int j = 0; j < L.ny; ++j)
    for (int i = 0; i < L.nx; ++i) {
      if (!inside(i, j)) continue;
      const int n = L.node(i, j);
      if (dirichlet && edge(i, j)) {
        L.role[n] = NodeRole::Fixed;
        continue;
      }
      L.role[n] = NodeRole::Unknown;
      L.unknownIndex[n] = static_cast<int>(L.unknownNode.size());
      L.unknownNode.push_back(n);
      iMin = std::min(iMin, i), iMax = std::max(iMax, i), jMin = std::min(jMin, j), jMax = std::max(jMax, j);
    }
  if (iMax - iMin + 1 < 3 || jMax - jMin + 1 < 3)
    throw DegenerateGrid("fewer than 3 interior nodes per dimension");
  return L;
}

GridField sample_field(const GridLayout& layout, const std::function<double(double, double)>& f) {
  GridField g{layout, std::vector<double>(layout.role.size(), 0.0)};
  for (int j = 0; j < layout.ny; ++j)
    for (int i = 0; i < layout.nx; ++i)
      if (layout.role[layout.node(i, j)] == NodeRole::Unknown) g.values[layout.node(i, j)] = f(layout.x(i), layout.y(j));
  return g;
}

} // namespace nodal
