#pragma once

#include <functional>
#include <string>
#include <vector>

namespace nodal {

enum class DomainKind { Rectangle, Disk, Annulus, Masked };

// Rectangles sit at [0,w]x[0,h]; disks and annuli are centred at the origin.
// Mask rows are listed top to bottom, '#' (or '1') marking nodes inside; node
// (i, j) of the mask sits at (i*step, (rows-1-j)*step).
struct DomainSpec {
  DomainKind kind = DomainKind::Rectangle;
  double width = 1, height = 1;
  double radius = 1;
  double rIn = 0.5, rOut = 1;
  std::vector<std::string> mask;

  static DomainSpec rectangle(double w, double h) { return {DomainKind::Rectangle, w, h, 1, 0.5, 1, {}}; }
  static DomainSpec disk(double r) { return {DomainKind::Disk, 1, 1, r, 0.5, 1, {}}; }
  static DomainSpec annulus(double a, double b) { return {DomainKind::Annulus, 1, 1, 1, a, b, {}}; }
  static DomainSpec masked(std::vector<std::string> rows) { return {DomainKind::Masked, 1, 1, 1, 0.5, 1, std::move(rows)}; }
};

std::string domain_name(DomainKind k);
DomainKind domain_from_name(const std::string& name);

// Exact area and perimeter for the analytic shapes; staircase values for masks.
double domain_area(const DomainSpec& d, double step);
double domain_perimeter(const DomainSpec& d, double step);

enum class NodeRole : unsigned char { Unknown, Fixed, Exterior };

// Uniform node lattice; node (i, j) sits at (x0 + i*h, y0 + j*h).
struct GridLayout {
  int nx = 0, ny = 0;
  double x0 = 0, y0 = 0, h = 1;
  std::vector<NodeRole> role;
  std::vector<int> unknownIndex; // node -> unknown, or -1
  std::vector<int> unknownNode;  // unknown -> node

  int node(int i, int j) const { return j * nx + i; }
  double x(int i) const { return x0 + i * h; }
  double y(int j) const { return y0 + j * h; }
  int unknowns() const { return static_cast<int>(unknownNode.size()); }
  bool closed(int i, int j) const {
    return i >= 0 && j >= 0 && i < nx && j < ny && role[node(i, j)] != NodeRole::Exterior;
  }
};

// Values on every node; Fixed and Exterior nodes hold 0.
struct GridField {
  GridLayout layout;
  std::vector<double> values;

  double at(int i, int j) const { return values[layout.node(i, j)]; }
  double max_abs() const;
  // Bilinear interpolation; points outside the lattice read as 0.
  double interpolate(double x, double y) const;
};

// Lattice with node roles for the given boundary treatment. Dirichlet problems
// mark rectangle edges Fixed; Neumann/Robin keep every closed node Unknown.
GridLayout build_layout(const DomainSpec& d, double step, bool dirichlet);

GridField sample_field(const GridLayout& layout, const std::function<double(double, double)>& f);

} // namespace nodal
