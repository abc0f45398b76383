#pragma once

#include "nodal/grid.hpp"
#include "nodal/partition.hpp"

#include <array>
#include <string>
#include <vector>

namespace nodal {

struct ExtractOptions {
  double zeroTol = 1e-8;      // cell zero threshold relative to max |u|
  double residual = 0;        // eigenpair residual; the threshold is at least 10x this
  bool fitRays = true;        // confirm interior singular points with local_ray_fit
  double fitRadiusCells = 4;  // fit radius in grid steps
};

struct InteriorPoint {
  double x = 0, y = 0;
  int nu = 0;
  int fitOrder = 0;
  double fitResidual = -1;
  bool confirmed = false;
  std::string status; // "confirmed", "unresolved" or "not-checked"
};

struct BoundaryPoint {
  double x = 0, y = 0;
  int rho = 0;
  int component = 0;
  bool lowerBound = false; // rho > 2 is only a lower bound
};

// Dual cells are the lattice squares; cell (i, j) has lower-left node (i, j).
struct NodalExtract {
  int cellsX = 0, cellsY = 0;
  double x0 = 0, y0 = 0, h = 1;
  std::vector<unsigned char> active;
  std::vector<signed char> signField; // +1, -1, or 0 below the zero threshold
  std::vector<int> cellLabel;         // partition label per active cell, -1 elsewhere
  double zeroThreshold = 0;
  int kappa = 0;
  int positiveDomains = 0;
  int negativeDomains = 0;
  std::vector<InteriorPoint> interiorSingular;
  std::vector<BoundaryPoint> boundarySingular;
  EmbeddedPartition asPartition;
  std::vector<std::array<double, 2>> vertexPositions;

  int cell(int i, int j) const { return j * cellsX + i; }
};

// Throws AllZeroField when no cell rises above the zero threshold.
NodalExtract extract_nodal(const GridField& u, const ExtractOptions& opt = {});

// Nodal domain count only (union-find on signed cells), without the partition.
int count_nodal_domains(const GridField& u, double zeroTol = 1e-8);

} // namespace nodal
