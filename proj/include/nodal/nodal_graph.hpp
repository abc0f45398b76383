#pragma once

#include "nodal/partition.hpp"

#include <utility>

namespace nodal {

// Counts of the multigraph whose vertices are the singular points plus one
// marker per boundary-free circle, and whose edges are the arcs between them.
struct MultigraphCounts {
  int alpha0 = 0;
  int alpha1 = 0;
  int e = 0;       // circle components without singular points
  int c = 0;       // connected components of the partition boundary
  int r = 0;       // components of M minus the graph (the domains)
  int rClosed = 0; // regions on the closed model surface: r plus capped holes
  int degreeSum = 0;
  int formulaAlpha0 = 0;
  int formulaAlpha1 = 0;
  bool consistent = false; // direct and formula counts agree and 2*alpha1 = degreeSum
};

MultigraphCounts build_multigraph(const EmbeddedPartition& p);

// Counts of the actual embedded graph (every vertex on a real edge, every real edge).
MultigraphCounts graph_counts(const EmbeddedPartition& p);

// Vertex-edge additions: two Added vertices on every real loop, one on every
// real edge parallel to a lower-numbered one.
std::pair<EmbeddedPartition, MultigraphCounts> simplify_to_graph(const EmbeddedPartition& p);

bool is_simple(const EmbeddedPartition& p);

} // namespace nodal
