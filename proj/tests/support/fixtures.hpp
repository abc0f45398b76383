#pragma once

#include "nodal/partition.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace fixtures {

using nodal::EdgeKind;
using nodal::EmbeddedPartition;
using nodal::VertexKind;

// Edge e owns darts 2e (at its tail) and 2e+1 (at its head).
class Builder {
public:
  explicit Builder(nodal::SurfaceSpec s) { p_.surface = s; }
  int vertex(VertexKind k, int index = 0, int component = 0);
  int edge(EdgeKind k, bool twisted = false);
  Builder& rotation(int v, std::vector<int> darts);
  Builder& holes(std::vector<int> darts);
  EmbeddedPartition build() const { return p_; }

private:
  EmbeddedPartition p_;
};

EmbeddedPartition sphere_circle();
EmbeddedPartition sphere_figure_eight();
EmbeddedPartition sphere_theta();
EmbeddedPartition disk_diameter();
EmbeddedPartition disk_odd_parity();  // one rho = 1 arc ending at a nu = 3 point with a loop
EmbeddedPartition disk_pinched_loop(); // rho = 2 loop at one boundary point
EmbeddedPartition annulus_two_arcs();
EmbeddedPartition torus_circle();
EmbeddedPartition moebius_core_circle();
EmbeddedPartition moebius_parallel_circle();
EmbeddedPartition moebius_two_arcs();

struct Named {
  std::string name;
  EmbeddedPartition p;
};
std::vector<Named> all_fixtures();
std::vector<Named> moebius_fixtures();

// Random essential partitions of the sphere (holes = -1) or of a planar domain
// with the given hole count, grown by rejection-sampled chord, loop, subdivision
// and circle insertions.
EmbeddedPartition random_partition(std::mt19937_64& rng, int holes, int steps);

} // namespace fixtures
