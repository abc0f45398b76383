#include "fixtures.hpp"

#include "nodal/errors.hpp"

namespace fixtures {

using nodal::SurfaceSpec;

int Builder::vertex(VertexKind k, int index, int component) {
  p_.vertices.push_back({k, index, component});
  p_.rotation.emplace_back();
  return static_cast<int>(p_.vertices.size()) - 1;
}

int Builder::edge(EdgeKind k, bool twisted) {
  const int e = static_cast<int>(p_.edges.size());
  nodal::PartitionEdge edge;
  edge.darts[0] = 2 * e;
  edge.darts[1] = 2 * e + 1;
  edge.kind = k;
  edge.twisted = twisted;
  p_.edges.push_back(edge);
  return e;
}

Builder& Builder::rotation(int v, std::vector<int> darts) {
  p_.rotation[v] = std::move(darts);
  return *this;
}

Builder& Builder::holes(std::vector<int> darts) {
  p_.holeDarts = std::move(darts);
  return *this;
}

EmbeddedPartition sphere_circle() {
  Builder b(SurfaceSpec::sphere());
  const int m = b.vertex(VertexKind::CircleMarker);
  b.edge(EdgeKind::Nodal);
  b.rotation(m, {0, 1});
  return b.build();
}

EmbeddedPartition sphere_figure_eight() {
  Builder b(SurfaceSpec::sphere());
  const int x = b.vertex(VertexKind::InteriorSingular, 4);
  b.edge(EdgeKind::Nodal);
  b.edge(EdgeKind::Nodal);
  b.rotation(x, {0, 1, 2, 3});
  return b.build();
}

EmbeddedPartition sphere_theta() {
  // a on the west, b on the east; upper, middle and lower arcs
  Builder b(SurfaceSpec::sphere());
  const int a = b.vertex(VertexKind::InteriorSingular, 3);
  const int c = b.vertex(VertexKind::InteriorSingular, 3);
  b.edge(EdgeKind::Nodal);
  b.edge(EdgeKind::Nodal);
  b.edge(EdgeKind::Nodal);
  b.rotation(a, {4, 2, 0}).rotation(c, {1, 3, 5});
  return b.build();
}

EmbeddedPartition disk_diameter() {
  // z1 at the bottom, z2 at the top of the unit circle; B0 runs through the east
  Builder b(SurfaceSpec::planar(0));
  const int z1 = b.vertex(VertexKind::BoundarySingular, 1, 1);
  const int z2 = b.vertex(VertexKind::BoundarySingular, 1, 1);
  b.edge(EdgeKind::Boundary); // 0,1
  b.edge(EdgeKind::Boundary); // 2,3
  b.edge(EdgeKind::Nodal);    // 4,5
  b.rotation(z1, {0, 4, 3}).rotation(z2, {1, 2, 5}).holes({1});
  return b.build();
}

EmbeddedPartition disk_odd_parity() {
  Builder b(SurfaceSpec::planar(0));
  const int z = b.vertex(VertexKind::BoundarySingular, 1, 1);
  const int x = b.vertex(VertexKind::InteriorSingular, 3);
  b.edge(EdgeKind::Boundary); // 0,1 loop around the disk
  b.edge(EdgeKind::Nodal);    // 2,3 z -> x
  b.edge(EdgeKind::Nodal);    // 4,5 loop at x above it
  b.rotation(z, {0, 2, 1}).rotation(x, {4, 5, 3}).holes({1});
  return b.build();
}

EmbeddedPartition disk_pinched_loop() {
  Builder b(SurfaceSpec::planar(0));
  const int z = b.vertex(VertexKind::BoundarySingular, 2, 1);
  b.edge(EdgeKind::Boundary); // 0,1
  b.edge(EdgeKind::Nodal);    // 2,3
  b.rotation(z, {0, 2, 3, 1}).holes({1});
  return b.build();
}

EmbeddedPartition annulus_two_arcs() {
  // outer radius 2, inner radius 1, radial arcs along the x axis
  Builder b(SurfaceSpec::planar(1));
  const int o1 = b.vertex(VertexKind::BoundarySingular, 1, 1);
  const int o2 = b.vertex(VertexKind::BoundarySingular, 1, 1);
  const int i1 = b.vertex(VertexKind::BoundarySingular, 1, 2);
  const int i2 = b.vertex(VertexKind::BoundarySingular, 1, 2);
  for (int e = 0; e < 4; ++e) b.edge(EdgeKind::Boundary); // O1 O2 I1 I2
  b.edge(EdgeKind::Nodal);                                 // 8,9 i1 -> o1
  b.edge(EdgeKind::Nodal);                                 // 10,11 i2 -> o2
  b.rotation(o1, {0, 9, 3}).rotation(o2, {11, 1, 2}).rotation(i1, {8, 4, 7}).rotation(i2, {5, 10, 6});
  b.holes({1, 4});
  return b.build();
}

EmbeddedPartition torus_circle() {
  Builder b(SurfaceSpec::closed_orientable(1));
  const int m = b.vertex(VertexKind::CircleMarker);
  b.edge(EdgeKind::Nodal);   // 0,1 horizontal circle
  b.edge(EdgeKind::Virtual); // 2,3 vertical loop
  b.rotation(m, {0, 2, 1, 3});
  return b.build();
}

// Moebius strip as the unit square with (0, y) ~ (1, 1 - y); edges crossing the
// seam are twisted. The boundary circle is the bottom side followed by the top side.

EmbeddedPartition moebius_core_circle() {
  Builder b(SurfaceSpec::moebius());
  const int z = b.vertex(VertexKind::Auxiliary);    // (1/2, 0)
  const int m = b.vertex(VertexKind::CircleMarker); // (1/2, 1/2)
  b.edge(EdgeKind::Boundary);      // 0,1 crosses the seam twice
  b.edge(EdgeKind::Nodal, true);   // 2,3 the core
  b.edge(EdgeKind::Virtual);       // 4,5 z -> m
  b.rotation(z, {0, 4, 1}).rotation(m, {2, 3, 5}).holes({1});
  return b.build();
}

EmbeddedPartition moebius_parallel_circle() {
  Builder b(SurfaceSpec::moebius());
  const int z = b.vertex(VertexKind::Auxiliary);    // (1/2, 0)
  const int m = b.vertex(VertexKind::CircleMarker); // (1/2, 0.2)
  const int n = b.vertex(VertexKind::Auxiliary);    // (1/2, 0.8)
  b.edge(EdgeKind::Boundary);     // 0,1
  b.edge(EdgeKind::Nodal, true);  // 2,3 m -> n through the seam
  b.edge(EdgeKind::Nodal, true);  // 4,5 n -> m through the seam
  b.edge(EdgeKind::Virtual);      // 6,7 z -> m
  b.edge(EdgeKind::Virtual);      // 8,9 m -> n across the inner band
  b.rotation(z, {0, 6, 1}).rotation(m, {2, 8, 5, 7}).rotation(n, {4, 3, 9}).holes({1});
  return b.build();
}

EmbeddedPartition moebius_two_arcs() {
  // arcs at x = 1/3 (z1 bottom, z2 top) and x = 2/3 (z3 bottom, z4 top)
  Builder b(SurfaceSpec::moebius());
  const int z1 = b.vertex(VertexKind::BoundarySingular, 1, 1);
  const int z2 = b.vertex(VertexKind::BoundarySingular, 1, 1);
  const int z3 = b.vertex(VertexKind::BoundarySingular, 1, 1);
  const int z4 = b.vertex(VertexKind::BoundarySingular, 1, 1);
  b.edge(EdgeKind::Boundary);       // B1 0,1 z1 -> z3
  b.edge(EdgeKind::Boundary, true); // B2 2,3 z3 -> z2
  b.edge(EdgeKind::Boundary);       // B3 4,5 z2 -> z4
  b.edge(EdgeKind::Boundary, true); // B4 6,7 z4 -> z1
  b.edge(EdgeKind::Nodal);          // 8,9 z1 -> z2
  b.edge(EdgeKind::Nodal);          // 10,11 z3 -> z4
  b.rotation(z1, {0, 8, 7}).rotation(z3, {2, 10, 1}).rotation(z2, {4, 3, 9}).rotation(z4, {6, 5, 11});
  b.holes({1});
  return b.build();
}

std::vector<Named> moebius_fixtures() {
  return {{"moebius core circle", moebius_core_circle()},
          {"moebius boundary-parallel circle", moebius_parallel_circle()},
          {"moebius two-domain split", moebius_two_arcs()}};
}

std::vector<Named> all_fixtures() {
  std::vector<Named> out{{"sphere circle", sphere_circle()},   {"sphere figure-eight", sphere_figure_eight()},
                         {"sphere theta", sphere_theta()},     {"disk diameter", disk_diameter()},
                         {"disk odd parity", disk_odd_parity()}, {"disk pinched loop", disk_pinched_loop()},
                         {"annulus two arcs", annulus_two_arcs()}, {"torus circle", torus_circle()}};
  for (auto& m : moebius_fixtures()) out.push_back(std::move(m));
  return out;
}

namespace {

int pick(std::mt19937_64& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

int new_vertex(EmbeddedPartition& p, VertexKind k) {
  p.vertices.push_back({k, 0, 0});
  p.rotation.emplace_back();
  return static_cast<int>(p.vertices.size()) - 1;
}

int new_edge(EmbeddedPartition& p, EdgeKind k) {
  const int e = static_cast<int>(p.edges.size());
  nodal::PartitionEdge edge;
  edge.darts[0] = 2 * e;
  edge.darts[1] = 2 * e + 1;
  edge.kind = k;
  p.edges.push_back(edge);
  return e;
}

void insert_random(std::mt19937_64& rng, std::vector<int>& rot, int dart) {
  rot.insert(rot.begin() + pick(rng, static_cast<int>(rot.size()) + 1), dart);
}

int vertex_of(const EmbeddedPartition& p, int dart) {
  for (int v = 0; v < static_cast<int>(p.rotation.size()); ++v)
    for (int d : p.rotation[v])
      if (d == dart) return v;
  return -1;
}

bool accept(EmbeddedPartition& p) {
  try {
    nodal::assign_vertex_kinds(p);
    nodal::validate(p);
    return nodal::is_essential(p);
  } catch (const nodal::Error&) {
    return false;
  }
}

} // namespace

EmbeddedPartition random_partition(std::mt19937_64& rng, int holes, int steps) {
  EmbeddedPartition p;
  if (holes < 0) {
    p.surface = SurfaceSpec::sphere();
    const int m = new_vertex(p, VertexKind::CircleMarker);
    new_edge(p, EdgeKind::Nodal);
    p.rotation[m] = {0, 1};
  } else {
    p.surface = SurfaceSpec::planar(holes);
    int prevAnchor = -1;
    for (int h = 0; h <= holes; ++h) {
      const int len = 1 + pick(rng, 3);
      std::vector<int> vs, es;
      for (int i = 0; i < len; ++i) vs.push_back(new_vertex(p, VertexKind::Auxiliary));
      for (int i = 0; i < len; ++i) es.push_back(new_edge(p, EdgeKind::Boundary));
      // edge i runs from vs[i] to vs[i+1]; the hole lies between its out dart and the next in dart
      for (int i = 0; i < len; ++i) p.rotation[vs[i]] = {2 * es[i], 2 * es[(i + len - 1) % len] + 1};
      p.holeDarts.push_back(2 * es[0]);
      if (prevAnchor >= 0) {
        const int g = new_edge(p, EdgeKind::Virtual);
        p.rotation[prevAnchor].push_back(2 * g);
        p.rotation[vs[0]].push_back(2 * g + 1);
      }
      prevAnchor = vs[0];
    }
  }
  if (!accept(p)) throw nodal::MalformedEmbedding("random generator seed is not cellular");

  int done = 0;
  for (int attempt = 0; done < steps && attempt < 60 * steps; ++attempt) {
    EmbeddedPartition q = p;
    const int V = static_cast<int>(q.vertices.size());
    const int op = pick(rng, 20);
    if (op < 9) {
      const int v = pick(rng, V), w = pick(rng, V);
      const int e = new_edge(q, EdgeKind::Nodal);
      insert_random(rng, q.rotation[v], 2 * e);
      insert_random(rng, q.rotation[w], 2 * e + 1);
    } else if (op < 15) {
      const int e = pick(rng, static_cast<int>(q.edges.size()));
      if (q.edges[e].kind == EdgeKind::Virtual) continue;
      const int head = q.edges[e].darts[1];
      const int w = vertex_of(q, head);
      const int a = new_vertex(q, VertexKind::Auxiliary);
      const int f = new_edge(q, q.edges[e].kind);
      for (int& d : q.rotation[w])
        if (d == head) d = 2 * f + 1;
      for (int& h : q.holeDarts)
        if (h == head) h = 2 * f + 1;
      q.rotation[a] = {head, 2 * f};
    } else {
      const int v = pick(rng, V);
      const int m = new_vertex(q, VertexKind::CircleMarker);
      const int c = new_edge(q, EdgeKind::Nodal);
      const int g = new_edge(q, EdgeKind::Virtual);
      insert_random(rng, q.rotation[v], 2 * g);
      q.rotation[m] = {2 * c, 2 * c + 1, 2 * g + 1};
    }
    if (accept(q)) {
      p = std::move(q);
      ++done;
    }
  }
  return p;
}

} // namespace fixtures
