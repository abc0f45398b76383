#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"

#include "nodal/errors.hpp"
#include "nodal/nodal_graph.hpp"
#include "nodal/partition.hpp"

#include <random>

using namespace nodal;

TEST_SUITE("partition") {

TEST_CASE("sphere circle and figure-eight stats") {
  auto s = partition_stats(fixtures::sphere_circle());
  CHECK(s.kappa == 2);
  CHECK(s.beta == 1);
  CHECK(s.sigmaI == Rational(0));
  CHECK(s.sigmaB == Rational(0));

  s = partition_stats(fixtures::sphere_figure_eight());
  CHECK(s.kappa == 3);
  CHECK(s.beta == 1);
  CHECK(s.sigmaI == Rational(1));
}

TEST_CASE("diameter halves the disk") {
  const auto p = fixtures::disk_diameter();
  const auto s = partition_stats(p);
  CHECK(s.kappa == 2);
  CHECK(s.beta == 0);
  CHECK(s.sigmaB == Rational(1));
  const auto r = verify_euler(p);
  CHECK(r.pass);
  CHECK(r.relation == "=");
  CHECK(r.predicted == Rational(2));
}

TEST_CASE("face counts agree with the permutation oracle on untwisted fixtures") {
  for (const auto& [name, p] : fixtures::all_fixtures()) {
    bool twisted = false;
    for (const auto& e : p.edges) twisted = twisted || e.twisted;
    if (twisted || !is_orientable(closed_model(p.surface))) continue;
    CAPTURE(name);
    CHECK(static_cast<int>(trace_faces(p).size()) == oracle::orientable_face_count(p));
  }
  CHECK(trace_faces(fixtures::sphere_circle()).size() == 2);
  CHECK(trace_faces(fixtures::sphere_figure_eight()).size() == 3);
  const auto theta = fixtures::sphere_theta();
  const int F = static_cast<int>(trace_faces(theta).size());
  CHECK(F == 3);
  CHECK(static_cast<int>(theta.vertices.size()) - static_cast<int>(theta.edges.size()) + F == 2);
}

TEST_CASE("Euler identities on every fixture") {
  for (const auto& [name, p] : fixtures::all_fixtures()) {
    CAPTURE(name);
    CHECK(verify_euler(p).pass);
  }
  const auto torus = verify_euler(fixtures::torus_circle());
  CHECK(torus.relation == ">=");
  CHECK(torus.stats.kappa == 1);
  CHECK(torus.chi == 0);
}

TEST_CASE("Moebius fixtures") {
  auto r = verify_euler(fixtures::moebius_core_circle());
  CHECK(r.stats.kappa == 1);
  CHECK(r.stats.omega == 0);
  CHECK(r.stats.beta == 1);
  CHECK(r.stats.sigma() == Rational(0));
  CHECK(r.pass);

  r = verify_euler(fixtures::moebius_parallel_circle());
  CHECK(r.stats.kappa == 2);
  CHECK(r.stats.omega == 1);
  CHECK(r.stats.beta == 1);
  CHECK(r.pass);

  r = verify_euler(fixtures::moebius_two_arcs());
  CHECK(r.stats.kappa == 2);
  CHECK(r.stats.omega == 0);
  CHECK(r.stats.sigma() == Rational(2));
  CHECK(r.pass);
}

TEST_CASE("boundary parity") {
  CHECK(check_boundary_parity(fixtures::disk_diameter()).pass);
  const auto odd = check_boundary_parity(fixtures::disk_odd_parity());
  CHECK_FALSE(odd.pass);
  REQUIRE(odd.components.size() == 1);
  CHECK(odd.components[0].rhoSum == 1);
  const auto ann = check_boundary_parity(fixtures::annulus_two_arcs());
  CHECK(ann.pass);
  REQUIRE(ann.components.size() == 2);
  CHECK(ann.components[0].rhoSum == 2);
  CHECK(ann.components[1].rhoSum == 2);
}

TEST_CASE("normalize") {
  const auto eight = fixtures::sphere_figure_eight();
  CHECK(non_normal_vertices(eight).size() == 1);
  const auto n = normalize(eight);
  const auto s = partition_stats(n);
  CHECK(s.kappa == 4);
  CHECK(s.sigma() == Rational(2));
  CHECK(non_normal_vertices(n).empty());
  CHECK(normalize(n) == n);

  const auto diam = fixtures::disk_diameter();
  CHECK(normalize(diam) == diam);

  const auto pinched = fixtures::disk_pinched_loop();
  const auto before = partition_stats(pinched);
  const auto after = partition_stats(normalize(pinched));
  CHECK(after.kappa == before.kappa + 1);
  CHECK(after.sigma() == before.sigma() + Rational(1));

  CHECK_THROWS_AS(normalize(fixtures::disk_odd_parity()), MalformedEmbedding);
}

TEST_CASE("normalize preserves beta, kappa - sigma and omega") {
  for (const auto& [name, p] : fixtures::all_fixtures()) {
    if (name == "disk odd parity") continue;
    CAPTURE(name);
    const auto a = partition_stats(p);
    const auto q = normalize(p);
    const auto b = partition_stats(q);
    CHECK(a.beta == b.beta);
    CHECK(a.omega == b.omega);
    CHECK(Rational(a.kappa) - a.sigma() == Rational(b.kappa) - b.sigma());
    CHECK(normalize(q) == q);
  }
}

TEST_CASE("random planar partitions: Euler, V - E + F and normalization") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 300; ++i) {
    const int holes = i % 4 - 1;
    const auto p = fixtures::random_partition(rng, holes, 2 + i % 9);
    CAPTURE(i);
    const auto faces = trace_faces(p);
    CHECK(static_cast<int>(p.vertices.size()) - static_cast<int>(p.edges.size()) + static_cast<int>(faces.size()) == 2);
    CHECK(static_cast<int>(faces.size()) == oracle::orientable_face_count(p));
    CHECK(verify_euler(p).pass);
    const auto q = normalize(p);
    const auto a = partition_stats(p), b = partition_stats(q);
    CHECK(a.beta == b.beta);
    CHECK(Rational(a.kappa) - a.sigma() == Rational(b.kappa) - b.sigma());
    CHECK(normalize(q) == q);
  }
}

TEST_CASE("malformed embeddings are rejected") {
  auto p = fixtures::sphere_figure_eight();
  p.rotation[0].pop_back();
  CHECK_THROWS_AS(validate(p), MalformedEmbedding);

  p = fixtures::sphere_theta();
  std::swap(p.rotation[0][0], p.rotation[0][1]); // no longer cellular on the sphere
  CHECK_THROWS_AS(validate(p), MalformedEmbedding);

  p = fixtures::sphere_circle();
  p.vertices[0].kind = VertexKind::InteriorSingular;
  p.vertices[0].index = 4;
  CHECK_THROWS_AS(validate(p), MalformedEmbedding);

  p = fixtures::disk_diameter();
  p.holeDarts = {0};
  CHECK_THROWS_AS(validate(p), MalformedEmbedding);

  p = fixtures::moebius_two_arcs();
  p.edges[1].twisted = false;
  CHECK_THROWS_AS(validate(p), MalformedEmbedding);
}

TEST_CASE("assign_vertex_kinds recovers declared kinds") {
  for (const auto& [name, p] : fixtures::all_fixtures()) {
    auto q = p;
    for (auto& v : q.vertices)
      if (v.kind != VertexKind::CircleMarker) v = {};
    assign_vertex_kinds(q);
    CAPTURE(name);
    CHECK(q.vertices == p.vertices);
  }
}

} // TEST_SUITE
