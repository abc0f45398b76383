#include "doctest.h"

#include "fixtures.hpp"

#include "nodal/nodal_graph.hpp"

#include <random>

using namespace nodal;

TEST_SUITE("nodal_graph") {

TEST_CASE("multigraph counts of the basic fixtures") {
  auto c = build_multigraph(fixtures::sphere_figure_eight());
  CHECK(c.e == 0);
  CHECK(c.alpha0 == 1);
  CHECK(c.alpha1 == 2);
  CHECK(c.consistent);

  c = build_multigraph(fixtures::sphere_circle());
  CHECK(c.e == 1);
  CHECK(c.alpha0 == 1);
  CHECK(c.alpha1 == 1);

  c = build_multigraph(fixtures::disk_diameter());
  CHECK(c.alpha0 == 2);
  CHECK(c.alpha1 == 3);
  CHECK(c.consistent);
}

TEST_CASE("alpha1 - alpha0 equals sigma and degrees sum to 2 alpha1") {
  for (const auto& [name, p] : fixtures::all_fixtures()) {
    CAPTURE(name);
    const auto c = build_multigraph(p);
    CHECK(c.consistent);
    CHECK(2 * c.alpha1 == c.degreeSum);
    CHECK(Rational(c.alpha1 - c.alpha0) == partition_stats(p).sigma());
  }
}

TEST_CASE("vertex-edge additions") {
  const auto eight = fixtures::sphere_figure_eight();
  CHECK_FALSE(is_simple(eight));
  const auto [g, counts] = simplify_to_graph(eight);
  CHECK(is_simple(g));
  CHECK(g.edges.size() == 6); // each loop split into three edges
  const auto before = graph_counts(eight);
  CHECK(counts.alpha1 - counts.alpha0 == before.alpha1 - before.alpha0);

  const auto theta = fixtures::sphere_theta();
  CHECK_FALSE(is_simple(theta));
  const auto [t2, tc] = simplify_to_graph(theta);
  CHECK(is_simple(t2));
  CHECK(t2.vertices.size() == theta.vertices.size() + 2); // one Added vertex per extra parallel edge
  CHECK(simplify_to_graph(t2).first == t2);
}

TEST_CASE("simplification preserves alpha1 - alpha0, c and r") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 150; ++i) {
    const auto p = fixtures::random_partition(rng, i % 3 - 1, 2 + i % 7);
    const auto before = graph_counts(p);
    const auto [g, after] = simplify_to_graph(p);
    CAPTURE(i);
    CHECK(is_simple(g));
    CHECK(after.alpha1 - after.alpha0 == before.alpha1 - before.alpha0);
    CHECK(after.c == before.c);
    CHECK(after.r == before.r);
    if (p.surface == SurfaceSpec::sphere()) CHECK(after.r - after.c - after.alpha1 + after.alpha0 == 1);
    CHECK(verify_euler(g).pass);
  }
}

TEST_CASE("simplification is deterministic") {
  const auto a = simplify_to_graph(fixtures::annulus_two_arcs()).first;
  const auto b = simplify_to_graph(fixtures::annulus_two_arcs()).first;
  CHECK(a == b);
}

} // TEST_SUITE
