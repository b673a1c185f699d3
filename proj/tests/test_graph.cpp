#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "polykron/generators.hpp"
#include "polykron/graph.hpp"

using namespace polykron;

namespace {

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return es;
}

Graph cube_graph() {
  // vertices = corners of {0,1}^3, edges between words at Hamming distance 1
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < 8; ++u)
    for (int b = 0; b < 3; ++b)
      if (u < (u ^ (1 << b))) es.emplace_back(u, u ^ (1 << b));
  return build_graph(8, es);
}

}  // namespace

TEST_CASE("build_graph basics and validation") {
  Graph k4 = build_graph(4, all_pairs(4));
  CHECK(k4.m() == 6);
  for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);

  Graph k2 = build_graph(2, {{0, 1}});
  CHECK(k2.m() == 1);

  Graph cube = cube_graph();
  CHECK(cube.m() == 12);
  CHECK(bipartition(cube).has_value());
  for (int v = 0; v < 8; ++v) CHECK(cube.degree(v) == 3);

  CHECK_THROWS_WITH_AS(build_graph(3, {{0, 0}}), "loop edge rejected", Error);
  CHECK_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(build_graph(3, {{0, 3}}), Error);
  try {
    build_graph(3, {{1, 2}, {2, 1}});
    FAIL("expected duplicate edge error");
  } catch (const Error& e) {
    CHECK(e.code == errc::duplicate_edge);
  }
}

TEST_CASE("bipartition examples") {
  CHECK(!bipartition(cycle(5)).has_value());

  auto b6 = bipartition(cycle(6));
  REQUIRE(b6.has_value());
  CHECK(b6->class_a == std::vector<int>{0, 2, 4});
  CHECK(b6->class_b == std::vector<int>{1, 3, 5});

  // cube: classes are the two antipodal tetrads (even/odd parity of bits),
  // cross-checked against the exhaustive 2-coloring oracle
  Graph cube = cube_graph();
  auto bc = bipartition(cube);
  REQUIRE(bc.has_value());
  CHECK(bc->class_a == std::vector<int>{0, 3, 5, 6});
  CHECK(bc->class_b == std::vector<int>{1, 2, 4, 7});
  CHECK(oracle::two_colorable_exhaustive(cube));
}

TEST_CASE("bipartition exists iff no odd cycle (exhaustive cross-check)") {
  std::mt19937 rng(12345);
  for (int iter = 0; iter < 200; ++iter) {
    int n = 2 + static_cast<int>(rng() % 11);
    Graph g = oracle::random_graph(rng, n, 0.35);
    CHECK(bipartition(g).has_value() == !oracle::has_odd_cycle(g));
    CHECK(bipartition(g).has_value() == oracle::two_colorable_exhaustive(g));
  }
}

TEST_CASE("vertex connectivity") {
  CHECK(vertex_connectivity(cube_graph()) == 3);
  CHECK(vertex_connectivity(cycle(6)) == 2);
  CHECK(vertex_connectivity(path(3)) == 1);
  CHECK_THROWS_AS(vertex_connectivity(Graph(1, {})), Error);

  for (int n = 3; n <= 8; ++n) {
    CHECK(vertex_connectivity(cycle(n)) == 2);
    CHECK(vertex_connectivity(complete(n)) == n - 1);
  }

  std::mt19937 rng(777);
  for (int iter = 0; iter < 60; ++iter) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_graph(rng, n, 0.5);
    CHECK(vertex_connectivity(g) == oracle::connectivity_exhaustive(g));
  }
}

TEST_CASE("semi-hyper-2-connected") {
  auto r6 = semi_hyper_2_connected(cycle(6));
  CHECK(r6.ok);
  CHECK(r6.two_cuts.size() == 9);  // non-adjacent pairs of C6

  CHECK(!semi_hyper_2_connected(cube_graph()).ok);  // connectivity 3

  // two triangles sharing a vertex: connectivity 1
  Graph bowtie = build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  CHECK(!semi_hyper_2_connected(bowtie).ok);

  // theta-ish simple graph: K4 minus an edge has 2-cut {0,1} giving 2 comps
  Graph diamond = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  auto rd = semi_hyper_2_connected(diamond);
  CHECK(rd.ok);
  REQUIRE(rd.two_cuts.size() == 1);
  CHECK(rd.two_cuts[0].u == 0);
  CHECK(rd.two_cuts[0].v == 1);
}

TEST_CASE("subdivide") {
  Graph k2 = build_graph(2, {{0, 1}});
  auto p4 = subdivide(k2, {0, 1}, 2);
  CHECK(p4.g.n == 4);
  CHECK(p4.inserted == std::vector<int>{2, 3});
  CHECK(p4.g.degree(0) == 1);
  CHECK(p4.g.degree(2) == 2);

  auto c6 = subdivide(cycle(4), {0, 1}, 2);
  CHECK(c6.g.n == 6);
  for (int v = 0; v < 6; ++v) CHECK(c6.g.degree(v) == 2);

  CHECK_THROWS_AS(subdivide(k2, {0, 2}, 1), Error);

  // subdividing one copy of a parallel pair leaves a simple multigraph there
  Multigraph theta(2, {{0, 1}, {0, 1}, {0, 1}});
  auto sub = subdivide(theta, 0, 1);
  CHECK(sub.g.n == 3);
  CHECK(sub.g.m() == 4);
  CHECK(sub.g.degree(2) == 2);
  CHECK(!sub.g.is_simple());  // two parallel copies remain
}

TEST_CASE("smooth_degree2") {
  // C6 keeping two antipodal vertices -> double edge on 2 vertices
  auto m = smooth_degree2(cycle(6), {1, 2, 4, 5});
  CHECK(m.n == 2);
  CHECK(m.m() == 2);
  CHECK(!m.is_simple());
  CHECK(m.degree(0) == 2);

  auto k2 = smooth_degree2(path(4), {1, 2});
  CHECK(k2.n == 2);
  CHECK(k2.m() == 1);

  Graph k2g = build_graph(2, {{0, 1}});
  CHECK_THROWS_AS(smooth_degree2(k2g, {0}), Error);

  // smoothing a full cycle of degree-2 vertices erases it
  auto none = smooth_degree2(cycle(4), {0, 1, 2, 3});
  CHECK(none.n == 0);
  CHECK(none.m() == 0);
}

TEST_CASE("subdivide then smooth is identity (property)") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 50; ++iter) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = oracle::random_graph(rng, n, 0.5);
    if (g.m() == 0) continue;
    auto edge = g.edges[rng() % g.edges.size()];
    int times = 1 + static_cast<int>(rng() % 3);
    auto sub = subdivide(g, edge, times);
    Multigraph back = smooth_degree2(sub.g, sub.inserted);
    REQUIRE(back.is_simple());
    Graph back_g = back.to_graph();
    CHECK(back_g.n == g.n);
    CHECK(back_g.edges == g.edges);  // vertex ids below n are preserved
  }
}

TEST_CASE("degree sequence handshake (property)") {
  std::mt19937 rng(4242);
  for (int iter = 0; iter < 100; ++iter) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = oracle::random_graph(rng, n, 0.4);
    auto ds = degree_sequence(g);
    long long sum = 0;
    for (int d : ds) sum += d;
    CHECK(sum == 2LL * g.m());
    CHECK(std::is_sorted(ds.rbegin(), ds.rend()));
  }
}

TEST_CASE("multigraph degree counts loops twice") {
  Multigraph m(2, {{0, 0}, {0, 1}});
  CHECK(m.degree(0) == 3);
  CHECK(m.degree(1) == 1);
  CHECK(m.has_loop());
  CHECK(!m.is_simple());
}
