#include "doctest.h"
#include "oracles.hpp"
#include "polykron/generators.hpp"
#include "polykron/iso.hpp"
#include "polykron/planar.hpp"
#include "polykron/products.hpp"
#include "polykron/recognition.hpp"

using namespace polykron;

TEST_CASE("basic families") {
  CHECK(is_isomorphic(ladder(4), cartesian(path(4), complete(2)).g));
  CHECK(is_isomorphic(ladder(2), cycle(4)));
  CHECK(ladder(1).m() == 1);
  CHECK(is_isomorphic(stacked_prism(4, 2), cartesian(cycle(4), path(2)).g));
  CHECK_THROWS_AS(cycle(2), Error);
  CHECK_THROWS_AS(path(0), Error);
  CHECK_THROWS_AS(stacked_prism(2, 2), Error);
  CHECK(petersen().m() == 15);
  CHECK(desargues().m() == 30);
  CHECK(is_outerplanar(ladder(5)));
  for (int ell = 2; ell <= 6; ++ell)
    CHECK(is_isomorphic(ladder(ell), cartesian(path(ell), complete(2)).g));
}

TEST_CASE("stacked cube factor covers") {
  auto f12 = stacked_cube_factor(1, 2);
  CHECK(is_isomorphic(cover(f12.j).g, stacked_prism(4, 4)));
  CHECK(verify_factor_witness(f12.j, f12.witness).ok);
  CHECK(!is_planar(f12.j));

  auto f11 = stacked_cube_factor(1, 1);
  CHECK(is_isomorphic(f11.j, complete(4)));
  CHECK(is_planar(f11.j));
  CHECK(is_isomorphic(cover(f11.j).g, stacked_prism(4, 2)));

  auto f21 = stacked_cube_factor(2, 1);
  CHECK(is_isomorphic(cover(f21.j).g, stacked_prism(8, 2)));

  for (int N = 1; N <= 3; ++N)
    for (int M = 1; M <= 3; ++M) {
      auto fr = stacked_cube_factor(N, M);
      CHECK(is_isomorphic(cover(fr.j).g, stacked_prism(4 * N, 2 * M)));
      CHECK(verify_factor_witness(fr.j, fr.witness).ok);
      if (!(N == 1 && M == 1)) CHECK(!is_planar(fr.j));
    }
}

TEST_CASE("odd prism factor covers") {
  CHECK(is_isomorphic(cover(odd_prism_factor(1, 3)).g, stacked_prism(6, 3)));
  CHECK(is_isomorphic(cover(odd_prism_factor(1, 1)).g, cycle(6)));
  CHECK(is_isomorphic(cover(odd_prism_factor(2, 2)).g, stacked_prism(10, 2)));
  for (int N = 1; N <= 3; ++N)
    for (int M = 2; M <= 3; ++M)
      CHECK(is_isomorphic(cover(odd_prism_factor(N, M)).g, stacked_prism(4 * N + 2, M)));
}

TEST_CASE("quad factor grid") {
  for (int m = 2; m <= 6; ++m) {
    for (int i = 1; i <= m - 1; ++i) {
      auto qf = quad_factor(m, i);
      CHECK(verify_factor_witness(qf.j, qf.witness).ok);
      CHECK(verify_quad_witness(qf.j, qf.witness, qf.quad));
      Graph g = cover(qf.j).g;
      CHECK(is_quadrangulation(g));
      CHECK(is_polyhedron(g));
    }
  }
  CHECK_THROWS_AS(quad_factor(1, 1), Error);
  CHECK_THROWS_AS(quad_factor(3, 3), Error);
}

TEST_CASE("transformation scripts: order, degrees, class") {
  Graph j7 = t3333_build({{}, T3Final::f1});
  CHECK(j7.n == 7);
  CHECK(degree_sequence(j7) == std::vector<int>{4, 4, 4, 3, 3, 3, 3});
  CHECK(classify_odd_faces(j7).tag == OddFaceTag::c3);

  Graph j10 = t3333_build({{}, T3Final::f2});
  CHECK(j10.n == 10);
  CHECK(degree_sequence(j10) == std::vector<int>{4, 4, 4, 4, 4, 4, 3, 3, 3, 3});

  Graph j10b = t3333_build({{T3Move::t1}, T3Final::f1});
  CHECK(j10b.n == 10);
  Graph cov = cover(j10b).g;
  auto ds = degree_sequence(cov);
  CHECK(std::count(ds.begin(), ds.end(), 4) == cov.n - 8);
  CHECK(std::count(ds.begin(), ds.end(), 3) == 8);
  CHECK(classify_odd_faces(j10b).tag == OddFaceTag::c3);

  for (T3Move mv : {T3Move::t1, T3Move::t2, T3Move::t2m}) {
    Graph j = t3333_build({{mv, mv}, T3Final::f2});
    CHECK(j.n == 16);
    CHECK(is_planar(j));
    CHECK(classify_odd_faces(j).tag == OddFaceTag::c3);
  }
}

TEST_CASE("cubic build demo specs") {
  auto specs = cubic_demo_specs();
  REQUIRE(specs.size() >= 3);
  auto r0 = cubic_build(specs[0]);
  CHECK(r0.j.n == 12);
  for (int v = 0; v < r0.j.n; ++v) CHECK(r0.j.degree(v) == 3);
  Graph cov = cover(r0.j).g;
  CHECK(cov.n == 24);
  CHECK(is_polyhedron(cov));
  for (int v = 0; v < cov.n; ++v) CHECK(cov.degree(v) == 3);

  for (const auto& spec : specs) {
    auto r = cubic_build(spec);
    CHECK(bipartition(r.j1).has_value());
    CHECK(verify_factor_witness(r.j, r.witness).ok);
    Graph c = cover(r.j).g;
    CHECK(is_polyhedron(c));
    for (int v = 0; v < c.n; ++v) CHECK(c.degree(v) == 3);
  }
}

TEST_CASE("cubic build clause violations") {
  auto specs = cubic_demo_specs();
  // K4 has no even region at all
  {
    Graph k4 = complete(4);
    auto emb = planar_embed(k4);
    FaceSet fs = faces(*emb);
    CubicBuildSpec s;
    s.j2 = to_multigraph(k4);
    s.region = fs.faces[0].verts;
    s.splits = {{fs.faces[0].darts[0] >> 1, 2}, {fs.faces[0].darts[1] >> 1, 2}};
    try {
      cubic_build(s);
      FAIL("expected violation");
    } catch (const Error& e) {
      CHECK(e.code == errc::spec_violation);
      CHECK(e.clause == "even-region");
    }
  }
  // a single split edge
  {
    CubicBuildSpec s = specs[0];
    s.splits = {{s.splits[0].first, 2}};
    try {
      cubic_build(s);
      FAIL("expected violation");
    } catch (const Error& e) {
      CHECK(e.clause == "min-two-split-edges");
    }
  }
}

TEST_CASE("quad face expansion") {
  Graph cube = stacked_prism(4, 2);
  auto emb = planar_embed(cube);
  auto face = faces(*emb).faces[0].verts;
  Graph e1 = quad_expand(cube, face);
  CHECK(e1.n == 12);
  CHECK(is_planar(e1));
  for (int v = 0; v < e1.n; ++v) CHECK(e1.degree(v) == 3);
  {
    auto em = planar_embed(e1);
    for (const auto& f : faces(*em).faces) CHECK(f.verts.size() % 2 == 0);
  }

  // expanding a square face of the pentagonal prism keeps class C1
  Graph pent = stacked_prism(5, 2);
  auto embp = planar_embed(pent);
  std::vector<int> quad;
  for (const auto& f : faces(*embp).faces)
    if (f.verts.size() == 4) {
      quad = f.verts;
      break;
    }
  Graph e2 = quad_expand(pent, quad);
  CHECK(e2.n == 14);
  CHECK(classify_odd_faces(e2).tag == OddFaceTag::c1);

  // iterate twice on the cube
  auto emb1 = planar_embed(e1);
  std::vector<int> q2;
  for (const auto& f : faces(*emb1).faces)
    if (f.verts.size() == 4) {
      q2 = f.verts;
      break;
    }
  Graph e3 = quad_expand(e1, q2);
  CHECK(e3.n == 16);
  CHECK(is_planar(e3));
  for (int v = 0; v < e3.n; ++v) CHECK(e3.degree(v) == 3);

  CHECK_THROWS_AS(quad_expand(stacked_prism(4, 3), {0, 1, 2, 3}), Error);  // not cubic
  CHECK_THROWS_AS(quad_expand(complete(4), {0, 1, 2, 3}), Error);          // no quad face
}

TEST_CASE("H family and its partner factor") {
  // ladder case: H = F8
  Graph h = dou_H({4, {{1, 6}, {2, 5}}});
  CHECK(is_isomorphic(h, ladder(4)));
  Graph j = dou_J(h);
  CHECK(is_isomorphic(prism(h), cover(j).g));
  CHECK(is_isomorphic(prism(h), stacked_prism(4, 4)));

  // no chords, odd ell: the pentagonal prism pair
  Graph h5 = dou_H({5, {}});
  Graph j5 = dou_J(h5);
  CHECK(is_isomorphic(j5, stacked_prism(5, 2)));
  CHECK(is_isomorphic(prism(h5), cover(j5).g));

  // invalid chord sets
  CHECK_THROWS_AS(dou_H({4, {{0, 3}}}), Error);          // not shift-closed
  CHECK_THROWS_AS(dou_H({4, {{0, 4}, {1, 5}}}), Error);  // antipodal
  CHECK_THROWS_AS(dou_H({4, {{0, 2}, {4, 6}}}), Error);  // parity
  CHECK_THROWS_AS(dou_H({3, {{0, 3}, {3, 0}}}), Error);  // antipodal for ell=3
}

TEST_CASE("catalog representative structure") {
  Graph c0 = c0_representative();
  CHECK(c0.n == 20);
  CHECK(vertex_connectivity(c0) == 2);
  Graph c2 = c2_representative();
  CHECK(c2.n == 28);
  CHECK(is_polyhedron(c2));
}
