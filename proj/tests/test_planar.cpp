#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "polykron/generators.hpp"
#include "polykron/iso.hpp"
#include "polykron/planar.hpp"
#include "polykron/products.hpp"

using namespace polykron;

namespace {

Graph cube_graph() { return stacked_prism(4, 2); }

std::multiset<int> face_lengths(const Graph& g) {
  auto emb = planar_embed(g);
  REQUIRE(emb.has_value());
  auto fs = faces(*emb);
  std::multiset<int> out;
  for (const auto& f : fs.faces) out.insert(static_cast<int>(f.verts.size()));
  return out;
}

}  // namespace

TEST_CASE("planarity basics") {
  CHECK(!is_planar(complete(5)));
  CHECK(is_planar(complete(4)));
  CHECK(is_planar(cube_graph()));
  CHECK(!is_planar(Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                             {4, 0}, {4, 1}, {4, 2}, {5, 0}, {5, 1}, {5, 2}})));  // K5-ish
  // cube plus both diagonals of one face is non-planar
  Graph cube = cube_graph();
  auto emb = planar_embed(cube);
  auto fs = faces(*emb);
  auto face = fs.faces[0].verts;
  std::vector<std::pair<int, int>> es = cube.edges;
  es.emplace_back(face[0], face[2]);
  es.emplace_back(face[1], face[3]);
  CHECK(!is_planar(Graph(8, es)));
}

TEST_CASE("planarity matches the minor-search oracle on random graphs") {
  std::mt19937 rng(20240);
  int planar_seen = 0, nonplanar_seen = 0;
  for (int iter = 0; iter < 120; ++iter) {
    int n = 4 + static_cast<int>(rng() % 6);
    double p = 0.3 + 0.4 * (rng() % 100) / 100.0;
    Graph g = oracle::random_graph(rng, n, p);
    bool expect = oracle::planar_exhaustive(g);
    CHECK(is_planar(g) == expect);
    (expect ? planar_seen : nonplanar_seen)++;
  }
  CHECK(planar_seen > 10);
  CHECK(nonplanar_seen > 10);
}

TEST_CASE("face tracing on the cube and tetrahedron") {
  auto cube_faces = face_lengths(cube_graph());
  CHECK(cube_faces == std::multiset<int>{4, 4, 4, 4, 4, 4});

  auto k4_faces = face_lengths(complete(4));
  CHECK(k4_faces == std::multiset<int>{3, 3, 3, 3});

  auto emb = planar_embed(cube_graph());
  auto st = face_stats(faces(*emb));
  CHECK(st.p == 8);
  CHECK(st.q == 12);
  CHECK(st.r == 6);
  CHECK(st.r_k.at(4) == 6);
}

TEST_CASE("Euler formula and edge-side count on embeddings (property)") {
  std::mt19937 rng(7);
  int connected_checked = 0;
  for (int iter = 0; iter < 150; ++iter) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = oracle::random_graph(rng, n, 0.35);
    auto emb = planar_embed(g);
    if (!emb) continue;
    auto fs = faces(*emb);
    int total_len = 0;
    for (const auto& f : fs.faces) total_len += static_cast<int>(f.verts.size());
    CHECK(total_len == 2 * g.m());
    if (is_connected(g) && g.m() > 0) {
      ++connected_checked;
      CHECK(fs.p - fs.q + fs.face_count() == 2);
    }
  }
  CHECK(connected_checked > 30);
}

TEST_CASE("disconnected embeddings merge the outer face") {
  Graph two_squares(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  auto emb = planar_embed(two_squares);
  REQUIRE(emb.has_value());
  auto fs = faces(*emb);
  CHECK(fs.merged_outer);
  CHECK(fs.faces.size() == 4);
  CHECK(fs.face_count() == 3);
  CHECK(fs.p - fs.q + fs.face_count() == 3);  // 1 + #components
}

TEST_CASE("multigraph embeddings: loops, parallel edges, 2-gon faces") {
  Multigraph theta(2, {{0, 1}, {0, 1}, {0, 1}});
  auto emb = planar_embed(theta);
  REQUIRE(emb.has_value());
  auto fs = faces(*emb);
  CHECK(fs.faces.size() == 3);
  for (const auto& f : fs.faces) CHECK(f.verts.size() == 2);

  Multigraph loopy(2, {{0, 0}, {0, 1}});
  auto emb2 = planar_embed(loopy);
  REQUIRE(emb2.has_value());
  auto fs2 = faces(*emb2);
  int total = 0;
  for (const auto& f : fs2.faces) total += static_cast<int>(f.verts.size());
  CHECK(total == 2 * loopy.m());

  // K5 as multigraph still non-planar
  Multigraph k5m = to_multigraph(complete(5));
  CHECK(!is_planar(k5m));
}

TEST_CASE("Whitney: face multiset stable under relabeling for 3-connected") {
  std::mt19937 rng(99);
  std::vector<Graph> graphs{cube_graph(), complete(4), stacked_prism(5, 2),
                            stacked_prism(6, 3)};
  for (const auto& g : graphs) {
    auto base_faces = face_lengths(g);
    std::set<std::vector<int>> base_keys;
    {
      auto emb = planar_embed(g);
      for (const auto& f : faces(*emb).faces) base_keys.insert(canonical_face_key(f.verts));
    }
    for (int t = 0; t < 5; ++t) {
      auto perm = oracle::random_permutation(rng, g.n);
      Graph h = apply_permutation(g, perm);
      CHECK(face_lengths(h) == base_faces);
      // canonical face walks map onto each other through the permutation
      auto emb = planar_embed(h);
      std::set<std::vector<int>> keys;
      for (const auto& f : faces(*emb).faces) {
        auto walk = f.verts;
        std::vector<int> inv(g.n);
        for (int v = 0; v < g.n; ++v) inv[perm[v]] = v;
        for (int& v : walk) v = inv[v];
        keys.insert(canonical_face_key(walk));
      }
      CHECK(keys == base_keys);
    }
  }
}

TEST_CASE("polyhedron recognition") {
  CHECK(is_polyhedron(cube_graph()));
  CHECK(is_polyhedron(complete(4)));
  CHECK(!is_polyhedron(cycle(6)));
  CHECK(!is_polyhedron(complete(5)));  // 4-connected but not planar
  CHECK(!is_polyhedron(path(4)));
}

TEST_CASE("outerplanarity") {
  CHECK(is_outerplanar(ladder(4)));
  CHECK(!is_outerplanar(complete(4)));
  for (int n = 3; n <= 8; ++n) CHECK(is_outerplanar(cycle(n)));
  CHECK(is_outerplanar(path(5)));
  CHECK(!is_outerplanar(stacked_prism(4, 2)));
}

TEST_CASE("outerplanar + 2-connected implies Hamiltonian (brute force)") {
  std::mt19937 rng(123);
  int checked = 0;
  for (int iter = 0; iter < 400 && checked < 25; ++iter) {
    int n = 4 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_graph(rng, n, 0.3);
    if (!is_outerplanar(g) || !is_k_connected(g, 2)) continue;
    ++checked;
    CHECK(oracle::hamiltonian_exhaustive(g));
  }
  CHECK(checked >= 10);
}

TEST_CASE("quadrangulation recognition") {
  CHECK(is_quadrangulation(cube_graph()));
  CHECK(is_quadrangulation(stacked_prism(4, 4)));
  CHECK(!is_quadrangulation(stacked_prism(6, 2)));  // two hexagons
  CHECK(!is_quadrangulation(complete(4)));
}

TEST_CASE("bipartite planar graphs have only even faces (property)") {
  std::mt19937 rng(5150);
  int checked = 0;
  for (int iter = 0; iter < 200; ++iter) {
    int n = 3 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_graph(rng, n, 0.3);
    if (!bipartition(g) || !is_planar(g)) continue;
    ++checked;
    auto emb = planar_embed(g);
    for (const auto& f : faces(*emb).faces) CHECK(f.verts.size() % 2 == 0);
  }
  CHECK(checked > 40);
}

TEST_CASE("odd face pattern of the pentagonal prism and K4") {
  Graph pent = stacked_prism(5, 2);
  auto emb = planar_embed(pent);
  auto pat = odd_face_pattern(pent, *emb);
  REQUIRE(pat.odd_faces.size() == 2);
  CHECK(pat.pairwise.at({0, 1}).empty());

  Graph k4 = complete(4);
  auto emb4 = planar_embed(k4);
  auto pat4 = odd_face_pattern(k4, *emb4);
  CHECK(pat4.odd_faces.size() == 4);
  for (const auto& [key, inter] : pat4.pairwise) CHECK(!inter.empty());
  int with_zero = 0;
  for (const auto& [key, inter] : pat4.triples)
    if (!inter.empty()) ++with_zero;
  CHECK(with_zero == 4);  // each triple of K4 faces meets in one corner
}

TEST_CASE("each quadrangular face of C6 x P3 touches at least three quadrangles") {
  Graph g = stacked_prism(6, 3);
  auto emb = planar_embed(g);
  auto fs = faces(*emb);
  std::vector<int> face_of(2 * g.m(), -1);
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f)
    for (int d : fs.faces[f].darts) face_of[d] = f;
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
    if (fs.faces[f].verts.size() != 4) continue;
    std::set<int> nbr;
    for (int d : fs.faces[f].darts) {
      int other = face_of[Embedding::dart_twin(d)];
      if (fs.faces[other].verts.size() == 4) nbr.insert(other);
    }
    CHECK(nbr.size() >= 3);
  }
}

TEST_CASE("planar dual of the cube is the octahedron") {
  Graph cube = cube_graph();
  auto emb = planar_embed(cube);
  Multigraph dual = planar_dual(*emb, faces(*emb));
  REQUIRE(dual.is_simple());
  Graph oct = dual.to_graph();
  CHECK(oct.n == 6);
  CHECK(oct.m() == 12);
  for (int v = 0; v < 6; ++v) CHECK(oct.degree(v) == 4);
}

TEST_CASE("corrupt rotations are reported") {
  Graph g = cycle(4);
  auto emb = planar_embed(g);
  REQUIRE(emb.has_value());
  Embedding bad = *emb;
  bad.rot[0].pop_back();
  CHECK_THROWS_AS(faces(bad), Error);
}
