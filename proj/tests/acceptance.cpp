// Acceptance suite: one case per criterion, each printing a PASS/FAIL line.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "polykron/experiments.hpp"
#include "polykron/formats.hpp"
#include "polykron/generators.hpp"
#include "polykron/iso.hpp"
#include "polykron/planar.hpp"
#include "polykron/products.hpp"
#include "polykron/recognition.hpp"

using namespace polykron;

namespace {

struct Criterion {
  const char* id;
  bool ok = true;
  ~Criterion() { std::printf("[%s] criterion %s\n", ok ? "PASS" : "FAIL", id); }
  void check(bool cond) { ok = ok && cond; }
};

ExperimentBounds default_bounds() {
  ExperimentBounds b;
  b.nm_limit = 3;
  b.quad_m = 8;
  b.script_len = 3;
  b.max_n = 128;
  return b;
}

}  // namespace

TEST_CASE("1: cancellation over every generated polyhedral cover") {
  Criterion c{"1-cancellation"};
  auto rep = run_experiment("cancellation", default_bounds());
  c.check(rep.pass);
  c.check(!rep.budget_hit);
  CHECK(rep.pass);
  int polyhedral = 0;
  for (const auto& r : rep.instances)
    if (r.note.empty()) ++polyhedral;
  c.check(polyhedral >= 30);
  CHECK(polyhedral >= 30);
}

TEST_CASE("2: the Desargues counterexample is preserved") {
  Criterion c{"2-desargues"};
  set_search_cap(std::max(search_cap(), 128));
  RootSet rs = kronecker_roots(desargues());
  c.check(rs.roots.size() == 2);
  REQUIRE(rs.roots.size() == 2);
  bool petersen_found =
      is_isomorphic(rs.roots[0].j, petersen()) || is_isomorphic(rs.roots[1].j, petersen());
  c.check(petersen_found);
  CHECK(petersen_found);
  bool distinct = !is_isomorphic(rs.roots[0].j, rs.roots[1].j);
  c.check(distinct);
  CHECK(distinct);
  bool not_poly = !is_polyhedron(desargues());
  c.check(not_poly);
  CHECK(not_poly);
}

TEST_CASE("3: stacked-prism root existence table") {
  Criterion c{"3-stacked-rule"};
  auto rep = run_experiment("stacked_rule", default_bounds());
  c.check(rep.pass && !rep.budget_hit);
  CHECK(rep.pass);
  CHECK(rep.instances.size() == 25);
}

TEST_CASE("4: two-ways Cartesian forms") {
  Criterion c{"4-cartesian-forms"};
  auto rep = run_experiment("cc_rule", default_bounds());
  c.check(rep.pass && !rep.budget_hit);
  CHECK(rep.pass);
}

TEST_CASE("5: triple expressibility of even-index stacked cubes") {
  Criterion c{"5-triple"};
  auto rep = run_experiment("triple_expressibility", default_bounds());
  c.check(rep.pass && !rep.budget_hit);
  CHECK(rep.pass);
}

TEST_CASE("6: quadrangulation pipeline") {
  Criterion c{"6-quad"};
  auto rep = run_experiment("quad_census", default_bounds());
  c.check(rep.pass && !rep.budget_hit);
  CHECK(rep.pass);
  // grid size: sum over 2..8 of (m-1)
  CHECK(rep.instances.size() == 27);
}

TEST_CASE("7: extremal degree-sequence census") {
  Criterion c{"7-t3333"};
  auto rep = run_experiment("t3333_census", default_bounds());
  c.check(rep.pass && !rep.budget_hit);
  CHECK(rep.pass);
  std::set<int> orders;
  for (const auto& r : rep.instances)
    if (r.data.count("order")) orders.insert(std::stoi(r.data.at("order")));
  c.check(orders == std::set<int>{7, 10, 13, 16, 19});
  CHECK(orders == std::set<int>{7, 10, 13, 16, 19});
}

TEST_CASE("8: cubic covers with exhaustive clause coverage") {
  Criterion c{"8-cubic"};
  auto rep = run_experiment("cubic_census", default_bounds());
  c.check(rep.pass && !rep.budget_hit);
  CHECK(rep.pass);
  int mutations = 0;
  for (const auto& r : rep.instances)
    if (r.key.rfind("mutate(", 0) == 0) ++mutations;
  c.check(mutations == 6);
  CHECK(mutations == 6);
}

TEST_CASE("9: global degree-3 and quadrilateral-face bounds") {
  Criterion c{"9-bounds"};
  auto rep = run_experiment("bounds_check", default_bounds());
  c.check(rep.pass && !rep.budget_hit);
  CHECK(rep.pass);
}

TEST_CASE("10: property suites") {
  Criterion c{"10-properties"};

  // Euler formula on every traced embedding of a mixed corpus
  std::vector<Graph> corpus{complete(4),         stacked_prism(4, 2), stacked_prism(6, 3),
                            stacked_prism(5, 2), ladder(5),           quad_factor(5, 2).j,
                            c0_representative(), c2_representative()};
  std::mt19937 rng(424242);
  for (int iter = 0; iter < 60; ++iter) {
    Graph g = oracle::random_graph(rng, 3 + rng() % 8, 0.35);
    if (is_planar(g) && is_connected(g) && g.m() > 0) corpus.push_back(g);
  }
  for (const auto& g : corpus) {
    if (!is_planar(g)) continue;
    auto emb = planar_embed(g);
    auto fs = faces(*emb);
    if (is_connected(g) && g.m() > 0) {
      bool euler = fs.p - fs.q + fs.face_count() == 2;
      c.check(euler);
      CHECK(euler);
    }
    int total = 0;
    for (const auto& f : fs.faces) total += static_cast<int>(f.verts.size());
    c.check(total == 2 * g.m());
    CHECK(total == 2 * g.m());
  }

  // cover involution existence and product size formulas
  for (int iter = 0; iter < 80; ++iter) {
    Graph a = oracle::random_graph(rng, 2 + rng() % 6, 0.5);
    Graph b = oracle::random_graph(rng, 2 + rng() % 6, 0.5);
    auto kr = kronecker(a, b);
    c.check(kr.g.n == a.n * b.n && kr.g.m() == 2 * a.m() * b.m());
    CHECK(kr.g.m() == 2 * a.m() * b.m());
    auto ca = cartesian(a, b);
    c.check(ca.g.m() == a.n * b.m() + b.n * a.m());
    auto cov = cover(a);
    auto sigma = cover_involution(a);
    bool involution_ok = apply_permutation(cov.g, sigma).edges == cov.g.edges;
    for (int v = 0; v < cov.g.n; ++v)
      involution_ok = involution_ok && sigma[v] != v && !cov.g.has_edge(v, sigma[v]);
    c.check(involution_ok);
    CHECK(involution_ok);
  }

  // format round trips on >= 10^3 random graphs up to 20 vertices
  int trips = 0;
  for (int iter = 0; iter < 1100; ++iter) {
    int n = static_cast<int>(rng() % 21);
    Graph g = oracle::random_graph(rng, n, 0.3 + 0.4 * (rng() % 100) / 100.0);
    Graph b6 = parse_graph6(emit_graph6(g));
    Graph bj = parse_json(emit_json(g));
    bool ok = b6.n == g.n && b6.edges == g.edges && bj.n == g.n && bj.edges == g.edges;
    c.check(ok);
    if (!ok) CHECK(ok);
    ++trips;
  }
  CHECK(trips >= 1000);
}
