#include "polykron/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <set>
#include <sstream>

#include "polykron/formats.hpp"
#include "polykron/generators.hpp"
#include "polykron/iso.hpp"
#include "polykron/parallel.hpp"
#include "polykron/planar.hpp"
#include "polykron/products.hpp"
#include "polykron/recognition.hpp"

namespace polykron {

namespace {

struct Instance {
  std::string key;
  std::function<void(InstanceRecord&)> eval;
};

void run_instances(std::vector<Instance>& instances, ExperimentReport& rep) {
  std::vector<InstanceRecord> records(instances.size());
  parallel_for(static_cast<int>(instances.size()), [&](int i) {
    InstanceRecord& r = records[i];
    r.key = instances[i].key;
    try {
      instances[i].eval(r);
    } catch (const Error& e) {
      if (e.code == errc::search_budget_exceeded) {
        r.status = InstanceStatus::budget;
        r.note = e.what();
      } else {
        r.status = InstanceStatus::fail;
        r.note = std::string(errc_name(e.code)) + ": " + e.what();
      }
    } catch (const std::exception& e) {
      r.status = InstanceStatus::fail;
      r.note = e.what();
    }
  });
  std::sort(records.begin(), records.end(),
            [](const InstanceRecord& a, const InstanceRecord& b) { return a.key < b.key; });
  rep.instances = std::move(records);
  rep.pass = true;
  for (const auto& r : rep.instances) {
    if (r.status == InstanceStatus::fail) rep.pass = false;
    if (r.status == InstanceStatus::budget) rep.budget_hit = true;
  }
}

void require(InstanceRecord& r, bool cond, const std::string& what) {
  if (!cond && r.status == InstanceStatus::pass) {
    r.status = InstanceStatus::fail;
    if (!r.note.empty()) r.note += "; ";
    r.note += what;
  }
}

// every generator family with its parameter grid; the shared corpus for the
// cancellation and bounds experiments
struct CorpusItem {
  std::string key;
  Graph j;
};

std::vector<CorpusItem> generator_corpus(const ExperimentBounds& b, int quad_m) {
  std::vector<CorpusItem> out;
  for (int N = 1; N <= b.nm_limit; ++N)
    for (int M = 1; M <= b.nm_limit; ++M) {
      out.push_back({"stacked_cube_factor(" + std::to_string(N) + "," + std::to_string(M) + ")",
                     stacked_cube_factor(N, M).j});
      out.push_back({"odd_prism_factor(" + std::to_string(N) + "," + std::to_string(M) + ")",
                     odd_prism_factor(N, M)});
    }
  for (int m = 2; m <= quad_m; ++m)
    for (int i = 1; i <= m - 1; ++i)
      out.push_back({"quad_factor(" + std::to_string(m) + "," + std::to_string(i) + ")",
                     quad_factor(m, i).j});
  // all transformation scripts up to the length bound
  std::vector<std::vector<T3Move>> scripts{{}};
  for (int len = 1; len <= b.script_len; ++len) {
    std::vector<std::vector<T3Move>> next;
    for (const auto& s : scripts) {
      if (static_cast<int>(s.size()) != len - 1) continue;
      for (T3Move mv : {T3Move::t1, T3Move::t2, T3Move::t2m}) {
        auto t = s;
        t.push_back(mv);
        next.push_back(t);
      }
    }
    scripts.insert(scripts.end(), next.begin(), next.end());
  }
  auto move_name = [](T3Move m) {
    return m == T3Move::t1 ? "1" : (m == T3Move::t2 ? "2" : "2m");
  };
  for (const auto& moves : scripts) {
    for (T3Final fin : {T3Final::f1, T3Final::f2}) {
      std::string key = "t3333([";
      for (size_t i = 0; i < moves.size(); ++i) {
        if (i) key += ",";
        key += move_name(moves[i]);
      }
      key += std::string("],") + (fin == T3Final::f1 ? "f1" : "f2") + ")";
      out.push_back({key, t3333_build({moves, fin})});
    }
  }
  {
    auto specs = cubic_demo_specs();
    for (size_t i = 0; i < specs.size(); ++i)
      out.push_back({"cubic_demo(" + std::to_string(i) + ")", cubic_build(specs[i]).j});
  }
  return out;
}

// ---------------------------------------------------------------------------

ExperimentReport exp_cancellation(const ExperimentBounds& b) {
  ExperimentReport rep;
  auto corpus = generator_corpus(b, std::min(b.quad_m, 6));
  std::vector<Instance> instances;
  for (auto& item : corpus) {
    Graph j = item.j;
    instances.push_back({item.key, [j](InstanceRecord& r) {
       Graph g = cover(j).g;
       if (!is_polyhedron(g)) {
         r.note = "cover not polyhedral, skipped";
         return;
       }
       RootSet rs = kronecker_roots(g);
       require(r, rs.roots.size() == 1,
               "expected exactly one root, got " + std::to_string(rs.roots.size()));
       if (rs.roots.size() == 1)
         require(r, is_isomorphic(rs.roots[0].j, j), "root differs from the factor");
       r.data["cover_n"] = std::to_string(g.n);
     }});
  }
  run_instances(instances, rep);
  return rep;
}

ExperimentReport exp_stacked_rule(const ExperimentBounds&) {
  ExperimentReport rep;
  std::vector<Instance> instances;
  for (int n = 4; n <= 12; n += 2) {
    for (int m = 2; m <= 6; ++m) {
      std::string key = "C" + std::to_string(n) + "xP" + std::to_string(m);
      instances.push_back({key, [n, m](InstanceRecord& r) {
         Graph g = stacked_prism(n, m);
         bool exists = !kronecker_roots(g).roots.empty();
         bool expected = (n % 4 == 2) || (n % 4 == 0 && m % 2 == 0);
         r.data["root_exists"] = exists ? "true" : "false";
         require(r, exists == expected, "existence table mismatch");
       }});
    }
  }
  run_instances(instances, rep);
  return rep;
}

ExperimentReport exp_cc_rule(const ExperimentBounds&) {
  ExperimentReport rep;
  std::vector<Instance> instances;
  for (int m = 3; m <= 6; ++m) {
    std::string key = "C4xP" + std::to_string(m);
    instances.push_back({key, [m](InstanceRecord& r) {
       auto form = cartesian_forms(stacked_prism(4, m));
       require(r, form.variants.size() == 2, "expected two distinct factorizations");
       bool stacked = false, over_ladder = false;
       for (const auto& v : form.variants) {
         if (v.kind == CartesianVariant::Kind::stacked_prism && v.n == 4 && v.m == m)
           stacked = true;
         if (v.kind == CartesianVariant::Kind::prism_over && is_isomorphic(v.h, ladder(m)))
           over_ladder = true;
       }
       require(r, stacked, "stacked prism form missing");
       require(r, over_ladder, "ladder prism form missing");
     }});
  }
  auto one_way = [](Graph g) {
    return [g](InstanceRecord& r) {
      auto form = cartesian_forms(g);
      require(r, form.variants.size() == 1,
              "expected one factorization, got " + std::to_string(form.variants.size()));
    };
  };
  instances.push_back({"C6xP3", one_way(stacked_prism(6, 3))});
  instances.push_back({"C8xP4", one_way(stacked_prism(8, 4))});
  instances.push_back({"cube", one_way(stacked_prism(4, 2))});
  run_instances(instances, rep);
  return rep;
}

ExperimentReport exp_triple(const ExperimentBounds&) {
  ExperimentReport rep;
  std::vector<Instance> instances;
  for (int m = 2; m <= 3; ++m) {
    std::string key = "C4xP" + std::to_string(2 * m);
    instances.push_back({key, [m](InstanceRecord& r) {
       Graph g = stacked_prism(4, 2 * m);
       auto form = cartesian_forms(g);
       require(r, form.variants.size() == 2, "expected two Cartesian forms");
       bool stacked = false, over_ladder = false;
       for (const auto& v : form.variants) {
         if (v.kind == CartesianVariant::Kind::stacked_prism && v.n == 4 && v.m == 2 * m)
           stacked = true;
         if (v.kind == CartesianVariant::Kind::prism_over && is_isomorphic(v.h, ladder(2 * m)))
           over_ladder = true;
       }
       require(r, stacked && over_ladder, "Cartesian forms differ from the expected pair");
       RootSet rs = kronecker_roots(g);
       require(r, rs.roots.size() == 1, "expected exactly one Kronecker root");
       if (rs.roots.size() == 1)
         require(r, is_isomorphic(rs.roots[0].j, stacked_cube_factor(1, m).j),
                 "root differs from the diagonal construction");
       r.data["expressions"] = "3";
     }});
  }
  run_instances(instances, rep);
  return rep;
}

ExperimentReport exp_bounds_check(const ExperimentBounds& b) {
  ExperimentReport rep;
  auto corpus = generator_corpus(b, b.quad_m);
  std::vector<Instance> instances;
  for (auto& item : corpus) {
    Graph j = item.j;
    instances.push_back({item.key, [j](InstanceRecord& r) {
       Graph g = cover(j).g;
       if (!is_polyhedron(g)) {
         r.note = "cover not polyhedral, skipped";
         return;
       }
       auto ds = degree_sequence(g);
       int deg3 = static_cast<int>(std::count(ds.begin(), ds.end(), 3));
       require(r, deg3 >= 8, "fewer than eight vertices of degree 3");
       auto emb = planar_embed(g);
       auto st = face_stats(faces(*emb));
       int quads = st.r_k.count(4) ? st.r_k.at(4) : 0;
       require(r, quads >= 6, "fewer than six quadrilateral faces");
       r.data["deg3"] = std::to_string(deg3);
       r.data["r4"] = std::to_string(quads);
     }});
  }
  run_instances(instances, rep);
  return rep;
}

ExperimentReport exp_t3333_census(const ExperimentBounds& b) {
  ExperimentReport rep;
  std::vector<Instance> instances;
  std::vector<std::pair<std::string, T3333Script>> scripts;
  std::function<void(std::vector<T3Move>)> add = [&](std::vector<T3Move> moves) {
    auto name = [](T3Move m) {
      return m == T3Move::t1 ? "1" : (m == T3Move::t2 ? "2" : "2m");
    };
    for (T3Final fin : {T3Final::f1, T3Final::f2}) {
      std::string key = "[";
      for (size_t i = 0; i < moves.size(); ++i) {
        if (i) key += ",";
        key += name(moves[i]);
      }
      key += std::string("]") + (fin == T3Final::f1 ? "f1" : "f2");
      scripts.emplace_back(key, T3333Script{moves, fin});
    }
    if (static_cast<int>(moves.size()) < b.script_len) {
      for (T3Move mv : {T3Move::t1, T3Move::t2, T3Move::t2m}) {
        auto t = moves;
        t.push_back(mv);
        add(t);
      }
    }
  };
  add({});
  for (auto& [key, script] : scripts) {
    T3333Script s = script;
    instances.push_back({key, [s](InstanceRecord& r) {
       Graph j = t3333_build(s);
       r.data["order"] = std::to_string(j.n);
       require(r, j.n == 7 + 3 * static_cast<int>(s.moves.size()) +
                          (s.final_step == T3Final::f2 ? 3 : 0),
               "order formula violated");
       require(r, j.n % 3 == 1, "order not 1 mod 3");
       require(r, std::set<int>{7, 10, 13, 16, 19}.count(j.n) > 0 ||
                      static_cast<int>(s.moves.size()) > 3,
               "order outside expected census range");
       // degree sequences of the factor and its cover
       auto dsj = degree_sequence(j);
       int d4 = static_cast<int>(std::count(dsj.begin(), dsj.end(), 4));
       int d3 = static_cast<int>(std::count(dsj.begin(), dsj.end(), 3));
       require(r, d4 == j.n - 4 && d3 == 4, "factor degree sequence violated");
       require(r, classify_odd_faces(j).tag == OddFaceTag::c3, "factor is not class C3");
       Graph g = cover(j).g;
       require(r, is_polyhedron(g), "cover is not a polyhedron");
       auto dsg = degree_sequence(g);
       int g4 = static_cast<int>(std::count(dsg.begin(), dsg.end(), 4));
       int g3 = static_cast<int>(std::count(dsg.begin(), dsg.end(), 3));
       require(r, g4 == g.n - 8 && g3 == 8, "cover degree sequence violated");
       // four triangular faces, one sharing an edge with the other three,
       // those three pairwise meeting in exactly a vertex
       auto emb = planar_embed(j);
       FaceSet fs = faces(*emb);
       std::vector<std::set<int>> tris;
       std::vector<std::set<std::pair<int, int>>> tri_edges;
       for (const auto& f : fs.faces) {
         if (f.verts.size() != 3) continue;
         tris.emplace_back(f.verts.begin(), f.verts.end());
         std::set<std::pair<int, int>> es;
         for (size_t k = 0; k < 3; ++k) {
           int u = f.verts[k], v = f.verts[(k + 1) % 3];
           es.emplace(std::min(u, v), std::max(u, v));
         }
         tri_edges.push_back(std::move(es));
       }
       int odd = 0;
       for (const auto& f : fs.faces) odd += f.verts.size() % 2;
       require(r, odd == 4 && tris.size() == 4, "expected exactly four odd (triangular) faces");
       if (tris.size() == 4) {
         int hub = -1;
         for (int c = 0; c < 4; ++c) {
           bool all_edge = true;
           for (int o = 0; o < 4; ++o) {
             if (o == c) continue;
             std::vector<std::pair<int, int>> shared;
             std::set_intersection(tri_edges[c].begin(), tri_edges[c].end(),
                                   tri_edges[o].begin(), tri_edges[o].end(),
                                   std::back_inserter(shared));
             if (shared.empty()) all_edge = false;
           }
           if (all_edge) hub = c;
         }
         require(r, hub != -1, "no triangle adjacent to the other three");
         if (hub != -1) {
           for (int a = 0; a < 4; ++a) {
             for (int bb = a + 1; bb < 4; ++bb) {
               if (a == hub || bb == hub) continue;
               std::vector<int> inter;
               std::set_intersection(tris[a].begin(), tris[a].end(), tris[bb].begin(),
                                     tris[bb].end(), std::back_inserter(inter));
               require(r, inter.size() == 1, "side triangles must meet in one vertex");
             }
           }
         }
       }
     }});
  }
  run_instances(instances, rep);
  return rep;
}

ExperimentReport exp_quad_census(const ExperimentBounds& b) {
  ExperimentReport rep;
  std::vector<Instance> instances;
  for (int m = 2; m <= b.quad_m; ++m) {
    for (int i = 1; i <= m - 1; ++i) {
      std::string key = "quad(" + std::to_string(m) + "," + std::to_string(i) + ")";
      instances.push_back({key, [m, i](InstanceRecord& r) {
         auto qf = quad_factor(m, i);
         require(r, verify_factor_witness(qf.j, qf.witness).ok, "factor witness rejected");
         require(r, verify_quad_witness(qf.j, qf.witness, qf.quad),
                 "quadrangulation witness rejected");
         Graph g = cover(qf.j).g;
         require(r, is_polyhedron(g), "cover not a polyhedron");
         require(r, is_quadrangulation(g), "cover not a quadrangulation");
         if (m == 6 && i == 3) {
           require(r, qf.quad.r == std::vector<int>{1, 1, 1, 2, 2, 2}, "r indices differ");
           require(r, qf.quad.s == std::vector<int>{3, 5, 7, 8, 10, 12}, "s indices differ");
         }
         if (is_planar(qf.j))
           require(r, classify_odd_faces(qf.j).tag == OddFaceTag::c3,
                   "planar factor must be class C3");
       }});
    }
  }
  run_instances(instances, rep);
  return rep;
}

ExperimentReport exp_cubic_census(const ExperimentBounds&) {
  ExperimentReport rep;
  std::vector<Instance> instances;
  auto specs = cubic_demo_specs();
  for (size_t si = 0; si < specs.size(); ++si) {
    CubicBuildSpec spec = specs[si];
    std::string key = "demo(" + std::to_string(si) + ")";
    instances.push_back({key, [spec](InstanceRecord& r) {
       auto built = cubic_build(spec);
       for (int v = 0; v < built.j.n; ++v)
         require(r, built.j.degree(v) == 3, "factor not cubic");
       Graph g = cover(built.j).g;
       require(r, is_polyhedron(g), "cover not a polyhedron");
       for (int v = 0; v < g.n; ++v)
         require(r, g.degree(v) == 3, "cover not cubic");
       if (is_planar(built.j)) {
         auto tag = classify_odd_faces(built.j).tag;
         require(r, tag != OddFaceTag::none, "planar factor with polyhedral cover unclassified");
         r.data["class"] = odd_face_tag_name(tag);
       }
     }});
  }

  // clause mutations: each must raise the matching violation
  auto expect_violation = [](CubicBuildSpec spec, std::string clause) {
    return [spec, clause](InstanceRecord& r) {
      try {
        cubic_build(spec);
        require(r, false, "expected violation of " + clause);
      } catch (const Error& e) {
        require(r, e.code == errc::spec_violation && e.clause == clause,
                "expected clause " + clause + ", got " + e.clause);
      }
    };
  };
  {
    // odd region: K4 has no even region at all
    Graph k4 = complete(4);
    auto emb = planar_embed(k4);
    FaceSet fs = faces(*emb);
    CubicBuildSpec s;
    s.j2 = to_multigraph(k4);
    s.region = fs.faces[0].verts;
    s.splits = {{fs.faces[0].darts[0] >> 1, 2}, {fs.faces[0].darts[1] >> 1, 2}};
    instances.push_back({"mutate(even-region)", expect_violation(s, "even-region")});
  }
  {
    // an even region not touching the two odd regions
    Graph g = c0_representative();
    auto emb = planar_embed(g);
    FaceSet fs = faces(*emb);
    std::vector<int> face_of(2 * g.m(), -1);
    for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f)
      for (int d : fs.faces[f].darts) face_of[d] = f;
    CubicBuildSpec s;
    s.j2 = to_multigraph(g);
    for (const auto& f : fs.faces) {
      if (f.verts.size() % 2 != 0) continue;
      bool touches_odd = false;
      for (int d : f.darts)
        if (fs.faces[face_of[Embedding::dart_twin(d)]].verts.size() % 2 == 1)
          touches_odd = true;
      if (!touches_odd) {
        s.region = f.verts;
        s.splits = {{f.darts[0] >> 1, 2}, {f.darts[1] >> 1, 2}};
        break;
      }
    }
    instances.push_back(
        {"mutate(odd-region-adjacency)", expect_violation(s, "odd-region-adjacency")});
  }
  {
    // only one edge split
    CubicBuildSpec s = specs[0];
    s.splits = {{s.splits[0].first, 2}};
    instances.push_back(
        {"mutate(min-two-split-edges)", expect_violation(s, "min-two-split-edges")});
  }
  {
    // odd split counts on even-bordered edges
    CubicBuildSpec s = specs[0];
    s.splits = {{s.splits[0].first, 1}, {s.splits[1].first, 1}};
    instances.push_back({"mutate(split-parity)", expect_violation(s, "split-parity")});
  }
  {
    // leave the doubled edges parallel
    CubicBuildSpec s = specs[1];
    Graph gz(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto emb = planar_embed(s.j2);
    FaceSet fs = faces(*emb);
    for (const auto& f : fs.faces) {
      if (f.verts.size() != 4) continue;
      s.region = f.verts;
      s.splits.clear();
      std::set<std::pair<int, int>> doubled{{0, 1}, {2, 3}};
      for (int d : f.darts) {
        const MEdge& e = s.j2.edges[d >> 1];
        auto key = std::make_pair(std::min(e.u, e.v), std::max(e.u, e.v));
        if (!doubled.count(key)) s.splits.emplace_back(d >> 1, 2);
      }
      break;
    }
    instances.push_back({"mutate(j1-simple)", expect_violation(s, "j1-simple")});
  }
  {
    // two adjacent split edges break the same-class pairing
    CubicBuildSpec s = specs[0];
    Graph cube = stacked_prism(4, 2);
    auto emb = planar_embed(cube);
    FaceSet fs = faces(*emb);
    s.region = fs.faces[0].verts;
    s.splits = {{fs.faces[0].darts[0] >> 1, 2}, {fs.faces[0].darts[1] >> 1, 2}};
    instances.push_back(
        {"mutate(pair-non-bipartite)", expect_violation(s, "pair-non-bipartite")});
  }
  run_instances(instances, rep);
  return rep;
}

std::vector<DouHSpec> dou_grid(int max_ell) {
  std::vector<DouHSpec> specs;
  for (int ell = 2; ell <= max_ell; ++ell) {
    int n = 2 * ell;
    // chord orbits under the half-turn shift
    std::vector<std::vector<std::pair<int, int>>> orbits;
    std::set<std::pair<int, int>> used;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        if ((j - i) % 2 == 0 || (j - i) == ell) continue;
        if (used.count({i, j})) continue;
        int si = (i + ell) % n, sj = (j + ell) % n;
        auto shifted = std::make_pair(std::min(si, sj), std::max(si, sj));
        used.insert({i, j});
        used.insert(shifted);
        if (shifted == std::make_pair(i, j))
          orbits.push_back({{i, j}});
        else
          orbits.push_back({{i, j}, shifted});
      }
    }
    int no = static_cast<int>(orbits.size());
    int limit = std::min(no, 10);
    for (int mask = 0; mask < (1 << limit); ++mask) {
      DouHSpec spec;
      spec.ell = ell;
      for (int k = 0; k < limit; ++k)
        if ((mask >> k) & 1)
          spec.chords.insert(spec.chords.end(), orbits[k].begin(), orbits[k].end());
      // keep only crossing-free selections
      bool ok = true;
      for (size_t a = 0; a < spec.chords.size() && ok; ++a) {
        for (size_t c = a + 1; c < spec.chords.size() && ok; ++c) {
          auto [p, q] = std::minmax(spec.chords[a].first, spec.chords[a].second);
          auto [x, y] = std::minmax(spec.chords[c].first, spec.chords[c].second);
          if (p == x && q == y) {
            ok = false;
            continue;
          }
          bool xin = p < x && x < q, yin = p < y && y < q;
          if (xin != yin) ok = false;
        }
      }
      if (ok) specs.push_back(std::move(spec));
    }
  }
  return specs;
}

ExperimentReport exp_dou_roundtrip(const ExperimentBounds&) {
  ExperimentReport rep;
  std::vector<Instance> instances;
  auto grid = dou_grid(5);
  for (size_t gi = 0; gi < grid.size(); ++gi) {
    DouHSpec spec = grid[gi];
    std::string key = "ell" + std::to_string(spec.ell) + "/";
    for (auto [a, b] : spec.chords) key += std::to_string(a) + "-" + std::to_string(b) + ",";
    instances.push_back({key, [spec](InstanceRecord& r) {
       Graph h = dou_H(spec);
       require(r, is_outerplanar(h), "H not outerplanar");
       require(r, bipartition(h).has_value(), "H not bipartite");
       Graph j = dou_J(h);
       Graph p = prism(h);
       Graph c = cover(j).g;
       require(r, is_isomorphic(p, c), "prism and cover differ");
       if (is_polyhedron(p)) {
         RootSet rs = kronecker_roots(p);
         require(r, rs.roots.size() == 1, "polyhedral product must have one root");
         if (rs.roots.size() == 1)
           require(r, is_isomorphic(rs.roots[0].j, j), "root differs from the partner factor");
         if (spec.ell % 2 == 1)
           require(r, classify_odd_faces(j).tag == OddFaceTag::c1,
                   "odd-ell partner must be class C1");
       }
     }});
  }
  run_instances(instances, rep);
  return rep;
}

ExperimentReport exp_ingest_classify(const ExperimentBounds& b) {
  ExperimentReport rep;
  if (b.input_path.empty())
    throw Error(errc::unknown_experiment, "ingest_classify needs an input graph6 stream");
  std::ifstream in(b.input_path);
  if (!in) throw Error(errc::unknown_experiment, "cannot open " + b.input_path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  std::vector<Instance> instances;
  for (size_t li = 0; li < lines.size(); ++li) {
    std::string text = lines[li];
    std::string key = "line" + std::to_string(li + 1) + ":" + text;
    instances.push_back({key, [text](InstanceRecord& r) {
       Graph j = parse_graph6(text);
       if (!is_planar(j)) {
         r.note = "non-planar, skipped";
         return;
       }
       auto tag = classify_odd_faces(j).tag;
       r.data["class"] = odd_face_tag_name(tag);
       Graph g = cover(j).g;
       bool cover_poly = is_polyhedron(g);
       r.data["cover_polyhedral"] = cover_poly ? "true" : "false";
       require(r, (tag != OddFaceTag::none) == cover_poly,
               "classification disagrees with cover polyhedrality");
       bool cubic = true;
       for (int v = 0; v < j.n; ++v) cubic = cubic && j.degree(v) == 3;
       if (cubic && cover_poly && is_polyhedron(j)) {
         int odd = static_cast<int>(classify_odd_faces(j).odd_faces.size());
         require(r, odd <= 4, "cubic polyhedral cover with more than four odd faces");
       }
     }});
  }
  run_instances(instances, rep);
  return rep;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {
      "cancellation",      "stacked_rule", "cc_rule",      "triple_expressibility",
      "bounds_check",      "t3333_census", "quad_census",  "cubic_census",
      "dou_roundtrip",     "ingest_classify"};
  return names;
}

ExperimentReport run_experiment(const std::string& name, const ExperimentBounds& bounds) {
  int old_cap = search_cap();
  set_search_cap(std::max(old_cap, bounds.max_n));
  auto t0 = std::chrono::steady_clock::now();
  ExperimentReport rep;
  try {
    if (name == "cancellation") rep = exp_cancellation(bounds);
    else if (name == "stacked_rule") rep = exp_stacked_rule(bounds);
    else if (name == "cc_rule") rep = exp_cc_rule(bounds);
    else if (name == "triple_expressibility") rep = exp_triple(bounds);
    else if (name == "bounds_check") rep = exp_bounds_check(bounds);
    else if (name == "t3333_census") rep = exp_t3333_census(bounds);
    else if (name == "quad_census") rep = exp_quad_census(bounds);
    else if (name == "cubic_census") rep = exp_cubic_census(bounds);
    else if (name == "dou_roundtrip") rep = exp_dou_roundtrip(bounds);
    else if (name == "ingest_classify") rep = exp_ingest_classify(bounds);
    else {
      set_search_cap(old_cap);
      throw Error(errc::unknown_experiment, "unknown experiment: " + name);
    }
  } catch (...) {
    set_search_cap(old_cap);
    throw;
  }
  set_search_cap(old_cap);
  rep.name = name;
  rep.bounds = bounds;
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string serialize_report(const ExperimentReport& rep, bool include_timing) {
  nlohmann::json j;
  j["experiment"] = rep.name;
  j["parameters"] = {{"max_n", rep.bounds.max_n},
                     {"nm_limit", rep.bounds.nm_limit},
                     {"quad_m", rep.bounds.quad_m},
                     {"script_len", rep.bounds.script_len},
                     {"input", rep.bounds.input_path}};
  auto arr = nlohmann::json::array();
  int fails = 0, budgets = 0;
  for (const auto& r : rep.instances) {
    nlohmann::json ji;
    ji["key"] = r.key;
    ji["status"] = r.status == InstanceStatus::pass
                       ? "pass"
                       : (r.status == InstanceStatus::fail ? "fail" : "budget");
    if (!r.note.empty()) ji["note"] = r.note;
    if (!r.data.empty()) ji["data"] = r.data;
    if (r.status == InstanceStatus::fail) ++fails;
    if (r.status == InstanceStatus::budget) ++budgets;
    arr.push_back(ji);
  }
  j["instances"] = arr;
  j["counts"] = {{"total", rep.instances.size()}, {"fail", fails}, {"budget", budgets}};
  j["verdict"] = rep.pass ? "PASS" : "FAIL";
  if (include_timing) j["wall_seconds"] = rep.wall_seconds;
  return j.dump(2);
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    auto add = [&](const std::string& family, const std::string& params, const Graph& g,
                   const std::string& provenance) {
      out.push_back({family, params, emit_graph6(g), provenance});
    };
    add("tetrahedron", "", complete(4), "paper-figure");
    add("cube", "", stacked_prism(4, 2), "paper-figure");
    add("stacked-cube", "m=4", stacked_prism(4, 4), "paper-figure");
    add("hexagonal-prism", "", stacked_prism(6, 2), "paper-figure");
    add("petersen", "", petersen(), "paper-figure");
    add("desargues", "", desargues(), "paper-figure");
    add("ladder", "ell=4", ladder(4), "paper-figure");
    add("min-deg3-order7", "", t3333_build({{}, T3Final::f1}), "paper-figure");
    add("min-deg3-order10", "", t3333_build({{}, T3Final::f2}), "paper-figure");
    add("stacked-cube-diagonals", "N=1,M=2", stacked_cube_factor(1, 2).j, "paper-figure");
    add("quad-factor", "m=6,i=3", quad_factor(6, 3).j, "paper-figure");
    add("class-c0", "", c0_representative(), "derived-representative");
    add("class-c1", "", c1_representative(), "derived-representative");
    add("class-c2", "", c2_representative(), "derived-representative");
    add("class-c3", "", c3_representative(), "derived-representative");
    return out;
  }();
  return entries;
}

}  // namespace polykron
