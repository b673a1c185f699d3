#include "polykron/recognition.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include "polykron/iso.hpp"
#include "polykron/parallel.hpp"
#include "polykron/products.hpp"

namespace polykron {

const char* odd_face_tag_name(OddFaceTag t) {
  switch (t) {
    case OddFaceTag::c0: return "C0";
    case OddFaceTag::c1: return "C1";
    case OddFaceTag::c2: return "C2";
    case OddFaceTag::c3: return "C3";
    case OddFaceTag::none: return "none";
  }
  return "?";
}

namespace {

std::vector<int> face_vertex_set(const Face& f) {
  auto vs = f.verts;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::pair<int, int>> all_two_cuts(const Graph& g) {
  std::vector<std::pair<int, int>> cuts;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (components_after_removal(g, {u, v}).size() >= 2) cuts.emplace_back(u, v);
  return cuts;
}

}  // namespace

OddFaceCondition classify_odd_faces(const Graph& j) {
  auto emb = planar_embed(j);
  if (!emb) throw Error(errc::non_planar_input, "classification needs a planar graph");
  FaceSet fs = faces(*emb);

  OddFaceCondition cond;
  std::vector<int> odd_ids;
  std::vector<std::vector<int>> odd_sets;
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
    if (fs.faces[f].verts.size() % 2 == 1) {
      odd_ids.push_back(f);
      odd_sets.push_back(face_vertex_set(fs.faces[f]));
      cond.odd_faces.push_back(fs.faces[f].verts);
    }
  }
  int k = static_cast<int>(odd_ids.size());

  if (is_polyhedron(j)) {
    // c1: exactly two odd faces, disjoint
    if (k == 2 && intersect(odd_sets[0], odd_sets[1]).empty()) {
      cond.tag = OddFaceTag::c1;
      return cond;
    }
    // c2: exactly four odd faces, pairwise meeting, no triple point
    if (k == 4) {
      bool pair_ok = true, triple_ok = true;
      for (int a = 0; a < 4 && pair_ok; ++a)
        for (int b = a + 1; b < 4 && pair_ok; ++b)
          pair_ok = !intersect(odd_sets[a], odd_sets[b]).empty();
      for (int a = 0; a < 4 && triple_ok; ++a)
        for (int b = a + 1; b < 4 && triple_ok; ++b)
          for (int c = b + 1; c < 4 && triple_ok; ++c)
            triple_ok = intersect(intersect(odd_sets[a], odd_sets[b]), odd_sets[c]).empty();
      if (pair_ok && triple_ok) {
        cond.tag = OddFaceTag::c2;
        return cond;
      }
    }
    // c3: >= 4 odd faces, all but one sharing a vertex, the last meeting all
    if (k >= 4) {
      for (int rest = 0; rest < k; ++rest) {
        std::vector<int> common;
        bool first = true, meets_all = true;
        for (int a = 0; a < k; ++a) {
          if (a == rest) continue;
          common = first ? odd_sets[a] : intersect(common, odd_sets[a]);
          first = false;
          if (intersect(odd_sets[a], odd_sets[rest]).empty()) meets_all = false;
        }
        if (!common.empty() && meets_all) {
          cond.tag = OddFaceTag::c3;
          cond.shared_vertex = common[0];
          return cond;
        }
      }
    }
    return cond;  // polyhedron but no class matched
  }

  // c0: connectivity exactly 2
  if (j.n >= 3 && is_connected(j) && vertex_connectivity(j) == 2) {
    auto cuts = all_two_cuts(j);
    cond.two_cuts = cuts;
    cond.notes =
        "c0 containment: a component contains an odd region when all boundary "
        "vertices other than the removed cut lie in it";
    // every odd region except exactly two must contain a 2-cut
    int without_cut = 0;
    for (const auto& vs : odd_sets) {
      bool holds = false;
      for (auto [u, v] : cuts) {
        if (std::binary_search(vs.begin(), vs.end(), u) &&
            std::binary_search(vs.begin(), vs.end(), v)) {
          holds = true;
          break;
        }
      }
      if (!holds) ++without_cut;
    }
    if (without_cut != 2) return cond;
    for (auto [u, v] : cuts) {
      auto comps = components_after_removal(j, {u, v});
      if (comps.size() != 2) return cond;
      for (const auto& comp : comps) {
        std::vector<int> cs = comp;  // already sorted ascending
        bool found = false;
        for (const auto& vs : odd_sets) {
          bool inside = true, nontrivial = false;
          for (int x : vs) {
            if (x == u || x == v) continue;
            nontrivial = true;
            if (!std::binary_search(cs.begin(), cs.end(), x)) {
              inside = false;
              break;
            }
          }
          if (inside && nontrivial) {
            found = true;
            break;
          }
        }
        if (!found) return cond;
      }
    }
    cond.tag = OddFaceTag::c0;
    return cond;
  }
  return cond;
}

// ---------------------------------------------------------------------------
// Factor witnesses

namespace {

struct Realization {
  std::vector<int> walk;  // oriented region
  std::vector<int> pos;   // pos[k] = walk index of sequence entry k
};

// All ways the label sequence appears in cyclic order on the face walk
// (rotations and reflection allowed; repeated labels may share a position).
std::vector<Realization> realize_orders(const std::vector<int>& region,
                                        const std::vector<int>& seq) {
  std::vector<Realization> out;
  int L = static_cast<int>(region.size());
  if (L == 0 || seq.empty()) return out;
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<int> walk = region;
    if (dir == 1) std::reverse(walk.begin(), walk.end());
    for (int s = 0; s < L; ++s) {
      if (walk[s] != seq[0]) continue;
      std::vector<int> pos{0};
      bool ok = true;
      int q = 0;
      for (size_t k = 1; k < seq.size() && ok; ++k) {
        while (q < L && walk[(s + q) % L] != seq[k]) ++q;
        if (q >= L) {
          ok = false;
        } else {
          pos.push_back(q);
        }
      }
      if (!ok) continue;
      Realization r;
      r.walk.resize(L);
      for (int i = 0; i < L; ++i) r.walk[i] = walk[(s + i) % L];
      for (int p : pos) r.pos.push_back(p);
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<int> witness_sequence(const FactorWitness& w) {
  std::vector<int> seq;
  for (const auto& p : w.pairs) seq.push_back(p.first);
  if (w.variant == OrderVariant::ord1) {
    for (auto it = w.pairs.rbegin(); it != w.pairs.rend(); ++it) seq.push_back(it->second);
  } else {
    for (const auto& p : w.pairs) seq.push_back(p.second);
  }
  return seq;
}

// vertices on the closed arc [from..to] of the oriented walk
std::set<int> arc_vertices(const std::vector<int>& walk, int from, int to) {
  std::set<int> out;
  int L = static_cast<int>(walk.size());
  for (int i = from;; i = (i + 1) % L) {
    out.insert(walk[i]);
    if (i == to) break;
  }
  return out;
}

bool region_is_cycle_of(const Graph& g, const std::vector<int>& region) {
  int L = static_cast<int>(region.size());
  if (L < 2) return false;
  std::set<int> distinct(region.begin(), region.end());
  if (static_cast<int>(distinct.size()) != L) return false;
  for (int i = 0; i < L; ++i) {
    int u = region[i], v = region[(i + 1) % L];
    if (u < 0 || u >= g.n || !g.has_edge(u, v)) return false;
  }
  return true;
}

}  // namespace

bool region_is_face_of(const Graph& jprime, const std::vector<int>& region) {
  if (!region_is_cycle_of(jprime, region)) return false;
  // the cycle bounds a face of some embedding iff an apex joined to all its
  // vertices keeps the graph planar
  std::vector<std::pair<int, int>> es = jprime.edges;
  for (int v : region) es.emplace_back(v, jprime.n);
  return is_planar(Graph(jprime.n + 1, std::move(es)));
}

bool cyclic_order_realized(const std::vector<int>& face, const std::vector<int>& sequence) {
  return !realize_orders(face, sequence).empty();
}

WitnessReport verify_factor_witness(const Graph& j, const FactorWitness& w) {
  WitnessReport rep;
  const Graph& jp = w.jprime;

  auto fail = [&](const std::string& what) {
    rep.ok = false;
    rep.failure = what;
    return rep;
  };

  // structural consistency: J = J' + pair edges, exactly
  if (jp.n != j.n)
    throw Error(errc::inconsistent_witness, "witness factor has wrong vertex count");
  std::vector<std::pair<int, int>> added;
  for (auto [a, b] : w.pairs) {
    if (a < 0 || b < 0 || a >= j.n || b >= j.n || a == b)
      throw Error(errc::inconsistent_witness, "witness pair is not a vertex pair");
    added.emplace_back(std::min(a, b), std::max(a, b));
  }
  {
    auto sorted = added;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return fail("pair-edges");  // repeated pair edge
    for (auto [a, b] : sorted)
      if (jp.has_edge(a, b)) return fail("pair-edges");
    std::vector<std::pair<int, int>> unioned = jp.edges;
    unioned.insert(unioned.end(), sorted.begin(), sorted.end());
    std::sort(unioned.begin(), unioned.end());
    if (unioned != j.edges)
      throw Error(errc::inconsistent_witness, "witness edges do not reassemble the graph");
  }

  int m = static_cast<int>(w.pairs.size());
  if (m < 2) return fail("pair-count");
  {
    std::set<int> corners{w.pairs.front().first, w.pairs.front().second,
                          w.pairs.back().first, w.pairs.back().second};
    if (corners.size() != 4) return fail("corner-distinctness");
  }

  auto bip = bipartition(jp);
  if (!bip) return fail("bipartite");
  if (!is_connected(jp)) return fail("connectivity");

  if (!is_k_connected(jp, 3) && !semi_hyper_2_connected(jp).ok)
    return fail("connectivity");

  if (!is_planar(jp)) return fail("planar");

  if (!region_is_face_of(jp, w.region)) return fail("region-face");

  for (auto [a, b] : w.pairs)
    if (bip->color[a] != bip->color[b]) return fail("pair-odd");

  auto reals = realize_orders(w.region, witness_sequence(w));
  if (reals.empty()) return fail("region-order");

  auto cuts = all_two_cuts(jp);
  std::set<int> region_set(w.region.begin(), w.region.end());
  for (auto [u, v] : cuts)
    if (!region_set.count(u) || !region_set.count(v)) return fail("two-cuts");

  bool some_orientation_ok = false;
  for (const auto& r : reals) {
    // Forbidden closed arcs: from the last sequence entry forward to a_1,
    // and from a_m forward to the first b entry. For ord1 these are
    // [b_1 -> a_1] and [a_m -> b_m]; for ord2, [b_m -> a_1] and [a_m -> b_1].
    int p_a1 = r.pos[0], p_am = r.pos[m - 1];
    int p_first_b = r.pos[m], p_last_b = r.pos[2 * m - 1];
    std::set<int> arc1 = arc_vertices(r.walk, p_last_b, p_a1);
    std::set<int> arc2 = arc_vertices(r.walk, p_am, p_first_b);
    bool ok = true;
    for (auto [u, v] : cuts) {
      if ((arc1.count(u) && arc1.count(v)) || (arc2.count(u) && arc2.count(v))) {
        ok = false;
        break;
      }
    }
    if (ok) {
      some_orientation_ok = true;
      break;
    }
  }
  if (!some_orientation_ok) return fail("two-cuts");

  rep.ok = true;
  rep.notes = "forbidden arcs treated as closed (endpoints included)";
  return rep;
}

namespace {

// order pairs and orient them so the label sequence follows the walk
std::optional<std::vector<std::pair<int, int>>> arrange_pairs(
    const std::vector<std::pair<int, int>>& edges, const std::vector<int>& walk,
    OrderVariant variant) {
  int L = static_cast<int>(walk.size());
  int m = static_cast<int>(edges.size());
  std::vector<int> where(L, -1);
  std::map<int, int> pos_of;
  for (int i = 0; i < L; ++i) pos_of[walk[i]] = i;
  for (int start = 0; start < L; ++start) {
    for (int mask = 0; mask < (1 << m); ++mask) {
      // orientation: bit set -> swap endpoints
      std::vector<std::pair<int, int>> ab(m);
      std::vector<std::pair<std::pair<int, int>, int>> keyed(m);
      bool feasible = true;
      for (int i = 0; i < m && feasible; ++i) {
        auto [x, y] = edges[i];
        if (!pos_of.count(x) || !pos_of.count(y)) {
          feasible = false;
          break;
        }
        int a = (mask >> i) & 1 ? y : x;
        int b = (mask >> i) & 1 ? x : y;
        int qa = (pos_of[a] - start + L) % L;
        int qb = (pos_of[b] - start + L) % L;
        ab[i] = {a, b};
        keyed[i] = {{qa, variant == OrderVariant::ord1 ? -qb : qb}, i};
      }
      if (!feasible) return std::nullopt;
      std::sort(keyed.begin(), keyed.end());
      std::vector<std::pair<int, int>> ordered(m);
      std::vector<int> qa(m), qb(m);
      for (int i = 0; i < m; ++i) {
        ordered[i] = ab[keyed[i].second];
        qa[i] = (pos_of[ordered[i].first] - start + L) % L;
        qb[i] = (pos_of[ordered[i].second] - start + L) % L;
      }
      bool ok = std::is_sorted(qa.begin(), qa.end());
      if (ok) {
        if (variant == OrderVariant::ord1) {
          for (int i = 0; i + 1 < m && ok; ++i) ok = qb[i] >= qb[i + 1];
        } else {
          for (int i = 0; i + 1 < m && ok; ++i) ok = qb[i] <= qb[i + 1];
        }
      }
      if (ok) {
        int max_a = *std::max_element(qa.begin(), qa.end());
        int min_b = *std::min_element(qb.begin(), qb.end());
        ok = max_a <= min_b;
      }
      if (ok) return ordered;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<FactorWitness> find_factor_witness(const Graph& j, long long subset_budget) {
  if (j.n > search_cap())
    throw Error(errc::search_budget_exceeded, "graph larger than search cap");
  int E = j.m();
  long long seen = 0;
  std::vector<int> idx;

  std::function<std::optional<FactorWitness>(int, int, int)> choose =
      [&](int from, int left, int m) -> std::optional<FactorWitness> {
    if (left == 0) {
      if (++seen > subset_budget)
        throw Error(errc::search_budget_exceeded, "witness search budget exceeded");
      std::vector<std::pair<int, int>> removed;
      std::set<int> removed_set(idx.begin(), idx.end());
      std::vector<std::pair<int, int>> kept;
      for (int t = 0; t < E; ++t)
        (removed_set.count(t) ? removed : kept).push_back(j.edges[t]);
      Graph jp(j.n, kept);
      auto bip = bipartition(jp);
      if (!bip) return std::nullopt;
      bool same_class = true;
      for (auto [a, b] : removed)
        if (bip->color[a] != bip->color[b]) same_class = false;
      if (!same_class) return std::nullopt;
      if (!is_connected(jp)) return std::nullopt;
      if (!is_k_connected(jp, 3) && !semi_hyper_2_connected(jp).ok) return std::nullopt;
      auto emb = planar_embed(jp);
      if (!emb) return std::nullopt;
      FaceSet fs = faces(*emb);
      for (const auto& variant : {OrderVariant::ord1, OrderVariant::ord2}) {
        for (const auto& face : fs.faces) {
          auto arranged = arrange_pairs(removed, face.verts, variant);
          if (!arranged) continue;
          FactorWitness w;
          w.jprime = jp;
          w.pairs = *arranged;
          w.region = face.verts;
          w.variant = variant;
          if (verify_factor_witness(j, w).ok) return w;
        }
      }
      return std::nullopt;
    }
    for (int t = from; t <= E - left; ++t) {
      idx.push_back(t);
      auto r = choose(t + 1, left - 1, m);
      idx.pop_back();
      if (r) return r;
    }
    return std::nullopt;
  };

  for (int m = 2; m <= E; ++m) {
    auto r = choose(0, m, m);
    if (r) return r;
  }
  return std::nullopt;
}

bool verify_quad_witness(const Graph& j, const FactorWitness& w, const QuadWitness& q) {
  auto base = verify_factor_witness(j, w);
  if (!base.ok) return false;

  int m = static_cast<int>(w.pairs.size());
  int two_ell = static_cast<int>(q.region_labels.size());
  if (static_cast<int>(q.r.size()) != m || static_cast<int>(q.s.size()) != m)
    throw Error(errc::inconsistent_witness, "index lists must have one entry per pair");
  if (two_ell != static_cast<int>(w.region.size()) || two_ell % 2 != 0 || two_ell < 4)
    throw Error(errc::inconsistent_witness, "region labeling has wrong length");
  if (canonical_face_key(q.region_labels) != canonical_face_key(w.region))
    throw Error(errc::inconsistent_witness, "region labeling is not the witness region");

  // labeling consistency: a_i = v_{r_i}, b_i = v_{s_i} (1-based indices)
  for (int i = 0; i < m; ++i) {
    if (q.r[i] < 1 || q.r[i] > two_ell || q.s[i] < 1 || q.s[i] > two_ell) return false;
    if (q.region_labels[q.r[i] - 1] != w.pairs[i].first) return false;
    if (q.region_labels[q.s[i] - 1] != w.pairs[i].second) return false;
  }
  if (q.r[0] != 1) return false;
  if (q.r[m - 1] % 2 != 0) return false;
  if (q.s[0] != q.r[m - 1] + 1) return false;
  if (q.s[m - 1] != two_ell) return false;
  for (int i = 0; i + 1 < m; ++i)
    if ((q.r[i + 1] - q.r[i]) + (q.s[i + 1] - q.s[i]) != 2) return false;

  // all faces of J' except the region are quadrilaterals
  auto emb = planar_embed(w.jprime);
  if (!emb) return false;
  FaceSet fs = faces(*emb);
  auto region_key = canonical_face_key(w.region);
  bool region_seen = false;
  for (const auto& f : fs.faces) {
    if (!region_seen && canonical_face_key(f.verts) == region_key) {
      region_seen = true;  // the region itself may have any even length
      continue;
    }
    if (f.verts.size() != 4) return false;
  }
  return region_seen;
}

// ---------------------------------------------------------------------------
// Kronecker roots

RootSet kronecker_roots(const Graph& g) {
  if (!is_connected(g)) throw Error(errc::disconnected, "roots need a connected graph");
  auto bip = bipartition(g);
  if (!bip) throw Error(errc::not_bipartite, "roots need a bipartite graph");
  if (g.n > search_cap())
    throw Error(errc::search_budget_exceeded, "graph larger than search cap");
  RootSet rs;
  if (g.n == 0 || g.n % 2 == 1) return rs;

  auto autos = automorphisms(g);
  std::vector<std::vector<int>> candidates;
  for (const auto& sigma : autos) {
    bool inv = true, fpf = true, swaps = true;
    for (int v = 0; v < g.n && inv; ++v) inv = sigma[sigma[v]] == v;
    for (int v = 0; v < g.n && fpf; ++v) fpf = sigma[v] != v;
    for (int v = 0; v < g.n && swaps; ++v) swaps = bip->color[sigma[v]] != bip->color[v];
    if (inv && fpf && swaps) candidates.push_back(sigma);
  }

  std::vector<std::optional<Root>> results(candidates.size());
  std::atomic<bool> budget_hit{false};
  parallel_for(static_cast<int>(candidates.size()), [&](int ci) {
    try {
      const auto& sigma = candidates[ci];
      // orbits {v, sigma(v)} in increasing order of their class-0 member
      std::vector<int> orbit(g.n, -1);
      std::vector<int> rep;  // class-0 representative per orbit
      for (int v = 0; v < g.n; ++v) {
        if (orbit[v] != -1 || bip->color[v] != 0) continue;
        int o = static_cast<int>(rep.size());
        orbit[v] = o;
        orbit[sigma[v]] = o;
        rep.push_back(v);
      }
      int nj = static_cast<int>(rep.size());
      std::set<std::pair<int, int>> jedges;
      for (auto [u, v] : g.edges) {
        int ou = orbit[u], ov = orbit[v];
        if (ou == ov) return;  // loop: quotient not simple
        jedges.emplace(std::min(ou, ov), std::max(ou, ov));
      }
      Graph jq(nj, {jedges.begin(), jedges.end()});
      // explicit cover check through the orbit map
      Product cov = cover(jq);
      if (cov.g.m() != g.m()) return;
      std::vector<int> phi(2 * nj);
      for (int o = 0; o < nj; ++o) {
        phi[2 * o] = rep[o];
        phi[2 * o + 1] = sigma[rep[o]];
      }
      for (auto [x, y] : cov.g.edges)
        if (!g.has_edge(phi[x], phi[y])) return;
      results[ci] = Root{jq, sigma};
    } catch (const Error&) {
      budget_hit = true;
    }
  });
  if (budget_hit)
    throw Error(errc::search_budget_exceeded, "root candidate evaluation exceeded budget");

  std::vector<Certificate> seen;
  for (const auto& r : results) {
    if (!r) continue;
    auto cert = canonical_form(r->j);
    if (std::find(seen.begin(), seen.end(), cert) == seen.end()) {
      seen.push_back(cert);
      rs.roots.push_back(*r);
    }
  }
  return rs;
}

// ---------------------------------------------------------------------------
// Cartesian forms

CartesianForm cartesian_forms(const Graph& g) {
  if (!is_polyhedron(g)) throw Error(errc::not_polyhedral, "input is not a polyhedron");
  if (g.n > search_cap())
    throw Error(errc::search_budget_exceeded, "graph larger than search cap");

  CartesianForm form;
  std::vector<std::pair<Certificate, Certificate>> seen;
  auto factor_pair_key = [](const Graph& a, const Graph& b) {
    auto ca = canonical_form(a), cb = canonical_form(b);
    if (cb < ca) std::swap(ca, cb);
    return std::make_pair(ca, cb);
  };
  auto push_variant = [&](CartesianVariant v, const Graph& fa, const Graph& fb) {
    auto key = factor_pair_key(fa, fb);
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(key);
      form.variants.push_back(std::move(v));
    }
  };

  // stacked prisms C_n square P_m
  for (int n = 3; n <= g.n; ++n) {
    if (g.n % n != 0) continue;
    int m = g.n / n;
    if (m < 2) continue;
    Graph cn(n, [&] {
      std::vector<std::pair<int, int>> es;
      for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
      return es;
    }());
    Graph pm(m, [&] {
      std::vector<std::pair<int, int>> es;
      for (int i = 0; i + 1 < m; ++i) es.emplace_back(i, i + 1);
      return es;
    }());
    Graph cand = cartesian(cn, pm).g;
    if (is_isomorphic(cand, g)) {
      CartesianVariant v{CartesianVariant::Kind::stacked_prism, n, m, {}};
      push_variant(std::move(v), cn, pm);
    }
  }

  // prisms over H: matchings induced by suitable involutions
  Graph k2(2, {{0, 1}});
  auto autos = automorphisms(g);
  for (const auto& sigma : autos) {
    bool inv = true, fpf = true, matched = true;
    for (int v = 0; v < g.n && inv; ++v) inv = sigma[sigma[v]] == v;
    for (int v = 0; v < g.n && fpf; ++v) fpf = sigma[v] != v;
    for (int v = 0; v < g.n && matched; ++v) matched = g.has_edge(v, sigma[v]);
    if (!inv || !fpf || !matched) continue;
    // remove the matching, demand two components swapped by sigma
    std::vector<std::pair<int, int>> kept;
    for (auto [u, v] : g.edges)
      if (sigma[u] != v) kept.emplace_back(u, v);
    Graph stripped(g.n, kept);
    auto comps = connected_components(stripped);
    if (comps.size() != 2) continue;
    std::set<int> c0(comps[0].begin(), comps[0].end());
    bool swaps = std::all_of(comps[0].begin(), comps[0].end(),
                             [&](int v) { return !c0.count(sigma[v]); });
    if (!swaps) continue;
    // induced H on the first component
    std::vector<int> remap(g.n, -1);
    for (size_t i = 0; i < comps[0].size(); ++i) remap[comps[0][i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> hes;
    for (auto [u, v] : kept)
      if (remap[u] != -1 && remap[v] != -1) hes.emplace_back(remap[u], remap[v]);
    Graph h(static_cast<int>(comps[0].size()), hes);
    if (!is_outerplanar(h)) continue;
    if (!is_k_connected(h, 2)) continue;  // outerplanar Hamiltonian
    CartesianVariant v{CartesianVariant::Kind::prism_over, 0, 0, h};
    push_variant(std::move(v), h, k2);
  }
  return form;
}

}  // namespace polykron
