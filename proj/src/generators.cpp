#include "polykron/generators.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "polykron/planar.hpp"

namespace polykron {

Graph cycle(int n) {
  if (n < 3) throw Error(errc::bad_params, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(es));
}

Graph path(int m) {
  if (m < 1) throw Error(errc::bad_params, "path needs m >= 1");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < m; ++i) es.emplace_back(i, i + 1);
  return Graph(m, std::move(es));
}

Graph complete(int n) {
  if (n < 1) throw Error(errc::bad_params, "complete graph needs n >= 1");
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph(n, std::move(es));
}

Graph ladder(int ell) {
  if (ell < 1) throw Error(errc::bad_params, "ladder needs ell >= 1");
  if (ell == 1) return Graph(2, {{0, 1}});
  Graph c = cycle(2 * ell);
  std::vector<std::pair<int, int>> es = c.edges;
  for (int k = 1; k <= ell - 2; ++k) es.emplace_back(k, 2 * ell - 1 - k);
  return Graph(2 * ell, std::move(es));
}

Graph stacked_prism(int n, int m) {
  if (n < 3 || m < 1) throw Error(errc::bad_params, "stacked prism needs n >= 3, m >= 1");
  return cartesian(cycle(n), path(m)).g;
}

Graph petersen() {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, 5 + i);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, std::move(es));
}

Graph desargues() {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < 10; ++i) {
    es.emplace_back(i, (i + 1) % 10);
    es.emplace_back(i, 10 + i);
    es.emplace_back(10 + i, 10 + (i + 3) % 10);
  }
  return Graph(20, std::move(es));
}

FactorResult stacked_cube_factor(int N, int M) {
  if (N < 1 || M < 1) throw Error(errc::bad_params, "factor needs N, M >= 1");
  Graph jp = stacked_prism(4 * N, M);  // vertex (i, layer) = i*M + layer
  std::vector<std::pair<int, int>> es = jp.edges;
  FactorWitness w;
  w.jprime = jp;
  for (int i = 0; i < 2 * N; ++i) {
    es.emplace_back(i * M, (i + 2 * N) * M);
    w.pairs.emplace_back(i * M, (i + 2 * N) * M);
  }
  for (int i = 0; i < 4 * N; ++i) w.region.push_back(i * M);
  w.variant = OrderVariant::ord2;
  return {Graph(jp.n, std::move(es)), std::move(w)};
}

Graph odd_prism_factor(int N, int M) {
  if (N < 1 || M < 1) throw Error(errc::bad_params, "factor needs N, M >= 1");
  if (M == 1) return cycle(2 * N + 1);
  return stacked_prism(2 * N + 1, M);
}

QuadFactorResult quad_factor(int m, int i) {
  if (m < 2 || i < 1 || i > m - 1) throw Error(errc::bad_params, "need m >= 2, 1 <= i <= m-1");
  QuadFactorResult out;
  int two_ell = 2 * m;
  std::vector<std::pair<int, int>> jp_edges;
  for (int k = 0; k < two_ell; ++k) jp_edges.emplace_back(k, (k + 1) % two_ell);
  int nverts = two_ell;
  if (m >= 3) {
    // hub joined to every second cycle vertex; every inner face is a 4-gon
    int hub = two_ell;
    nverts = two_ell + 1;
    for (int k = 0; k < two_ell; k += 2) jp_edges.emplace_back(k, hub);
  }
  Graph jp(nverts, jp_edges);

  // index data: r = (1,..,1,2,..,2) with i ones; s steps +2 except +1 at i
  std::vector<int> r(m), s(m);
  for (int k = 0; k < m; ++k) r[k] = k < i ? 1 : 2;
  for (int k = 0; k < m; ++k) s[k] = k < i ? 2 * k + 3 : 2 * k + 2;

  FactorWitness w;
  w.jprime = jp;
  for (int k = 0; k < m; ++k) w.pairs.emplace_back(r[k] - 1, s[k] - 1);
  for (int k = 0; k < two_ell; ++k) w.region.push_back(k);
  w.variant = OrderVariant::ord2;

  std::vector<std::pair<int, int>> jedges = jp.edges;
  std::set<std::pair<int, int>> dedup;
  for (auto [a, b] : w.pairs) {
    auto e = std::make_pair(std::min(a, b), std::max(a, b));
    if (dedup.insert(e).second) jedges.push_back(e);
  }
  out.j = Graph(nverts, jedges);
  out.witness = std::move(w);
  out.quad.region_labels = out.witness.region;
  out.quad.r = r;
  out.quad.s = s;
  return out;
}

Graph t3333_build(const T3333Script& s) {
  // start state: outer hexagon + three chords + the first inner vertex
  int a1 = 0, a3 = 1, b1 = 2, b2 = 3, w1 = 4, b3 = 5, c1v = 6;
  std::vector<std::pair<int, int>> es = {{a1, a3}, {a3, b1}, {b1, b2}, {b2, w1},
                                         {w1, b3}, {b3, a1}, {a1, b1}, {a3, b2},
                                         {a3, b3}, {c1v, a1}, {c1v, b1}};
  int next = 7;
  // working hexagon [c1..c6], degrees so far 2,4,3,2,3,4
  std::array<int, 6> hex = {c1v, b1, b2, w1, b3, a1};

  for (T3Move mv : s.moves) {
    int vp = next++;  // adjacent c1, c3
    int vpp = next++;  // adjacent c1, c5
    es.emplace_back(vp, hex[0]);
    es.emplace_back(vp, hex[2]);
    es.emplace_back(vpp, hex[0]);
    es.emplace_back(vpp, hex[4]);
    int z = next++;
    switch (mv) {
      case T3Move::t1:
        es.emplace_back(z, vp);
        es.emplace_back(z, vpp);
        hex = {hex[3], hex[4], vpp, z, vp, hex[2]};
        break;
      case T3Move::t2:
        es.emplace_back(z, vp);
        es.emplace_back(z, hex[3]);
        hex = {vpp, hex[0], vp, z, hex[3], hex[4]};
        break;
      case T3Move::t2m:
        es.emplace_back(z, vpp);
        es.emplace_back(z, hex[3]);
        hex = {vp, hex[2], hex[3], z, vpp, hex[0]};
        break;
    }
  }

  if (s.final_step == T3Final::f1) {
    es.emplace_back(hex[0], hex[3]);
  } else {
    int vp = next++, vpp = next++, z = next++;
    es.emplace_back(vp, hex[0]);
    es.emplace_back(vp, hex[2]);
    es.emplace_back(vpp, hex[0]);
    es.emplace_back(vpp, hex[4]);
    es.emplace_back(z, vp);
    es.emplace_back(z, vpp);
    es.emplace_back(z, hex[3]);
  }
  return Graph(next, std::move(es));
}

// ---------------------------------------------------------------------------
// Cubic covers

namespace {

Graph multigraph_skeleton(const Multigraph& g) {
  std::set<std::pair<int, int>> es;
  for (const auto& e : g.edges)
    if (e.u != e.v) es.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
  return Graph(g.n, {es.begin(), es.end()});
}

}  // namespace

CubicBuildResult cubic_build(const CubicBuildSpec& spec) {
  auto violation = [](const std::string& clause) {
    return Error(errc::spec_violation, "build plan violates clause: " + clause, clause);
  };

  const Multigraph& j2 = spec.j2;
  for (int v = 0; v < j2.n; ++v)
    if (j2.degree(v) != 3) throw violation("j2-cubic");
  {
    Graph skel = multigraph_skeleton(j2);
    if (!is_connected(skel)) throw violation("j2-connectivity");
    if (!(skel.n >= 4 && is_k_connected(skel, 3)) && !semi_hyper_2_connected(skel).ok)
      throw violation("j2-connectivity");
  }
  auto emb = planar_embed(j2);
  if (!emb) throw violation("j2-planar");
  FaceSet fs = faces(*emb);

  // locate the named region among the traced faces
  int region_id = -1;
  auto want = canonical_face_key(spec.region);
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
    if (canonical_face_key(fs.faces[f].verts) == want) {
      region_id = f;
      break;
    }
  }
  if (region_id == -1) throw violation("region-face");
  const Face& region = fs.faces[region_id];
  if (region.verts.size() % 2 != 0) throw violation("even-region");

  // the region must share an edge with every odd region
  std::set<int> region_edges;
  for (int d : region.darts) region_edges.insert(d >> 1);
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
    if (f == region_id || fs.faces[f].verts.size() % 2 == 0) continue;
    bool adjacent = false;
    for (int d : fs.faces[f].darts)
      if (region_edges.count(d >> 1)) adjacent = true;
    if (!adjacent) throw violation("odd-region-adjacency");
  }

  std::map<int, int> split_count;
  for (auto [token, count] : spec.splits) {
    if (token < 0 || token >= j2.m() || count < 1) throw violation("split-edge");
    if (!region_edges.count(token)) throw violation("split-edge");
    split_count[token] += count;
  }
  if (split_count.size() < 2) throw violation("min-two-split-edges");

  // parity rule: split an odd number of times iff the edge borders an odd
  // region (its other side, since the chosen region is even)
  std::vector<int> face_of(2 * j2.m(), -1);
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f)
    for (int d : fs.faces[f].darts) face_of[d] = f;
  for (int d : region.darts) {
    int token = d >> 1;
    int other = face_of[Embedding::dart_twin(d)];
    bool on_odd = fs.faces[other].verts.size() % 2 == 1;
    int count = split_count.count(token) ? split_count[token] : 0;
    if ((count % 2 == 1) != on_odd) throw violation("split-parity");
  }

  // build J1: split the region's edges, numbering the inserted vertices in
  // walk order so their cyclic order around the region is by id
  int next_vertex = j2.n;
  std::vector<MEdge> j1_edges;
  std::set<int> split_tokens;
  for (auto& [t, c] : split_count) split_tokens.insert(t);
  std::vector<int> inserted;
  std::vector<int> region_walk;  // region walk of J1, with inserted vertices
  std::map<int, std::vector<int>> chain_of;  // token -> inserted ids in dart order
  for (size_t k = 0; k < region.darts.size(); ++k) {
    int d = region.darts[k];
    int token = d >> 1;
    region_walk.push_back(region.verts[k]);
    if (!split_tokens.count(token)) continue;
    int c = split_count[token];
    std::vector<int> chain;
    for (int x = 0; x < c; ++x) chain.push_back(next_vertex++);
    inserted.insert(inserted.end(), chain.begin(), chain.end());
    region_walk.insert(region_walk.end(), chain.begin(), chain.end());
    chain_of[d] = chain;
  }
  for (int t = 0; t < j2.m(); ++t) {
    if (!split_tokens.count(t)) {
      j1_edges.push_back(j2.edges[t]);
      continue;
    }
    // the chain was recorded against whichever dart of t lies on the region
    int d = chain_of.count(2 * t) ? 2 * t : 2 * t + 1;
    const auto& chain = chain_of[d];
    int from = (d & 1) ? j2.edges[t].v : j2.edges[t].u;
    int to = (d & 1) ? j2.edges[t].u : j2.edges[t].v;
    int prev = from;
    for (int w : chain) {
      j1_edges.push_back({prev, w});
      prev = w;
    }
    j1_edges.push_back({prev, to});
  }
  Multigraph j1m(next_vertex, j1_edges);
  if (!j1m.is_simple()) throw violation("j1-simple");
  Graph j1 = j1m.to_graph();

  auto bip = bipartition(j1);
  if (!bip) throw violation("split-parity");

  int total = static_cast<int>(inserted.size());
  if (total % 2 != 0 || total < 4) throw violation("pair-structure");
  int m = total / 2;
  std::vector<int> order(total);
  for (int k = 0; k < total; ++k)
    order[k] = inserted[((k + spec.start_offset) % total + total) % total];

  FactorWitness w;
  w.jprime = j1;
  w.variant = spec.variant;
  w.region = region_walk;
  for (int k = 0; k < m; ++k) {
    int a = order[k];
    int b = spec.variant == OrderVariant::ord2 ? order[m + k] : order[2 * m - 1 - k];
    w.pairs.emplace_back(a, b);
  }
  for (auto [a, b] : w.pairs)
    if (bip->color[a] != bip->color[b]) throw violation("pair-non-bipartite");

  std::vector<std::pair<int, int>> jedges = j1.edges;
  for (auto [a, b] : w.pairs) jedges.emplace_back(a, b);
  Graph j(j1.n, jedges);

  auto rep = verify_factor_witness(j, w);
  if (!rep.ok) throw violation("witness-" + rep.failure);
  return {j, j1, w};
}

Graph quad_expand(const Graph& g, const std::vector<int>& face) {
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) != 3) throw Error(errc::not_cubic, "graph is not cubic");
  if (face.size() != 4 || !region_is_face_of(g, face))
    throw Error(errc::not_quad_face, "not a quadrilateral face");
  // double-subdivide two opposite edges, then add the nested chords
  auto s1 = subdivide(g, {face[0], face[1]}, 2);
  auto s2 = subdivide(s1.g, {face[2], face[3]}, 2);
  int a1 = s1.inserted[0], a2 = s1.inserted[1];
  int b1 = s2.inserted[0], b2 = s2.inserted[1];
  std::vector<std::pair<int, int>> es = s2.g.edges;
  es.emplace_back(a1, b2);
  es.emplace_back(a2, b1);
  return Graph(s2.g.n, std::move(es));
}

// ---------------------------------------------------------------------------
// H family for the simultaneous products

Graph dou_H(const DouHSpec& spec) {
  int ell = spec.ell;
  if (ell < 2) throw Error(errc::bad_params, "need ell >= 2");
  int n = 2 * ell;
  auto violation = [](const std::string& clause) {
    return Error(errc::spec_violation, "H family violates clause: " + clause, clause);
  };
  std::set<std::pair<int, int>> chords;
  for (auto [i, j] : spec.chords) {
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw violation("chord-range");
    int a = std::min(i, j), b = std::max(i, j);
    if (b - a == 1 || (a == 0 && b == n - 1)) throw violation("chord-diagonal");
    chords.emplace(a, b);
  }
  for (auto [a, b] : chords) {
    if ((b - a) % n == ell) throw violation("antipodal-chord");
    if ((b - a) % 2 == 0) throw violation("parity");
    int sa = (a + ell) % n, sb = (b + ell) % n;
    if (!chords.count({std::min(sa, sb), std::max(sa, sb)})) throw violation("shift-closure");
  }
  // planarity of the outerplanar drawing: chords must be pairwise noncrossing
  for (auto it = chords.begin(); it != chords.end(); ++it) {
    for (auto jt = std::next(it); jt != chords.end(); ++jt) {
      auto [a, b] = *it;
      auto [c, d] = *jt;
      bool c_in = a < c && c < b, d_in = a < d && d < b;
      if (c_in != d_in) throw violation("crossing-chords");
    }
  }
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  es.insert(es.end(), chords.begin(), chords.end());
  return Graph(n, std::move(es));
}

Graph dou_J(const Graph& h) {
  int n = h.n;
  if (n < 4 || n % 2 != 0) throw Error(errc::bad_params, "H must be an even cycle plus chords");
  int ell = n / 2;
  for (int i = 0; i < n; ++i)
    if (!h.has_edge(i, (i + 1) % n))
      throw Error(errc::bad_params, "H must contain the full boundary cycle");
  std::vector<std::pair<int, int>> chords;
  for (auto [u, v] : h.edges)
    if (!((v - u) == 1 || (u == 0 && v == n - 1))) chords.emplace_back(u, v);

  if (ell % 2 == 0) {
    std::vector<std::pair<int, int>> es = h.edges;
    for (int i = 0; i < ell; ++i) es.emplace_back(i, i + ell);
    return Graph(n, std::move(es));
  }
  // odd ell: J is the prism over the reduced polygon-with-chords
  std::set<std::pair<int, int>> reduced;
  for (auto [u, v] : chords) {
    int a = u % ell, b = v % ell;
    if (a == b) throw Error(errc::spec_violation, "chord reduces to a point", "antipodal-chord");
    reduced.emplace(std::min(a, b), std::max(a, b));
  }
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < ell; ++i) {
    int j = (i + 1) % ell;
    auto e = std::make_pair(std::min(i, j), std::max(i, j));
    if (!reduced.count(e)) es.push_back(e);
  }
  es.insert(es.end(), reduced.begin(), reduced.end());
  return prism(Graph(ell, std::move(es)));
}

// ---------------------------------------------------------------------------
// Catalog representatives

Graph c1_representative() { return stacked_prism(5, 2); }
Graph c3_representative() { return complete(4); }

Graph c0_representative() {
  // two pentagonal prisms, each missing one base edge, chained by two edges;
  // the surviving pentagons are the only odd regions and sit on either side
  // of every 2-cut
  Graph z = stacked_prism(5, 2);  // vertex (i, layer) = 2i + layer
  std::vector<std::pair<int, int>> es;
  auto add_block = [&](int off) {
    for (auto [u, v] : z.edges)
      if (!(u == 0 && v == 8)) es.emplace_back(u + off, v + off);
  };
  add_block(0);
  add_block(10);
  es.emplace_back(0, 10);
  es.emplace_back(8, 18);
  return Graph(20, std::move(es));
}

Graph c2_representative() {
  // refine every face of the tetrahedron with an inner triangle, then take
  // the dual: a cubic polyhedron whose four odd faces pairwise meet with no
  // common point for any three
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) es.emplace_back(u, v);
  int next = 4;
  const int faces4[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (const auto& f : faces4) {
    int x = next++, y = next++, z = next++;
    es.emplace_back(x, f[0]);
    es.emplace_back(x, f[1]);
    es.emplace_back(y, f[1]);
    es.emplace_back(y, f[2]);
    es.emplace_back(z, f[2]);
    es.emplace_back(z, f[0]);
    es.emplace_back(x, y);
    es.emplace_back(y, z);
    es.emplace_back(z, x);
  }
  Graph t(next, es);
  auto emb = planar_embed(t);
  Multigraph dual = planar_dual(*emb, faces(*emb));
  return dual.to_graph();
}

std::vector<CubicBuildSpec> cubic_demo_specs() {
  std::vector<CubicBuildSpec> specs;

  // cube, one face, two opposite edges split twice each
  {
    Graph cube = stacked_prism(4, 2);
    auto emb = planar_embed(cube);
    FaceSet fs = faces(*emb);
    CubicBuildSpec s;
    s.j2 = to_multigraph(cube);
    s.region = fs.faces[0].verts;
    s.splits = {{fs.faces[0].darts[0] >> 1, 2}, {fs.faces[0].darts[2] >> 1, 2}};
    s.variant = OrderVariant::ord2;
    specs.push_back(std::move(s));
  }

  // square with two doubled opposite sides, every region edge split twice,
  // nested pairing
  {
    Multigraph j2(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 1}, {2, 3}});
    auto emb = planar_embed(j2);
    FaceSet fs = faces(*emb);
    CubicBuildSpec s;
    s.j2 = j2;
    for (const auto& f : fs.faces) {
      if (f.verts.size() == 4) {
        s.region = f.verts;
        for (int d : f.darts) s.splits.emplace_back(d >> 1, 2);
        break;
      }
    }
    s.variant = OrderVariant::ord1;
    specs.push_back(std::move(s));
  }

  // triangular prism, a square region, the two triangle edges split 1 and 3
  // times
  {
    Graph pr = stacked_prism(3, 2);
    auto emb = planar_embed(pr);
    FaceSet fs = faces(*emb);
    CubicBuildSpec s;
    s.j2 = to_multigraph(pr);
    std::vector<int> face_of(2 * s.j2.m(), -1);
    for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f)
      for (int d : fs.faces[f].darts) face_of[d] = f;
    for (const auto& f : fs.faces) {
      if (f.verts.size() != 4) continue;
      s.region = f.verts;
      for (int d : f.darts) {
        int other = face_of[Embedding::dart_twin(d)];
        if (fs.faces[other].verts.size() == 3)
          s.splits.emplace_back(d >> 1, s.splits.empty() ? 1 : 3);
      }
      break;
    }
    s.variant = OrderVariant::ord2;
    specs.push_back(std::move(s));
  }
  return specs;
}

}  // namespace polykron
