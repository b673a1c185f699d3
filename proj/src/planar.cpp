#include "polykron/planar.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace polykron {

namespace {

// ---------------------------------------------------------------------------
// Block decomposition (simple connected graphs), classic lowpoint DFS.

struct Blocks {
  // each block is a list of edges (u,v); single-edge blocks are bridges
  std::vector<std::vector<std::pair<int, int>>> blocks;
};

Blocks biconnected_blocks(int n, const std::vector<std::vector<int>>& adj) {
  Blocks out;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> stack;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int w : adj[v]) {
      if (w == parent) {
        parent = -2;  // skip one copy of the tree edge back-reference
        continue;
      }
      if (disc[w] == -1) {
        stack.emplace_back(v, w);
        dfs(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<std::pair<int, int>> comp;
          while (true) {
            auto e = stack.back();
            stack.pop_back();
            comp.push_back(e);
            if (e == std::make_pair(v, w)) break;
          }
          out.blocks.push_back(std::move(comp));
        }
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };

  for (int v = 0; v < n; ++v)
    if (disc[v] == -1) dfs(v, -1);
  return out;
}

// ---------------------------------------------------------------------------
// Demoucron-style planarity for one 2-connected block.
//
// Faces are maintained as dart cycles over the block's edges; every dart
// lies on exactly one face. Bridges relative to the embedded subgraph are
// inserted one path at a time, always serving a bridge with a unique
// admissible face first.

struct BlockEmbedder {
  int n;                                      // global vertex count
  std::vector<std::pair<int, int>> edges;     // block edges, local tokens
  std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (nbr, edge)

  std::vector<char> edge_in;   // embedded edges
  std::vector<char> vert_in;   // embedded vertices
  std::vector<std::vector<int>> faces;  // dart cycles

  explicit BlockEmbedder(int n_, std::vector<std::pair<int, int>> es)
      : n(n_), edges(std::move(es)) {
    adj.assign(n, {});
    for (int t = 0; t < static_cast<int>(edges.size()); ++t) {
      adj[edges[t].first].emplace_back(edges[t].second, t);
      adj[edges[t].second].emplace_back(edges[t].first, t);
    }
    edge_in.assign(edges.size(), 0);
    vert_in.assign(n, 0);
  }

  int tail(int d) const { return (d & 1) ? edges[d >> 1].second : edges[d >> 1].first; }
  int head(int d) const { return (d & 1) ? edges[d >> 1].first : edges[d >> 1].second; }
  int dart(int token, int from) const { return 2 * token + (edges[token].first == from ? 0 : 1); }

  std::vector<int> find_cycle() const {
    // DFS from the smallest vertex of the block until a back edge closes
    int start = edges[0].first;
    std::vector<int> parent(n, -1), order;
    std::vector<char> seen(n, 0);
    std::function<std::vector<int>(int)> dfs = [&](int v) -> std::vector<int> {
      seen[v] = 1;
      for (auto [w, t] : adj[v]) {
        (void)t;
        if (!seen[w]) {
          parent[w] = v;
          auto r = dfs(w);
          if (!r.empty()) return r;
        } else if (w != parent[v]) {
          // close cycle w .. v
          std::vector<int> cyc{v};
          for (int x = v; x != w; x = parent[x]) cyc.push_back(parent[x]);
          std::reverse(cyc.begin(), cyc.end());
          return cyc;
        }
      }
      return {};
    };
    return dfs(start);
  }

  struct Bridge {
    std::vector<int> attachments;  // sorted embedded vertices
    std::vector<int> inner;        // non-embedded vertices (may be empty)
    int chord_token = -1;          // set for single-edge bridges
  };

  std::vector<Bridge> bridges() const {
    std::vector<Bridge> out;
    // chords
    for (int t = 0; t < static_cast<int>(edges.size()); ++t) {
      if (edge_in[t]) continue;
      auto [u, v] = edges[t];
      if (vert_in[u] && vert_in[v]) {
        Bridge b;
        b.attachments = {std::min(u, v), std::max(u, v)};
        b.chord_token = t;
        out.push_back(std::move(b));
      }
    }
    // components of block minus embedded vertices
    std::vector<char> seen(n, 0);
    for (auto [u0, v0] : edges) {
      for (int s : {u0, v0}) {
        if (vert_in[s] || seen[s]) continue;
        Bridge b;
        std::set<int> att;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          b.inner.push_back(v);
          for (auto [w, t] : adj[v]) {
            (void)t;
            if (vert_in[w]) {
              att.insert(w);
            } else if (!seen[w]) {
              seen[w] = 1;
              stack.push_back(w);
            }
          }
        }
        b.attachments.assign(att.begin(), att.end());
        std::sort(b.inner.begin(), b.inner.end());
        out.push_back(std::move(b));
      }
    }
    std::sort(out.begin(), out.end(), [](const Bridge& a, const Bridge& b) {
      if (a.attachments != b.attachments) return a.attachments < b.attachments;
      if (a.chord_token != b.chord_token) return a.chord_token < b.chord_token;
      return a.inner < b.inner;
    });
    return out;
  }

  std::vector<int> admissible_faces(const Bridge& b) const {
    std::vector<int> ids;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
      std::set<int> verts;
      for (int d : faces[f]) verts.insert(tail(d));
      bool ok = std::all_of(b.attachments.begin(), b.attachments.end(),
                            [&](int a) { return verts.count(a) > 0; });
      if (ok) ids.push_back(f);
    }
    return ids;
  }

  // Path between two attachments through the bridge: list of edge tokens
  // plus the vertex sequence.
  void bridge_path(const Bridge& b, std::vector<int>& verts, std::vector<int>& tokens) const {
    if (b.chord_token != -1) {
      verts = {b.attachments[0], b.attachments[1]};
      tokens = {b.chord_token};
      return;
    }
    int a = b.attachments[0];
    std::vector<char> inb(n, 0);
    for (int v : b.inner) inb[v] = 1;
    // BFS from a through inner vertices to any other attachment
    std::vector<int> prev_v(n, -1), prev_t(n, -1);
    std::vector<int> queue;
    std::vector<char> seen(n, 0);
    seen[a] = 1;
    queue.push_back(a);
    int goal = -1;
    for (size_t qi = 0; qi < queue.size() && goal == -1; ++qi) {
      int v = queue[qi];
      for (auto [w, t] : adj[v]) {
        if (seen[w]) continue;
        if (v == a && !inb[w]) continue;  // leave a only into the bridge
        if (vert_in[w]) {
          if (w != a) {
            prev_v[w] = v;
            prev_t[w] = t;
            goal = w;
            break;
          }
          continue;
        }
        if (!inb[w]) continue;
        seen[w] = 1;
        prev_v[w] = v;
        prev_t[w] = t;
        queue.push_back(w);
      }
    }
    verts.clear();
    tokens.clear();
    for (int x = goal; x != -1; x = prev_v[x]) {
      verts.push_back(x);
      if (prev_t[x] != -1) tokens.push_back(prev_t[x]);
    }
    std::reverse(verts.begin(), verts.end());
    std::reverse(tokens.begin(), tokens.end());
  }

  void split_face(int f, const std::vector<int>& pverts, const std::vector<int>& ptokens) {
    int a = pverts.front(), bb = pverts.back();
    std::vector<int> fc = faces[f];
    int L = static_cast<int>(fc.size());
    int ia = -1, ib = -1;
    for (int i = 0; i < L; ++i) {
      if (tail(fc[i]) == a) ia = i;
      if (tail(fc[i]) == bb) ib = i;
    }
    // path darts a->b and b->a
    std::vector<int> fwd, bwd;
    for (size_t i = 0; i < ptokens.size(); ++i) fwd.push_back(dart(ptokens[i], pverts[i]));
    for (size_t i = ptokens.size(); i-- > 0;) bwd.push_back(dart(ptokens[i], pverts[i + 1]));
    std::vector<int> f1 = fwd, f2 = bwd;
    for (int i = ib; i != ia; i = (i + 1) % L) f1.push_back(fc[i]);
    for (int i = ia; i != ib; i = (i + 1) % L) f2.push_back(fc[i]);
    faces.erase(faces.begin() + f);
    faces.push_back(std::move(f1));
    faces.push_back(std::move(f2));
  }

  // Returns false if non-planar.
  bool run() {
    auto cyc = find_cycle();
    std::vector<int> fwd, bwd;
    int L = static_cast<int>(cyc.size());
    for (int i = 0; i < L; ++i) {
      int u = cyc[i], v = cyc[(i + 1) % L];
      int token = -1;
      for (auto [w, t] : adj[u])
        if (w == v) {
          token = t;
          break;
        }
      fwd.push_back(dart(token, u));
      edge_in[token] = 1;
      vert_in[u] = 1;
    }
    for (int i = L; i-- > 0;) bwd.push_back(fwd[i] ^ 1);
    faces.push_back(fwd);
    faces.push_back(bwd);

    while (true) {
      auto brs = bridges();
      if (brs.empty()) return true;
      // serve a uniquely-admissible bridge first
      int pick = -1, pick_face = -1;
      for (int i = 0; i < static_cast<int>(brs.size()); ++i) {
        auto adm = admissible_faces(brs[i]);
        if (adm.empty()) return false;
        if (adm.size() == 1) {
          pick = i;
          pick_face = adm[0];
          break;
        }
        if (pick == -1) {
          pick = i;
          pick_face = adm[0];
        }
      }
      std::vector<int> pverts, ptokens;
      bridge_path(brs[pick], pverts, ptokens);
      for (int t : ptokens) edge_in[t] = 1;
      for (int v : pverts) vert_in[v] = 1;
      split_face(pick_face, pverts, ptokens);
    }
  }

  // rotation lists per vertex, derived from the face cycles
  // (rot_next[twin(d)] = successor of d on its face)
  std::vector<std::vector<int>> rotations() const {
    std::vector<int> next(2 * edges.size(), -1);
    for (const auto& fc : faces) {
      int L = static_cast<int>(fc.size());
      for (int i = 0; i < L; ++i) next[fc[i] ^ 1] = fc[(i + 1) % L];
    }
    std::vector<std::vector<int>> rot(n);
    std::vector<char> done(2 * edges.size(), 0);
    for (int d0 = 0; d0 < static_cast<int>(2 * edges.size()); ++d0) {
      if (done[d0]) continue;
      int v = tail(d0);
      int d = d0;
      do {
        rot[v].push_back(d);
        done[d] = 1;
        d = next[d];
        if (d == -1) throw Error(errc::corrupt_rotation, "face complex is not closed");
      } while (d != d0);
    }
    return rot;
  }
};

// ---------------------------------------------------------------------------
// Expansion of a multigraph into a simple graph (loops subdivided twice,
// extra parallel copies once), with bookkeeping to translate rotations back.

struct Expansion {
  int orig_n;
  std::vector<std::pair<int, int>> simple_edges;
  // for each simple edge: original edge token, and whether it is the first /
  // last segment of that edge's path (needed to translate darts back)
  struct SegInfo {
    int orig_edge;
    bool first, last;
  };
  std::vector<SegInfo> seg;
  int n_total;
};

Expansion expand(const Multigraph& g) {
  Expansion ex;
  ex.orig_n = g.n;
  int next_vertex = g.n;
  std::map<std::pair<int, int>, int> seen_pair;
  for (int t = 0; t < g.m(); ++t) {
    int u = g.edges[t].u, v = g.edges[t].v;
    int parts = 1;
    if (u == v) {
      parts = 3;
    } else {
      auto key = std::make_pair(std::min(u, v), std::max(u, v));
      int c = seen_pair[key]++;
      if (c > 0) parts = 2;
    }
    int prev = u;
    for (int i = 0; i < parts; ++i) {
      int nxt = (i == parts - 1) ? v : next_vertex++;
      ex.simple_edges.emplace_back(prev, nxt);
      ex.seg.push_back({t, i == 0, i == parts - 1});
      prev = nxt;
    }
  }
  ex.n_total = next_vertex;
  return ex;
}

}  // namespace

std::optional<Embedding> planar_embed(const Multigraph& g) {
  Expansion ex = expand(g);
  int N = ex.n_total;
  std::vector<std::vector<int>> adj(N);
  for (auto [u, v] : ex.simple_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  Blocks blocks = biconnected_blocks(N, adj);

  // expanded-graph rotations as (simple edge token, side) darts
  std::vector<std::vector<int>> xrot(N);
  std::map<std::pair<int, int>, int> edge_token;  // expanded graph is simple
  for (int t = 0; t < static_cast<int>(ex.simple_edges.size()); ++t) {
    auto [u, v] = ex.simple_edges[t];
    edge_token[{std::min(u, v), std::max(u, v)}] = t;
  }

  for (const auto& block : blocks.blocks) {
    if (block.size() == 1) {
      auto [u, v] = block[0];
      int t = edge_token[{std::min(u, v), std::max(u, v)}];
      int d = 2 * t + (ex.simple_edges[t].first == u ? 0 : 1);
      xrot[u].push_back(d);
      xrot[v].push_back(d ^ 1);
      continue;
    }
    // map block onto local edge list with global vertex ids
    std::vector<std::pair<int, int>> es;
    es.reserve(block.size());
    std::vector<int> global_tokens;
    for (auto [u, v] : block) {
      int t = edge_token[{std::min(u, v), std::max(u, v)}];
      global_tokens.push_back(t);
      es.push_back(ex.simple_edges[t]);
    }
    BlockEmbedder be(N, es);
    if (!be.run()) return std::nullopt;
    auto rot = be.rotations();
    for (int v = 0; v < N; ++v) {
      for (int d : rot[v]) {
        int gt = global_tokens[d >> 1];
        xrot[v].push_back(2 * gt + (d & 1));
      }
    }
  }

  // translate expanded rotations back onto the original multigraph
  Embedding emb;
  emb.g = g;
  emb.rot.assign(g.n, {});
  // first contract the inserted path vertices inside xrot
  // chain contraction: walk from each original vertex along path segments
  for (int v = 0; v < g.n; ++v) {
    for (int xd : xrot[v]) {
      int t = xd >> 1;
      const auto& si = ex.seg[t];
      int side;
      if ((xd & 1) == 0) {
        // tail is simple_edges[t].first
        side = si.first ? 0 : 1;  // first segment leaves the original u
      } else {
        side = si.last ? 1 : 0;
      }
      emb.rot[v].push_back(2 * si.orig_edge + side);
    }
  }

  // deterministic reflection normalization: the lexicographically smallest
  // face walk must be achieved by some forward rotation of its trace
  FaceSet fs = faces(emb);
  if (!fs.faces.empty()) {
    auto forward_achieves = [](const std::vector<int>& walk, const std::vector<int>& key) {
      int L = static_cast<int>(walk.size());
      for (int s = 0; s < L; ++s) {
        bool eq = true;
        for (int i = 0; i < L && eq; ++i) eq = walk[(s + i) % L] == key[i];
        if (eq) return true;
      }
      return false;
    };
    std::vector<int> best_key;
    bool fwd_hits = false;
    for (const auto& f : fs.faces) {
      auto key = canonical_face_key(f.verts);
      if (best_key.empty() || key < best_key) {
        best_key = key;
        fwd_hits = forward_achieves(f.verts, key);
      } else if (key == best_key && !fwd_hits) {
        fwd_hits = forward_achieves(f.verts, key);
      }
    }
    if (!fwd_hits)
      for (auto& r : emb.rot) std::reverse(r.begin(), r.end());
  }
  return emb;
}

std::optional<Embedding> planar_embed(const Graph& g) {
  return planar_embed(to_multigraph(g));
}

bool is_planar(const Multigraph& g) { return planar_embed(g).has_value(); }
bool is_planar(const Graph& g) { return planar_embed(g).has_value(); }

int FaceSet::face_count() const {
  if (faces.empty()) return 1;
  if (!merged_outer) return static_cast<int>(faces.size());
  return static_cast<int>(faces.size()) - static_cast<int>(outer_group.size()) + 1;
}

FaceSet faces(const Embedding& e) {
  FaceSet fs;
  fs.p = e.g.n;
  fs.q = e.g.m();
  int nd = 2 * e.g.m();

  // successor map: next dart after d is rot-next of twin(d) at head(d)
  std::vector<int> pos(nd, -1);
  std::vector<int> owner(nd, -1);
  for (int v = 0; v < e.g.n; ++v) {
    for (int i = 0; i < static_cast<int>(e.rot[v].size()); ++i) {
      int d = e.rot[v][i];
      if (d < 0 || d >= nd || pos[d] != -1)
        throw Error(errc::corrupt_rotation, "bad dart in rotation");
      if (e.dart_tail(d) != v)
        throw Error(errc::corrupt_rotation, "dart listed at wrong vertex");
      pos[d] = i;
      owner[d] = v;
    }
  }
  for (int d = 0; d < nd; ++d)
    if (pos[d] == -1) throw Error(errc::corrupt_rotation, "dart missing from rotation");

  std::vector<char> used(nd, 0);
  std::vector<int> face_of(nd, -1);
  for (int d0 = 0; d0 < nd; ++d0) {
    if (used[d0]) continue;
    Face f;
    int d = d0;
    do {
      used[d] = 1;
      face_of[d] = static_cast<int>(fs.faces.size());
      f.darts.push_back(d);
      f.verts.push_back(e.dart_tail(d));
      int tw = Embedding::dart_twin(d);
      int v = e.dart_tail(tw);
      const auto& r = e.rot[v];
      d = r[(pos[tw] + 1) % r.size()];
    } while (d != d0);
    fs.faces.push_back(std::move(f));
  }

  // component structure for outer-face designation
  std::vector<int> comp(e.g.n, -1);
  int nc = 0;
  {
    std::vector<std::vector<int>> adj(e.g.n);
    for (const auto& ed : e.g.edges) {
      adj[ed.u].push_back(ed.v);
      adj[ed.v].push_back(ed.u);
    }
    for (int s = 0; s < e.g.n; ++s) {
      if (comp[s] != -1) continue;
      comp[s] = nc;
      std::vector<int> st{s};
      while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w : adj[v])
          if (comp[w] == -1) {
            comp[w] = nc;
            st.push_back(w);
          }
      }
      ++nc;
    }
  }
  // designated outer face per edge-bearing component: minimal canonical key
  std::map<int, std::pair<std::vector<int>, int>> best;  // comp -> (key, face)
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
    if (fs.faces[f].verts.empty()) continue;
    int c = comp[fs.faces[f].verts[0]];
    auto key = canonical_face_key(fs.faces[f].verts);
    auto it = best.find(c);
    if (it == best.end() || key < it->second.first) best[c] = {key, f};
  }
  for (auto& [c, kf] : best) fs.outer_group.push_back(kf.second);
  std::sort(fs.outer_group.begin(), fs.outer_group.end());
  fs.merged_outer = best.size() > 1;
  fs.outer = fs.outer_group.empty() ? 0 : fs.outer_group[0];
  return fs;
}

FaceStats face_stats(const FaceSet& fs) {
  FaceStats st;
  st.p = fs.p;
  st.q = fs.q;
  st.r = fs.face_count();
  if (fs.faces.empty()) {
    if (st.r == 1) st.r_k[0] = 1;
    return st;
  }
  if (!fs.merged_outer) {
    for (const auto& f : fs.faces) st.r_k[static_cast<int>(f.verts.size())]++;
  } else {
    std::set<int> outer(fs.outer_group.begin(), fs.outer_group.end());
    int outer_len = 0;
    for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
      if (outer.count(f))
        outer_len += static_cast<int>(fs.faces[f].verts.size());
      else
        st.r_k[static_cast<int>(fs.faces[f].verts.size())]++;
    }
    st.r_k[outer_len]++;
  }
  return st;
}

std::vector<int> canonical_face_key(const std::vector<int>& walk) {
  int L = static_cast<int>(walk.size());
  if (L == 0) return {};
  std::vector<int> best;
  for (int dir = 0; dir < 2; ++dir) {
    std::vector<int> w = walk;
    if (dir == 1) std::reverse(w.begin(), w.end());
    for (int s = 0; s < L; ++s) {
      std::vector<int> cand(L);
      for (int i = 0; i < L; ++i) cand[i] = w[(s + i) % L];
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

bool is_polyhedron(const Graph& g) {
  if (g.n < 4) return false;
  if (!is_k_connected(g, 3)) return false;
  return is_planar(g);
}

bool is_outerplanar(const Graph& g) {
  if (g.n <= 2) return true;
  std::vector<std::pair<int, int>> es = g.edges;
  for (int v = 0; v < g.n; ++v) es.emplace_back(v, g.n);
  return is_planar(Graph(g.n + 1, std::move(es)));
}

bool is_quadrangulation(const Graph& g) {
  if (!is_polyhedron(g)) return false;
  auto emb = planar_embed(g);
  auto fs = faces(*emb);
  return std::all_of(fs.faces.begin(), fs.faces.end(),
                     [](const Face& f) { return f.verts.size() == 4; });
}

OddFacePattern odd_face_pattern_from(const FaceSet& fs) {
  OddFacePattern pat;
  std::vector<std::vector<int>> vsets(fs.faces.size());
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f) {
    if (fs.faces[f].verts.size() % 2 == 1) pat.odd_faces.push_back(f);
    auto vs = fs.faces[f].verts;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    vsets[f] = std::move(vs);
  }
  auto inter = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  };
  int k = static_cast<int>(pat.odd_faces.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      pat.pairwise[{i, j}] = inter(vsets[pat.odd_faces[i]], vsets[pat.odd_faces[j]]);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int l = j + 1; l < k; ++l)
        pat.triples[{i, j, l}] =
            inter(inter(vsets[pat.odd_faces[i]], vsets[pat.odd_faces[j]]),
                  vsets[pat.odd_faces[l]]);
  return pat;
}

OddFacePattern odd_face_pattern(const Graph& g, const Embedding& e) {
  (void)g;
  return odd_face_pattern_from(faces(e));
}

Multigraph planar_dual(const Embedding& e, const FaceSet& fs) {
  std::vector<int> face_of(2 * e.g.m(), -1);
  for (int f = 0; f < static_cast<int>(fs.faces.size()); ++f)
    for (int d : fs.faces[f].darts) face_of[d] = f;
  std::vector<MEdge> es;
  for (int t = 0; t < e.g.m(); ++t)
    es.push_back({face_of[2 * t], face_of[2 * t + 1]});
  return Multigraph(static_cast<int>(fs.faces.size()), std::move(es));
}

}  // namespace polykron
