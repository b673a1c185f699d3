#include "polykron/iso.hpp"

#include <algorithm>
#include <map>

namespace polykron {

bool Certificate::operator<(const Certificate& o) const {
  if (n != o.n) return n < o.n;
  if (m != o.m) return m < o.m;
  return bits < o.bits;
}

std::string Certificate::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(bits.size() * 16 + 8);
  for (std::uint64_t w : bits)
    for (int k = 60; k >= 0; k -= 4) s.push_back(digits[(w >> k) & 0xf]);
  return std::to_string(n) + ":" + s;
}

namespace {

constexpr long long kNodeBudget = 8'000'000;

// Ordered partition of 0..n-1 into cells; refinement keeps it equitable
// (every vertex in a cell has the same neighbour count into every cell).
struct Search {
  const Graph& g;
  long long nodes = 0;
  bool want_best = true;                       // track minimal certificate
  Certificate best;
  std::vector<int> best_perm;                  // perm[old] = new
  bool have_best = false;
  bool collect_autos = false;
  std::vector<std::vector<int>> autos;

  explicit Search(const Graph& g_) : g(g_) {}

  Certificate bits_under(const std::vector<int>& perm) const {
    // perm[old] = new; bit for new pair (i,j), i<j, row-major, MSB first.
    Certificate c;
    c.n = g.n;
    c.m = g.m();
    int nbits = g.n * (g.n - 1) / 2;
    c.bits.assign(static_cast<size_t>((nbits + 63) / 64), 0);
    std::vector<int> inv(g.n);
    for (int v = 0; v < g.n; ++v) inv[perm[v]] = v;
    int b = 0;
    for (int i = 0; i < g.n; ++i) {
      for (int j = i + 1; j < g.n; ++j, ++b) {
        if (g.has_edge(inv[i], inv[j]))
          c.bits[b >> 6] |= (1ULL << (63 - (b & 63)));
      }
    }
    return c;
  }

  // Split cells until equitable. Deterministic: scan cells left to right,
  // split by (count vector, vertex id) keys.
  static void refine(const Graph& g, std::vector<std::vector<int>>& cells) {
    bool changed = true;
    std::vector<int> cnt(g.n);
    while (changed) {
      changed = false;
      for (size_t t = 0; t < cells.size() && !changed; ++t) {
        // counts of neighbours in cells[t]
        std::fill(cnt.begin(), cnt.end(), 0);
        for (int v : cells[t])
          for (int w : g.adj[v]) ++cnt[w];
        for (size_t s = 0; s < cells.size(); ++s) {
          if (cells[s].size() <= 1) continue;
          int c0 = cnt[cells[s][0]];
          bool uniform = std::all_of(cells[s].begin(), cells[s].end(),
                                     [&](int v) { return cnt[v] == c0; });
          if (uniform) continue;
          std::map<int, std::vector<int>> groups;
          for (int v : cells[s]) groups[cnt[v]].push_back(v);
          std::vector<std::vector<int>> repl;
          for (auto& [k, vs] : groups) repl.push_back(std::move(vs));
          cells.erase(cells.begin() + s);
          cells.insert(cells.begin() + s, repl.begin(), repl.end());
          changed = true;
          break;
        }
      }
    }
  }

  void run() {
    std::vector<std::vector<int>> cells;
    std::map<int, std::vector<int>> by_deg;
    for (int v = 0; v < g.n; ++v) by_deg[g.degree(v)].push_back(v);
    for (auto& [d, vs] : by_deg) cells.push_back(std::move(vs));
    descend(cells);
    if (collect_autos) {
      // leaves with minimal bits give automorphisms relative to best_perm
      std::sort(autos.begin(), autos.end());
      autos.erase(std::unique(autos.begin(), autos.end()), autos.end());
    }
  }

  void descend(std::vector<std::vector<int>> cells) {
    if (++nodes > kNodeBudget)
      throw Error(errc::search_budget_exceeded, "canonical search budget exceeded");
    refine(g, cells);
    int target = -1;
    for (size_t s = 0; s < cells.size(); ++s) {
      if (cells[s].size() > 1) {
        target = static_cast<int>(s);
        break;
      }
    }
    if (target == -1) {
      std::vector<int> perm(g.n);
      int pos = 0;
      for (const auto& cell : cells) perm[cell[0]] = pos++;
      Certificate c = bits_under(perm);
      if (!have_best || c < best) {
        best = std::move(c);
        best_perm = perm;
        have_best = true;
        if (collect_autos) {
          autos.clear();
          std::vector<int> id(g.n);
          for (int v = 0; v < g.n; ++v) id[v] = v;
          autos.push_back(std::move(id));
        }
      } else if (collect_autos && c == best) {
        // best_perm and perm relabel g onto the same graph, so
        // sigma[v] = perm^-1[best_perm[v]] is an automorphism.
        std::vector<int> inv(g.n);
        for (int v = 0; v < g.n; ++v) inv[perm[v]] = v;
        std::vector<int> sigma(g.n);
        for (int v = 0; v < g.n; ++v) sigma[v] = inv[best_perm[v]];
        autos.push_back(std::move(sigma));
      }
      return;
    }
    for (int v : cells[target]) {
      std::vector<std::vector<int>> next;
      next.reserve(cells.size() + 1);
      for (size_t s = 0; s < cells.size(); ++s) {
        if (static_cast<int>(s) == target) {
          next.push_back({v});
          std::vector<int> rest;
          for (int w : cells[s])
            if (w != v) rest.push_back(w);
          next.push_back(std::move(rest));
        } else {
          next.push_back(cells[s]);
        }
      }
      descend(std::move(next));
    }
  }
};

}  // namespace

Certificate canonical_form(const Graph& g, std::vector<int>& perm_out) {
  if (g.n == 0) {
    perm_out.clear();
    return Certificate{0, 0, {}};
  }
  Search s(g);
  s.run();
  perm_out = s.best_perm;
  return s.best;
}

Certificate canonical_form(const Graph& g) {
  std::vector<int> perm;
  return canonical_form(g, perm);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.m() != b.m()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<std::vector<int>> automorphisms(const Graph& g) {
  if (g.n > search_cap())
    throw Error(errc::search_budget_exceeded,
                "graph larger than search cap (" + std::to_string(search_cap()) + ")");
  if (g.n == 0) return {{}};
  Search s(g);
  s.collect_autos = true;
  s.run();
  // identity is always found (best_perm composed with itself)
  return s.autos;
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> es;
  es.reserve(g.edges.size());
  for (auto [u, v] : g.edges) es.emplace_back(perm[u], perm[v]);
  return Graph(g.n, std::move(es));
}

}  // namespace polykron
