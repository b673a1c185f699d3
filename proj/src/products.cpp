#include "polykron/products.hpp"

namespace polykron {

std::string ProductLabeling::label(int v) const {
  auto [a, b] = coords[v];
  if (cover_tags) return "(" + std::to_string(a) + "," + (b == 0 ? "x" : "y") + ")";
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

namespace {

ProductLabeling grid_labeling(int na, int nb, bool tags) {
  ProductLabeling lab;
  lab.nb = nb;
  lab.cover_tags = tags;
  lab.coords.reserve(static_cast<size_t>(na) * nb);
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) lab.coords.emplace_back(a, b);
  return lab;
}

}  // namespace

Product kronecker(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> es;
  es.reserve(2ull * a.edges.size() * b.edges.size());
  for (auto [a1, a2] : a.edges) {
    for (auto [b1, b2] : b.edges) {
      es.emplace_back(a1 * b.n + b1, a2 * b.n + b2);
      es.emplace_back(a1 * b.n + b2, a2 * b.n + b1);
    }
  }
  return {Graph(a.n * b.n, std::move(es)), grid_labeling(a.n, b.n, false)};
}

Product cartesian(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v < a.n; ++v)
    for (auto [b1, b2] : b.edges) es.emplace_back(v * b.n + b1, v * b.n + b2);
  for (auto [a1, a2] : a.edges)
    for (int w = 0; w < b.n; ++w) es.emplace_back(a1 * b.n + w, a2 * b.n + w);
  return {Graph(a.n * b.n, std::move(es)), grid_labeling(a.n, b.n, false)};
}

Product cover(const Graph& j) {
  Graph k2(2, {{0, 1}});
  Product p = kronecker(j, k2);
  p.lab.cover_tags = true;
  return p;
}

Graph prism(const Graph& h) {
  Graph k2(2, {{0, 1}});
  return cartesian(h, k2).g;
}

std::vector<int> cover_involution(const Graph& j) {
  std::vector<int> sigma(2 * j.n);
  for (int v = 0; v < j.n; ++v) {
    sigma[2 * v] = 2 * v + 1;
    sigma[2 * v + 1] = 2 * v;
  }
  return sigma;
}

}  // namespace polykron
