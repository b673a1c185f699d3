#ifndef POLYKRON_PRODUCTS_HPP
#define POLYKRON_PRODUCTS_HPP

#include <string>
#include <vector>

#include "polykron/graph.hpp"

namespace polykron {

// Vertex provenance of a product: product vertex -> (factor-A vertex,
// factor-B vertex). Product vertices are numbered row-major, a*|V(B)| + b.
// For double covers the second coordinate is the tag 0 = x, 1 = y.
struct ProductLabeling {
  int nb = 1;
  std::vector<std::pair<int, int>> coords;
  bool cover_tags = false;

  std::string label(int v) const;
};

struct Product {
  Graph g;
  ProductLabeling lab;
};

// Edges (a1,b1)(a2,b2) with a1a2 in E(A) and b1b2 in E(B).
Product kronecker(const Graph& a, const Graph& b);
// Edges where one coordinate is equal and the other is a factor edge.
Product cartesian(const Graph& a, const Graph& b);
// Bipartite double cover J x K2, with x/y tags recorded.
Product cover(const Graph& j);
// H square K2.
Graph prism(const Graph& h);

// The tag-swapping fixed-point-free involution (v,x) <-> (v,y) of a cover.
std::vector<int> cover_involution(const Graph& j);

}  // namespace polykron

#endif
