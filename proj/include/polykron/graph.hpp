#ifndef POLYKRON_GRAPH_HPP
#define POLYKRON_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "polykron/error.hpp"

namespace polykron {

// Simple undirected graph on vertices 0..n-1. Edges are stored sorted with
// u < v; adjacency lists are built once at construction and kept sorted.
// Treat instances as immutable values.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;

  Graph() = default;
  Graph(int n_, std::vector<std::pair<int, int>> edges_);

  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;
  int min_degree() const;
};

// Multigraph: parallel edges and loops allowed. The edge token is its index
// in `edges`. A loop contributes 2 to the degree of its vertex.
struct MEdge {
  int u, v;
};

struct Multigraph {
  int n = 0;
  std::vector<MEdge> edges;

  Multigraph() = default;
  Multigraph(int n_, std::vector<MEdge> edges_);

  int m() const { return static_cast<int>(edges.size()); }
  int degree(int v) const;
  bool is_simple() const;
  bool has_loop() const;
  // Requires is_simple(); keeps vertex and edge identities.
  Graph to_graph() const;
};

Multigraph to_multigraph(const Graph& g);

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

struct Bipartition {
  std::vector<int> color;  // 0 = class A, 1 = class B
  std::vector<int> class_a, class_b;
};

// Two-coloring per connected component; the component's lowest-index vertex
// goes to class A. Absent iff some odd cycle exists.
std::optional<Bipartition> bipartition(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);
// Components of g - removed (removed given as a sorted vertex list).
std::vector<std::vector<int>> components_after_removal(const Graph& g,
                                                       const std::vector<int>& removed);

// Exact vertex connectivity by exhaustive subset removal; K_n yields n-1.
int vertex_connectivity(const Graph& g);
bool is_k_connected(const Graph& g, int k);

struct CutPair {
  int u, v;
  std::vector<std::vector<int>> components;
};

struct SemiHyper2Report {
  bool ok = false;
  std::vector<CutPair> two_cuts;  // all 2-cuts, whatever the verdict
};

// True iff connectivity is exactly 2 and each 2-cut removal leaves exactly
// two components.
SemiHyper2Report semi_hyper_2_connected(const Graph& g);

struct SubdivisionResult {
  Graph g;
  std::vector<int> inserted;
};
struct MSubdivisionResult {
  Multigraph g;
  std::vector<int> inserted;
};

// Replace edge (u,v) by a path through `times` fresh vertices n, n+1, ...
SubdivisionResult subdivide(const Graph& g, std::pair<int, int> edge, int times);
// Multigraph version subdivides the edge with the given token.
MSubdivisionResult subdivide(const Multigraph& g, int edge_token, int times);

// Suppress each listed degree-2 vertex, merging its two incident edges.
// The survivors are renumbered densely in increasing old-id order; the
// result may have parallel edges or loops.
Multigraph smooth_degree2(const Multigraph& g, const std::vector<int>& vertices);
Multigraph smooth_degree2(const Graph& g, const std::vector<int>& vertices);

// Multiset of degrees, sorted descending.
std::vector<int> degree_sequence(const Graph& g);

// Global cap (vertex count) for the backtracking searches; reads
// POLYKRON_MAX_N once, default 32.
int search_cap();
void set_search_cap(int cap);

}  // namespace polykron

#endif
