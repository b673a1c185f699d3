#ifndef POLYKRON_GENERATORS_HPP
#define POLYKRON_GENERATORS_HPP

#include <string>
#include <vector>

#include "polykron/graph.hpp"
#include "polykron/products.hpp"
#include "polykron/recognition.hpp"

namespace polykron {

// Basic families with their canonical labelings.
Graph cycle(int n);     // [u_1..u_n] as 0..n-1
Graph path(int m);      // m >= 1 vertices
Graph complete(int n);
Graph ladder(int ell);  // F_{2ell}: C_{2ell} + u_2u_{2ell-1} + ...; F_2 = K_2
Graph stacked_prism(int n, int m);  // C_n square P_m, vertex i*m + layer
Graph petersen();       // GP(5,2)
Graph desargues();      // GP(10,3)

struct FactorResult {
  Graph j;
  FactorWitness witness;
};

// J = (C_4N square P_M) + the 2N antipodal base diagonals;
// cover(J) ~ C_4N square P_2M.
FactorResult stacked_cube_factor(int N, int M);

// J = C_{2N+1} square P_M; cover(J) ~ C_{4N+2} square P_M.
Graph odd_prism_factor(int N, int M);

struct QuadFactorResult {
  Graph j;
  FactorWitness witness;
  QuadWitness quad;
};

// Quadrangulation-cover factor on a 2m-gon region with hub, split index i.
QuadFactorResult quad_factor(int m, int i);

// Iterative generator for the minimum-degree-3 quadrangulation covers.
enum class T3Move { t1, t2, t2m };
enum class T3Final { f1, f2 };

struct T3333Script {
  std::vector<T3Move> moves;
  T3Final final_step = T3Final::f1;
};

Graph t3333_build(const T3333Script& s);

// Build plan for cubic covers: split edges of an even region of a cubic
// planar multigraph, then add the pair edges.
struct CubicBuildSpec {
  Multigraph j2;
  std::vector<int> region;                  // face walk of an embedding of j2
  std::vector<std::pair<int, int>> splits;  // (edge token, split count >= 1)
  OrderVariant variant = OrderVariant::ord2;
  int start_offset = 0;  // rotation of the inserted-vertex cyclic order
};

struct CubicBuildResult {
  Graph j;
  Graph j1;
  FactorWitness witness;
};

CubicBuildResult cubic_build(const CubicBuildSpec& spec);

// Expand a quadrilateral face of a cubic planar graph: double-subdivide two
// opposite edges and add the two nested chords; stays cubic and planar, odd
// regions unchanged, order +4.
Graph quad_expand(const Graph& g, const std::vector<int>& face);

// H family for the two-Cartesian-ways / simultaneous-product constructions:
// C_2ell plus a shift-closed, crossing-free, non-antipodal chord set.
struct DouHSpec {
  int ell = 2;
  std::vector<std::pair<int, int>> chords;  // 0-based vertex pairs on C_2ell
};

Graph dou_H(const DouHSpec& spec);
// Partner factor with prism(H) ~ cover(J); ell deduced from |V(H)|.
Graph dou_J(const Graph& h);

// Derived catalog representatives (cubic planar, one per odd-face class).
Graph c0_representative();
Graph c1_representative();  // C_5 square K_2
Graph c2_representative();
Graph c3_representative();  // K_4

// Demo build plans for cubic covers, exercised by the harness.
std::vector<CubicBuildSpec> cubic_demo_specs();

}  // namespace polykron

#endif
