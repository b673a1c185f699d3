#ifndef POLYKRON_RECOGNITION_HPP
#define POLYKRON_RECOGNITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "polykron/graph.hpp"
#include "polykron/planar.hpp"

namespace polykron {

// Odd-face classes that characterise when a double cover is polyhedral.
enum class OddFaceTag { c0, c1, c2, c3, none };

const char* odd_face_tag_name(OddFaceTag t);

struct OddFaceCondition {
  OddFaceTag tag = OddFaceTag::none;
  std::vector<std::vector<int>> odd_faces;  // boundary walks
  int shared_vertex = -1;                   // c3 evidence
  std::vector<std::pair<int, int>> two_cuts;  // c0 evidence
  std::string notes;
};

// Classify a planar graph by its odd faces (checked c1 -> c2 -> c3 -> c0;
// c1-c3 require a polyhedron, c0 requires connectivity exactly 2).
// tag != none  <=>  the double cover is a polyhedron.
OddFaceCondition classify_odd_faces(const Graph& j);

enum class OrderVariant { ord1, ord2 };

// Decomposition J = J' + a_1b_1 + ... + a_mb_m against a region of J'.
struct FactorWitness {
  Graph jprime;
  std::vector<std::pair<int, int>> pairs;  // (a_i, b_i)
  std::vector<int> region;                 // face walk of J'
  OrderVariant variant = OrderVariant::ord2;
};

struct WitnessReport {
  bool ok = false;
  std::string failure;  // first failed clause, empty when ok
  std::string notes;
};

WitnessReport verify_factor_witness(const Graph& j, const FactorWitness& w);

// Search for a valid witness: removable edge subsets in (size, lex) order,
// every face of the computed J' embedding as candidate region.
std::optional<FactorWitness> find_factor_witness(const Graph& j,
                                                 long long subset_budget = 2'000'000);

// Region labeling for quadrangulation covers: region = [v_1..v_2l],
// a_i = v_{r_i}, b_i = v_{s_i} (indices 1-based).
struct QuadWitness {
  std::vector<int> region_labels;  // v_1..v_2l as vertex ids
  std::vector<int> r, s;
};

bool verify_quad_witness(const Graph& j, const FactorWitness& w, const QuadWitness& q);

struct Root {
  Graph j;
  std::vector<int> involution;  // automorphism of the input graph
};

struct RootSet {
  std::vector<Root> roots;  // deduplicated up to isomorphism
};

// All J with J x K2 isomorphic to g, via fixed-point-free class-swapping
// involutions and their orbit quotients.
RootSet kronecker_roots(const Graph& g);

struct CartesianVariant {
  enum class Kind { stacked_prism, prism_over };
  Kind kind;
  int n = 0, m = 0;  // stacked prism parameters
  Graph h;           // prism_over factor
};

struct CartesianForm {
  std::vector<CartesianVariant> variants;  // distinct factor pairs up to iso
};

CartesianForm cartesian_forms(const Graph& g);

// Helpers shared with the generators and the harness.
bool region_is_face_of(const Graph& jprime, const std::vector<int>& region);
bool cyclic_order_realized(const std::vector<int>& face,
                           const std::vector<int>& sequence);

}  // namespace polykron

#endif
