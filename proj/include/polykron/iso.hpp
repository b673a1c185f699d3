#ifndef POLYKRON_ISO_HPP
#define POLYKRON_ISO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polykron/graph.hpp"

namespace polykron {

// Canonical certificate: the lexicographically minimal upper-triangle
// adjacency bitstring over the refinement-pruned relabeling search.
// Equal certificates <=> isomorphic graphs.
struct Certificate {
  int n = 0;
  int m = 0;
  std::vector<std::uint64_t> bits;

  bool operator==(const Certificate& o) const = default;
  bool operator<(const Certificate& o) const;
  std::string hex() const;
};

Certificate canonical_form(const Graph& g);
// Also exposes one vertex relabeling achieving the certificate
// (perm[old] = new).
Certificate canonical_form(const Graph& g, std::vector<int>& perm_out);

bool is_isomorphic(const Graph& a, const Graph& b);

// Full automorphism list (perm[old] = new), deterministic order.
// Guarded by the global search cap.
std::vector<std::vector<int>> automorphisms(const Graph& g);

Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

}  // namespace polykron

#endif
