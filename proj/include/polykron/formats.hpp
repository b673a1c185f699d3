#ifndef POLYKRON_FORMATS_HPP
#define POLYKRON_FORMATS_HPP

#include <string>

#include "polykron/graph.hpp"
#include "polykron/products.hpp"

namespace polykron {

// graph6: N(n) header followed by the upper-triangle bit columns, 6 bits per
// byte, each offset by 63. Bit order is x(0,1), x(0,2), x(1,2), x(0,3), ...
Graph parse_graph6(const std::string& text);
std::string emit_graph6(const Graph& g);

// {"n": int, "edges": [[u,v], ...]} with edges sorted ascending
Graph parse_json(const std::string& text);
std::string emit_json(const Graph& g);

std::string emit_dot(const Graph& g, const ProductLabeling* labels = nullptr);

}  // namespace polykron

#endif
