#include "polykron/formats.hpp"

#include <json.hpp>

namespace polykron {

Graph parse_graph6(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw Error(errc::malformed_graph6, "empty graph6 string", 0);
  size_t pos = 0;
  auto byte_at = [&](size_t i) -> int {
    if (i >= s.size())
      throw Error(errc::malformed_graph6, "truncated graph6 string", static_cast<int>(i));
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126)
      throw Error(errc::malformed_graph6, "byte out of graph6 range", static_cast<int>(i));
    return c - 63;
  };

  long long n;
  if (s[0] != '~') {
    n = byte_at(0);
    pos = 1;
  } else if (s.size() >= 2 && s[1] != '~') {
    n = (static_cast<long long>(byte_at(1)) << 12) | (byte_at(2) << 6) | byte_at(3);
    pos = 4;
  } else {
    n = 0;
    for (int i = 2; i < 8; ++i) n = (n << 6) | byte_at(i);
    pos = 8;
  }
  if (n < 0 || n > 1'000'000)
    throw Error(errc::malformed_graph6, "vertex count out of range", 0);

  long long nbits = n * (n - 1) / 2;
  long long nbytes = (nbits + 5) / 6;
  if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != nbytes)
    throw Error(errc::malformed_graph6, "wrong number of data bytes",
                static_cast<int>(s.size()));

  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int b = byte_at(pos + bit / 6);
      if ((b >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // trailing padding bits must be zero
  for (long long t = nbits; t < nbytes * 6; ++t) {
    int b = byte_at(pos + t / 6);
    if ((b >> (5 - t % 6)) & 1)
      throw Error(errc::malformed_graph6, "nonzero padding bits",
                  static_cast<int>(pos + t / 6));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string emit_graph6(const Graph& g) {
  std::string out;
  long long n = g.n;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw Error(errc::bad_params, "graph too large for this graph6 writer");
  }
  long long nbits = n * (n - 1) / 2;
  std::vector<int> groups((nbits + 5) / 6, 0);
  long long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) groups[bit / 6] |= 1 << (5 - bit % 6);
    }
  }
  for (int b : groups) out.push_back(static_cast<char>(b + 63));
  return out;
}

Graph parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(errc::malformed_json, std::string("json parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
      !j["n"].is_number_integer() || !j["edges"].is_array())
    throw Error(errc::malformed_json, "expected {\"n\": int, \"edges\": [[u,v],...]}");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw Error(errc::malformed_json, "edge entries must be [u,v] integer pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return build_graph(n, edges);
}

std::string emit_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  auto arr = nlohmann::json::array();
  for (auto [u, v] : g.edges) arr.push_back({u, v});
  j["edges"] = arr;
  return j.dump();
}

std::string emit_dot(const Graph& g, const ProductLabeling* labels) {
  std::string out = "graph G {\n";
  for (int v = 0; v < g.n; ++v) {
    out += "  " + std::to_string(v);
    if (labels) out += " [label=\"" + labels->label(v) + "\"]";
    out += ";\n";
  }
  for (auto [u, v] : g.edges)
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace polykron
