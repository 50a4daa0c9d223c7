#ifndef ANGLERIG_GRAPH_HPP
#define ANGLERIG_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace anglerig {

// Unordered vertex pair, stored with u < v. Vertices are 1-based throughout.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

struct Graph {
  int n = 0;
  std::vector<Edge> edges;  // sorted, no duplicates once validated

  std::vector<int> degrees() const;
  bool has_edge(const Edge& e) const;
};

// Simple graph with a surjective edge coloring onto {1..k}.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  // Normalizes endpoint order and sorts edges; does not validate.
  static ColoredGraph make(int n, std::vector<std::pair<Edge, int>> colored_edges);
  static ColoredGraph monochromatic(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& colors() const { return colors_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int color_of(const Edge& e) const;          // throws if e is not an edge
  int edge_index(const Edge& e) const;        // -1 if absent
  Graph skeleton() const { return Graph{n_, edges_}; }
  std::vector<Edge> color_class(int color) const;

  bool operator==(const ColoredGraph&) const = default;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> colors_;  // parallel to edges_
};

// nullopt when every invariant holds, otherwise a description of the first
// violation found (loop, duplicate edge, out-of-range vertex, color gap).
std::optional<std::string> validate(const ColoredGraph& g);

// Number of distinct colors among the given edges; throws when a non-edge
// is present.
int chi(const ColoredGraph& g, std::span<const Edge> subset);

// The monochromatic subgraph (V, E_i); throws on an unknown color.
ColoredGraph subgraph_color_restrict(const ColoredGraph& g, int color);

// --- text format ------------------------------------------------------
// Header "n k", one "u v c" line per edge, '#' comments allowed. A line
// starting with '{' is parsed as the NDJSON object form
// {"n":..,"k":..,"edges":[[u,v,c],..]}.
ColoredGraph parse_colored_graph(const std::string& text);
ColoredGraph read_colored_graph_file(const std::string& path);
std::string format_colored_graph(const ColoredGraph& g);
std::string colored_graph_json_line(const ColoredGraph& g);

// --- graph6 -----------------------------------------------------------
Graph parse_graph6(const std::string& line);
std::string write_graph6(const Graph& g);
std::vector<Graph> read_graph6_file(const std::string& path);

} // namespace anglerig

#endif
