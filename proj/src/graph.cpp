#include "anglerig/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace anglerig {

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n + 1, 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool Graph::has_edge(const Edge& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

ColoredGraph ColoredGraph::make(int n, std::vector<std::pair<Edge, int>> colored_edges) {
  std::sort(colored_edges.begin(), colored_edges.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  ColoredGraph g;
  g.n_ = n;
  g.edges_.reserve(colored_edges.size());
  g.colors_.reserve(colored_edges.size());
  int k = 0;
  for (const auto& [e, c] : colored_edges) {
    g.edges_.push_back(e);
    g.colors_.push_back(c);
    k = std::max(k, c);
  }
  g.k_ = k;
  return g;
}

ColoredGraph ColoredGraph::monochromatic(int n, std::vector<Edge> edges) {
  std::vector<std::pair<Edge, int>> ce;
  ce.reserve(edges.size());
  for (const Edge& e : edges) ce.emplace_back(e, 1);
  return make(n, std::move(ce));
}

int ColoredGraph::edge_index(const Edge& e) const {
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

int ColoredGraph::color_of(const Edge& e) const {
  const int i = edge_index(e);
  if (i < 0) throw std::invalid_argument("not an edge");
  return colors_[i];
}

std::vector<Edge> ColoredGraph::color_class(int color) const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (colors_[i] == color) out.push_back(edges_[i]);
  return out;
}

std::optional<std::string> validate(const ColoredGraph& g) {
  if (g.n() < 0) return "negative vertex count";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (e.u == e.v) return "loop at vertex " + std::to_string(e.u);
    if (e.u < 1 || e.v > g.n())
      return "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of vertex range";
    if (i > 0 && g.edges()[i - 1] == e)
      return "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
  }
  std::vector<bool> used(static_cast<std::size_t>(g.k()) + 1, false);
  for (int c : g.colors()) {
    if (c < 1 || c > g.k()) return "color " + std::to_string(c) + " outside 1.." + std::to_string(g.k());
    used[c] = true;
  }
  for (int c = 1; c <= g.k(); ++c)
    if (!used[c]) return "color gap: color " + std::to_string(c) + " unused";
  return std::nullopt;
}

int chi(const ColoredGraph& g, std::span<const Edge> subset) {
  std::set<int> seen;
  for (const Edge& e : subset) {
    const int i = g.edge_index(e);
    if (i < 0)
      throw std::invalid_argument("subset contains non-edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
    seen.insert(g.colors()[i]);
  }
  return static_cast<int>(seen.size());
}

ColoredGraph subgraph_color_restrict(const ColoredGraph& g, int color) {
  if (color < 1 || color > g.k()) throw std::invalid_argument("unknown color " + std::to_string(color));
  std::vector<std::pair<Edge, int>> ce;
  for (std::size_t i = 0; i < g.edges().size(); ++i)
    if (g.colors()[i] == color) ce.emplace_back(g.edges()[i], 1);
  return ColoredGraph::make(g.n(), std::move(ce));
}

namespace {

ColoredGraph parse_json_object(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::pair<Edge, int>> ce;
  for (const auto& row : j.at("edges"))
    ce.emplace_back(Edge(row.at(0).get<int>(), row.at(1).get<int>()), row.at(2).get<int>());
  ColoredGraph g = ColoredGraph::make(j.at("n").get<int>(), std::move(ce));
  if (j.contains("k") && j.at("k").get<int>() != g.k())
    throw std::invalid_argument("declared k does not match edge colors");
  return g;
}

} // namespace

ColoredGraph parse_colored_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1, k = -1;
  std::vector<std::pair<Edge, int>> ce;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '{') return parse_json_object(line);
    if (n < 0) {
      n = std::stoi(first);
      if (!(ls >> k)) throw std::invalid_argument("header must be 'n k'");
      continue;
    }
    int u = std::stoi(first), v, c;
    if (!(ls >> v >> c)) throw std::invalid_argument("edge line must be 'u v c'");
    ce.emplace_back(Edge(u, v), c);
  }
  if (n < 0) throw std::invalid_argument("empty colored-graph input");
  ColoredGraph g = ColoredGraph::make(n, std::move(ce));
  if (k != g.k()) throw std::invalid_argument("declared k does not match edge colors");
  return g;
}

ColoredGraph read_colored_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_colored_graph(buf.str());
}

std::string format_colored_graph(const ColoredGraph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.k() << '\n';
  for (std::size_t i = 0; i < g.edges().size(); ++i)
    out << g.edges()[i].u << ' ' << g.edges()[i].v << ' ' << g.colors()[i] << '\n';
  return out.str();
}

std::string colored_graph_json_line(const ColoredGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  j["k"] = g.k();
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.edges().size(); ++i)
    edges.push_back({g.edges()[i].u, g.edges()[i].v, g.colors()[i]});
  return j.dump();
}

Graph parse_graph6(const std::string& line) {
  if (line.empty()) throw std::invalid_argument("empty graph6 line");
  std::size_t pos = 0;
  if (line[0] == '>') {  // optional ">>graph6<<" header
    pos = line.find("<<");
    if (pos == std::string::npos) throw std::invalid_argument("bad graph6 header");
    pos += 2;
  }
  if (pos >= line.size()) throw std::invalid_argument("empty graph6 payload");
  int n;
  if (line[pos] == 126) {
    if (pos + 3 >= line.size()) throw std::invalid_argument("truncated graph6 order");
    n = ((line[pos + 1] - 63) << 12) | ((line[pos + 2] - 63) << 6) | (line[pos + 3] - 63);
    pos += 4;
  } else {
    n = line[pos] - 63;
    ++pos;
  }
  if (n < 0) throw std::invalid_argument("bad graph6 order");
  Graph g;
  g.n = n;
  int bit = 0;
  int current = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (bit == 0) {
        if (pos >= line.size()) throw std::invalid_argument("truncated graph6 bits");
        current = line[pos] - 63;
        if (current < 0 || current > 63) throw std::invalid_argument("bad graph6 byte");
        ++pos;
        bit = 6;
      }
      --bit;
      if (current & (1 << bit)) g.edges.emplace_back(row + 1, col + 1);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::string write_graph6(const Graph& g) {
  if (g.n > 62) throw std::invalid_argument("graph6 writer supports n <= 62");
  std::string out(1, static_cast<char>(g.n + 63));
  int bit = 6;
  int current = 0;
  for (int col = 1; col < g.n; ++col) {
    for (int row = 0; row < col; ++row) {
      --bit;
      if (g.has_edge(Edge(row + 1, col + 1))) current |= (1 << bit);
      if (bit == 0) {
        out.push_back(static_cast<char>(current + 63));
        bit = 6;
        current = 0;
      }
    }
  }
  if (bit != 6) out.push_back(static_cast<char>(current + 63));
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<Graph> graphs;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

} // namespace anglerig
