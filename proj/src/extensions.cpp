#include "anglerig/extensions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "anglerig/canonical.hpp"
#include "anglerig/combinatorics.hpp"
#include "anglerig/matrix.hpp"
#include "anglerig/rigidity.hpp"
#include "json.hpp"

namespace anglerig {

namespace {

std::vector<std::pair<Edge, int>> colored_edges(const ColoredGraph& g) {
  std::vector<std::pair<Edge, int>> ce;
  ce.reserve(g.edges().size());
  for (std::size_t i = 0; i < g.edges().size(); ++i) ce.emplace_back(g.edges()[i], g.colors()[i]);
  return ce;
}

void check_color(const ColoredGraph& g, int c) {
  if (c < 1 || c > g.k()) throw std::invalid_argument("color outside the existing color set");
}

} // namespace

ColoredGraph zero_extend(const ColoredGraph& g, int x, int y, int col_wx, int col_wy) {
  if (x == y) throw std::invalid_argument("attachment vertices must differ");
  if (x < 1 || y < 1 || x > g.n() || y > g.n()) throw std::invalid_argument("attachment out of range");
  check_color(g, col_wx);
  check_color(g, col_wy);
  auto ce = colored_edges(g);
  const int w = g.n() + 1;
  ce.emplace_back(Edge(w, x), col_wx);
  ce.emplace_back(Edge(w, y), col_wy);
  return ColoredGraph::make(g.n() + 1, std::move(ce));
}

ColoredGraph one_extend_cp(const ColoredGraph& g, const Edge& xy, int z, int col_wx, int col_wy,
                           int col_wz) {
  const int removed_color = g.color_of(xy);
  if (z == xy.u || z == xy.v) throw std::invalid_argument("z must avoid the removed edge");
  if (z < 1 || z > g.n()) throw std::invalid_argument("attachment out of range");
  check_color(g, col_wx);
  check_color(g, col_wy);
  check_color(g, col_wz);
  if (col_wx != removed_color && col_wy != removed_color)
    throw std::invalid_argument("not color-preserving: neither wx nor wy keeps the removed color");
  std::vector<std::pair<Edge, int>> ce;
  for (const auto& [e, c] : colored_edges(g))
    if (e != xy) ce.emplace_back(e, c);
  const int w = g.n() + 1;
  ce.emplace_back(Edge(w, xy.u), col_wx);
  ce.emplace_back(Edge(w, xy.v), col_wy);
  ce.emplace_back(Edge(w, z), col_wz);
  return ColoredGraph::make(g.n() + 1, std::move(ce));
}

ColoredGraph apply_step(const ColoredGraph& g, const ExtensionStep& step) {
  if (step.kind == ExtensionStep::Kind::zero) {
    if (step.attach.size() != 2 || step.colors.size() != 2)
      throw std::invalid_argument("malformed 0-extension step");
    return zero_extend(g, step.attach[0], step.attach[1], step.colors[0], step.colors[1]);
  }
  if (step.attach.size() != 3 || step.colors.size() != 3 || !step.removed)
    throw std::invalid_argument("malformed 1-extension step");
  if (Edge(step.attach[0], step.attach[1]) != *step.removed)
    throw std::invalid_argument("1-extension must attach to both endpoints of the removed edge");
  return one_extend_cp(g, *step.removed, step.attach[2], step.colors[0], step.colors[1],
                       step.colors[2]);
}

std::array<ColoredGraph, 5> k4_base_cases() {
  const auto build = [](std::initializer_list<Edge> second_color) {
    std::vector<std::pair<Edge, int>> ce;
    for (int u = 1; u <= 4; ++u)
      for (int v = u + 1; v <= 4; ++v) {
        const Edge e(u, v);
        const bool two = std::find(second_color.begin(), second_color.end(), e) != second_color.end();
        ce.emplace_back(e, two ? 2 : 1);
      }
    return ColoredGraph::make(4, std::move(ce));
  };
  return {
      build({Edge(1, 2)}),
      build({Edge(1, 2), Edge(1, 3)}),
      build({Edge(1, 2), Edge(3, 4)}),
      build({Edge(1, 2), Edge(1, 3), Edge(1, 4)}),
      build({Edge(1, 2), Edge(1, 3), Edge(2, 4)}),
  };
}

namespace {

// Removes vertex v, moving the last label onto v so labels stay contiguous
// and forward replay (which always appends vertex n+1) applies to exactly
// this graph.
ColoredGraph remove_vertex(const ColoredGraph& g, int v, std::optional<std::pair<Edge, int>> add) {
  const int last = g.n();
  const auto relabel = [v, last](int w) { return w == last ? v : w; };
  std::vector<std::pair<Edge, int>> ce;
  for (const auto& [e, c] : colored_edges(g)) {
    if (e.u == v || e.v == v) continue;
    ce.emplace_back(Edge(relabel(e.u), relabel(e.v)), c);
  }
  if (add) ce.emplace_back(Edge(relabel(add->first.u), relabel(add->first.v)), add->second);
  // close any color gap left by the removed edges
  std::set<int> used;
  for (const auto& [e, c] : ce) used.insert(c);
  std::vector<int> dense(g.k() + 1, 0);
  int next = 0;
  for (int c = 1; c <= g.k(); ++c)
    if (used.count(c)) dense[c] = ++next;
  for (auto& [e, c] : ce) c = dense[c];
  return ColoredGraph::make(g.n() - 1, std::move(ce));
}

std::vector<int> degrees_of(const ColoredGraph& g) {
  std::vector<int> deg(g.n() + 1, 0);
  for (const Edge& e : g.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<int> neighbours(const ColoredGraph& g, int v) {
  std::vector<int> nb;
  for (const Edge& e : g.edges()) {
    if (e.u == v) nb.push_back(e.v);
    if (e.v == v) nb.push_back(e.u);
  }
  std::sort(nb.begin(), nb.end());
  return nb;
}

bool in_class(const ColoredGraph& g) {
  return g.k() == 2 && two_color_rigid_predicate(g);
}

struct Reduction {
  ColoredGraph reduced;
  ExtensionStep step;    // attachments in the reduced labelling
  int removed_vertex;    // label in the unreduced graph
};

// One reduction step. The reduced graph carries the last label moved onto
// the removed vertex, so the recorded step rebuilds the input exactly up to
// that transposition.
Reduction reduce_once(const ColoredGraph& g) {
  const std::vector<int> deg = degrees_of(g);
  const int last = g.n();
  const auto relabel = [last](int w, int v) { return w == last ? v : w; };

  // degree-2 vertices first
  for (int v = 1; v <= g.n(); ++v) {
    if (deg[v] != 2) continue;
    const std::vector<int> nb = neighbours(g, v);
    ColoredGraph reduced = remove_vertex(g, v, std::nullopt);
    if (reduced.k() != 2 || !in_class(reduced)) continue;
    ExtensionStep step;
    step.kind = ExtensionStep::Kind::zero;
    step.attach = {relabel(nb[0], v), relabel(nb[1], v)};
    step.colors = {g.color_of(Edge(v, nb[0])), g.color_of(Edge(v, nb[1]))};
    return {std::move(reduced), std::move(step), v};
  }

  // then degree-3, preferring vertices outside the unique circuit
  const auto cert = unique_circuit(g);
  if (!cert) throw std::logic_error("class membership lost during reduction");
  std::set<int> circuit_vertices;
  for (const Edge& e : cert->circuit) {
    circuit_vertices.insert(e.u);
    circuit_vertices.insert(e.v);
  }
  std::vector<int> candidates;
  for (int v = 1; v <= g.n(); ++v)
    if (deg[v] == 3 && !circuit_vertices.count(v)) candidates.push_back(v);
  for (int v = 1; v <= g.n(); ++v)
    if (deg[v] == 3 && circuit_vertices.count(v)) candidates.push_back(v);

  for (const int v : candidates) {
    const std::vector<int> nb = neighbours(g, v);
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        const Edge fresh(nb[a], nb[b]);
        if (g.edge_index(fresh) >= 0) continue;
        std::set<int> color_options{g.color_of(Edge(v, nb[a])), g.color_of(Edge(v, nb[b]))};
        for (const int col : color_options) {
          ColoredGraph reduced = remove_vertex(g, v, std::make_pair(fresh, col));
          if (reduced.k() != 2 || !in_class(reduced)) continue;
          const int z = nb[3 - a - b];
          ExtensionStep step;
          step.kind = ExtensionStep::Kind::one;
          step.removed = Edge(relabel(fresh.u, v), relabel(fresh.v, v));
          step.attach = {step.removed->u, step.removed->v, relabel(z, v)};
          // forward colors for wx, wy, wz in attach order; the relabeling
          // may have swapped the removed edge's endpoints
          const auto color_at = [&](int w) { return g.color_of(Edge(v, w)); };
          int x_orig = fresh.u, y_orig = fresh.v;
          if (relabel(x_orig, v) != step.removed->u) std::swap(x_orig, y_orig);
          step.colors = {color_at(x_orig), color_at(y_orig), color_at(z)};
          return {std::move(reduced), std::move(step), v};
        }
      }
  }
  throw std::logic_error("no admissible reduction at a 2-color-rigid graph");
}

} // namespace

ConstructionSequence construct_sequence(const ColoredGraph& g) {
  if (g.k() != 2) throw std::invalid_argument("construction requires a 2-colored graph");
  if (!two_color_rigid_predicate(g))
    throw std::invalid_argument("graph is not 2-color-rigid; no construction exists");
  ConstructionSequence seq;
  std::vector<Reduction> chain;  // reduction order, input downwards
  ColoredGraph current = g;
  while (current.n() > 4) {
    chain.push_back(reduce_once(current));
    current = chain.back().reduced;
  }
  seq.base = std::move(current);

  // Replay always appends vertex n+1, while each reduction freed an
  // arbitrary label, so recorded steps are transported through the
  // composed relabelling from reduced coordinates to replay coordinates.
  std::vector<int> to_replay(seq.base.n() + 1);
  for (int w = 0; w <= seq.base.n(); ++w) to_replay[w] = w;
  for (std::size_t i = chain.size(); i-- > 0;) {
    const int grown = static_cast<int>(to_replay.size());  // |H_{i-1}| = new vertex label
    const int freed = chain[i].removed_vertex;
    ExtensionStep step = chain[i].step;
    for (int& w : step.attach) w = to_replay[w];
    if (step.removed) {
      int x = to_replay[step.removed->u];
      int y = to_replay[step.removed->v];
      if (x > y) {
        std::swap(x, y);
        std::swap(step.attach[0], step.attach[1]);
        std::swap(step.colors[0], step.colors[1]);
      }
      step.removed = Edge(x, y);
    }
    seq.steps.push_back(std::move(step));
    std::vector<int> extended(grown + 1);
    for (int w = 1; w <= grown; ++w) {
      const int pre_swap = (w == grown) ? freed : w;  // undo the transposition
      extended[w] = (w == freed) ? grown : to_replay[pre_swap];
    }
    extended[0] = 0;
    to_replay = std::move(extended);
  }

  ColoredGraph forward = seq.base;
  for (const ExtensionStep& step : seq.steps) forward = apply_step(forward, step);
  seq.final_graph = std::move(forward);
  if (canonical_key(seq.final_graph) != canonical_key(g))
    throw std::logic_error("replayed construction does not match the input");
  return seq;
}

ColoredGraph replay(const ConstructionSequence& seq) {
  ColoredGraph g = seq.base;
  for (const ExtensionStep& step : seq.steps) g = apply_step(g, step);
  if (canonical_key(g) != canonical_key(seq.final_graph))
    throw std::invalid_argument("sequence replay does not reproduce the recorded final graph");
  return g;
}

namespace {

nlohmann::ordered_json graph_json(const ColoredGraph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n();
  j["k"] = g.k();
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < g.edges().size(); ++i)
    edges.push_back({g.edges()[i].u, g.edges()[i].v, g.colors()[i]});
  return j;
}

ColoredGraph graph_from_json(const nlohmann::json& j) {
  std::vector<std::pair<Edge, int>> ce;
  for (const auto& row : j.at("edges"))
    ce.emplace_back(Edge(row.at(0).get<int>(), row.at(1).get<int>()), row.at(2).get<int>());
  return ColoredGraph::make(j.at("n").get<int>(), std::move(ce));
}

} // namespace

std::string sequence_to_json(const ConstructionSequence& seq) {
  nlohmann::ordered_json j;
  j["base"] = graph_json(seq.base);
  auto& steps = j["steps"] = nlohmann::ordered_json::array();
  for (const ExtensionStep& s : seq.steps) {
    nlohmann::ordered_json sj;
    sj["kind"] = s.kind == ExtensionStep::Kind::zero ? "0-extension" : "1-extension";
    sj["attach"] = s.attach;
    if (s.removed) sj["removed"] = {s.removed->u, s.removed->v};
    sj["colors"] = s.colors;
    steps.push_back(std::move(sj));
  }
  j["final"] = graph_json(seq.final_graph);
  return j.dump(2);
}

ConstructionSequence sequence_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  ConstructionSequence seq;
  seq.base = graph_from_json(j.at("base"));
  for (const auto& sj : j.at("steps")) {
    ExtensionStep s;
    s.kind = sj.at("kind").get<std::string>() == "0-extension" ? ExtensionStep::Kind::zero
                                                               : ExtensionStep::Kind::one;
    s.attach = sj.at("attach").get<std::vector<int>>();
    if (sj.contains("removed"))
      s.removed = Edge(sj.at("removed").at(0).get<int>(), sj.at("removed").at(1).get<int>());
    s.colors = sj.at("colors").get<std::vector<int>>();
    seq.steps.push_back(std::move(s));
  }
  seq.final_graph = graph_from_json(j.at("final"));
  return seq;
}

ColoredGraph color_swap(const ColoredGraph& g, const Edge& e, int target_color) {
  const int current = g.color_of(e);
  if (current == target_color) throw std::invalid_argument("edge already has the target color");
  if (target_color < 1 || target_color > g.k())
    throw std::invalid_argument("target color outside the color set");
  auto ce = colored_edges(g);
  for (auto& [edge, c] : ce)
    if (edge == e) c = target_color;
  std::set<int> used;
  for (const auto& [edge, c] : ce) used.insert(c);
  std::vector<int> dense(g.k() + 1, 0);
  int next = 0;
  for (int c = 1; c <= g.k(); ++c)
    if (used.count(c)) dense[c] = ++next;
  for (auto& [edge, c] : ce) c = dense[c];
  return ColoredGraph::make(g.n(), std::move(ce));
}

SwapDeterminantResult swap_determinant_identity(const ColoredGraph& g, const Edge& e,
                                                const Realization& p, int a, int b) {
  const int n = g.n(), k = g.k();
  if (n < 4) throw std::invalid_argument("need at least four vertices");
  if (k < 3) throw std::invalid_argument("need at least three colors");
  if (g.edge_count() != 2 * n - 4 + k)
    throw std::invalid_argument("edge count must be 2n-4+k for square pinned matrices");
  if (g.color_of(e) != k) throw std::invalid_argument("edge must have the last color");
  if (a == b || a == e.u || a == e.v || b == e.u || b == e.v)
    throw std::invalid_argument("pinned vertices must be distinct and off the edge");

  // Row order: e first, remaining edges in lex order (the sign convention
  // of the identity). Columns: vertex pairs minus a,b, then colors.
  std::vector<int> row_edges{g.edge_index(e)};
  for (int i = 0; i < g.edge_count(); ++i)
    if (i != g.edge_index(e)) row_edges.push_back(i);

  std::vector<int> keep_cols;
  for (int v = 1; v <= n; ++v) {
    if (v == a || v == b) continue;
    keep_cols.push_back(2 * (v - 1));
    keep_cols.push_back(2 * (v - 1) + 1);
  }

  const auto pinned = [&](const std::vector<int>& colors, int color_count,
                          const std::vector<int>& rows) {
    RatMat m(static_cast<int>(rows.size()), static_cast<int>(keep_cols.size()) + color_count);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Edge& edge = g.edges()[rows[r]];
      const Rat dx = p.x(edge.u) - p.x(edge.v);
      const Rat dy = p.y(edge.u) - p.y(edge.v);
      RatMat full_row(1, 2 * n);
      full_row.at(0, 2 * (edge.u - 1)) = dx;
      full_row.at(0, 2 * (edge.u - 1) + 1) = dy;
      full_row.at(0, 2 * (edge.v - 1)) = -dx;
      full_row.at(0, 2 * (edge.v - 1) + 1) = -dy;
      for (std::size_t c = 0; c < keep_cols.size(); ++c)
        m.at(static_cast<int>(r), static_cast<int>(c)) = full_row.at(0, keep_cols[c]);
      m.at(static_cast<int>(r), static_cast<int>(keep_cols.size()) + colors[rows[r]] - 1) =
          -(dx * dx + dy * dy);
    }
    return m;
  };

  SwapDeterminantResult out;
  const Rat dx = p.x(e.u) - p.x(e.v);
  const Rat dy = p.y(e.u) - p.y(e.v);
  out.edge_length_sq = dx * dx + dy * dy;

  out.det_original = exact_determinant(pinned(g.colors(), k, row_edges));

  std::vector<int> swapped = g.colors();
  swapped[g.edge_index(e)] = k - 1;
  out.det_swapped = exact_determinant(pinned(swapped, k, row_edges));

  std::vector<int> merged = g.colors();
  for (int& c : merged)
    if (c == k) c = k - 1;
  std::vector<int> rows_without_e(row_edges.begin() + 1, row_edges.end());
  out.det_contracted = exact_determinant(pinned(merged, k - 1, rows_without_e));

  const Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
  out.holds = (out.det_original == out.det_swapped + sign * out.edge_length_sq * out.det_contracted);
  return out;
}

} // namespace anglerig
