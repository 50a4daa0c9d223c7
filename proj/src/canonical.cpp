#include "anglerig/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace anglerig {

namespace {

// Adjacency with color entries; 0 = non-edge. Vertices 0-based here.
struct AdjView {
  int n = 0;
  int k = 0;
  std::vector<int> a;  // n*n

  int at(int u, int v) const { return a[static_cast<std::size_t>(u) * n + v]; }
};

AdjView adjacency(const ColoredGraph& g, const std::vector<int>& color_perm) {
  AdjView adj;
  adj.n = g.n();
  adj.k = g.k();
  adj.a.assign(static_cast<std::size_t>(g.n()) * g.n(), 0);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    const int c = color_perm[g.colors()[i]];
    adj.a[static_cast<std::size_t>(e.u - 1) * adj.n + (e.v - 1)] = c;
    adj.a[static_cast<std::size_t>(e.v - 1) * adj.n + (e.u - 1)] = c;
  }
  return adj;
}

// Stable 1-WL vertex classes. Class ids are ordinal ranks of sorted
// signatures, so they are isomorphism-invariant.
std::vector<int> wl_classes(const AdjView& adj) {
  const int n = adj.n;
  std::vector<int> cls(n, 0);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(cls[v]);
      std::vector<std::pair<int, int>> nb;
      for (int u = 0; u < n; ++u)
        if (u != v) nb.emplace_back(adj.at(v, u), cls[u]);
      std::sort(nb.begin(), nb.end());
      for (const auto& [c, cc] : nb) {
        sig[v].push_back(c);
        sig[v].push_back(cc);
      }
    }
    std::map<std::vector<int>, int> order;
    for (int v = 0; v < n; ++v) order[sig[v]] = 0;
    int next = 0;
    for (auto& [key, id] : order) id = next++;
    std::vector<int> fresh(n);
    for (int v = 0; v < n; ++v) fresh[v] = order[sig[v]];
    if (fresh == cls) break;
    cls = std::move(fresh);
  }
  return cls;
}

struct CanonSearch {
  const AdjView* adj = nullptr;
  std::vector<int> wl;
  std::vector<int> order;    // position -> vertex
  std::vector<bool> used;
  std::string enc;           // encoding built so far
  std::string best;
  std::vector<int> best_order;
  bool have_best = false;

  // Encoding appends, for each new position t, the row adj[v][order[0..t-1]].
  // Invariant on entry: have_best implies enc equals the prefix of best.
  void dfs(int pos) {
    const int n = adj->n;
    if (pos == n) {
      if (!have_best) {
        best = enc;
        best_order = order;
        have_best = true;
      }
      return;  // with the invariant, enc == best here otherwise
    }
    int best_class = -1;
    for (int v = 0; v < n; ++v)
      if (!used[v] && (best_class < 0 || wl[v] < best_class)) best_class = wl[v];
    for (int v = 0; v < n; ++v) {
      if (used[v] || wl[v] != best_class) continue;
      const std::size_t mark = enc.size();
      for (int t = 0; t < pos; ++t) enc.push_back(static_cast<char>(adj->at(v, order[t])));
      if (have_best) {
        const int cmp = best.compare(mark, enc.size() - mark, enc, mark, enc.size() - mark);
        if (cmp < 0) {  // candidate prefix is worse
          enc.resize(mark);
          continue;
        }
        // Strictly better prefix: every leaf below beats the incumbent, so
        // restart the incumbent from this subtree to keep the invariant.
        if (cmp > 0) have_best = false;
      }
      used[v] = true;
      order[pos] = v;
      dfs(pos + 1);
      used[v] = false;
      enc.resize(mark);
    }
  }
};

// Minimal encoding over vertex orderings for one fixed color permutation.
std::pair<std::string, std::vector<int>> min_vertex_encoding(const AdjView& adj) {
  CanonSearch s;
  s.adj = &adj;
  s.wl = wl_classes(adj);
  s.order.assign(adj.n, -1);
  s.used.assign(adj.n, false);
  s.dfs(0);
  return {s.best, s.best_order};
}

void all_permutations(int k, std::vector<std::vector<int>>& out) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 1);
  do {
    std::vector<int> perm(k + 1, 0);
    for (int i = 0; i < k; ++i) perm[i + 1] = p[i];
    out.push_back(std::move(perm));
  } while (std::next_permutation(p.begin(), p.end()));
}

} // namespace

CanonicalForm canonical_form(const ColoredGraph& g) {
  std::vector<std::vector<int>> color_perms;
  if (g.k() <= 1) {
    std::vector<int> identity(g.k() + 1);
    std::iota(identity.begin(), identity.end(), 0);
    color_perms.push_back(identity);
  } else {
    all_permutations(g.k(), color_perms);
  }

  CanonicalForm result;
  bool have = false;
  for (const auto& perm : color_perms) {
    const AdjView adj = adjacency(g, perm);
    auto [enc, order] = min_vertex_encoding(adj);
    std::string bytes;
    bytes.push_back(static_cast<char>(g.n()));
    bytes.push_back(static_cast<char>(g.k()));
    bytes += enc;
    if (!have || bytes < result.bytes) {
      have = true;
      result.bytes = std::move(bytes);
      result.color_map = perm;
      result.vertex_map.assign(g.n() + 1, -1);
      for (int pos = 0; pos < g.n(); ++pos) result.vertex_map[order[pos] + 1] = pos;
    }
  }
  return result;
}

std::string canonical_key(const ColoredGraph& g) { return canonical_form(g).bytes; }

std::string canonical_key(const Graph& g) {
  return canonical_key(ColoredGraph::monochromatic(g.n, g.edges));
}

std::string canonical_hex(const ColoredGraph& g) {
  static const char* digits = "0123456789abcdef";
  const std::string bytes = canonical_key(g);
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

namespace {

void aut_dfs(const AdjView& adj, const std::vector<int>& wl, std::vector<int>& image,
             std::vector<bool>& taken, int v, std::vector<std::vector<int>>& out) {
  const int n = adj.n;
  if (v == n) {
    std::vector<int> perm(n + 1);
    for (int i = 0; i < n; ++i) perm[i + 1] = image[i] + 1;
    out.push_back(std::move(perm));
    return;
  }
  for (int w = 0; w < n; ++w) {
    if (taken[w] || wl[w] != wl[v]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (adj.at(v, u) != adj.at(w, image[u])) ok = false;
    if (!ok) continue;
    taken[w] = true;
    image[v] = w;
    aut_dfs(adj, wl, image, taken, v + 1, out);
    taken[w] = false;
  }
}

} // namespace

std::vector<std::vector<int>> automorphisms(const Graph& g) {
  const ColoredGraph mono = ColoredGraph::monochromatic(g.n, g.edges);
  std::vector<int> identity_colors(mono.k() + 1);
  std::iota(identity_colors.begin(), identity_colors.end(), 0);
  const AdjView adj = adjacency(mono, identity_colors);
  const std::vector<int> wl = wl_classes(adj);
  std::vector<int> image(g.n, -1);
  std::vector<bool> taken(g.n, false);
  std::vector<std::vector<int>> out;
  aut_dfs(adj, wl, image, taken, 0, out);
  return out;
}

} // namespace anglerig
