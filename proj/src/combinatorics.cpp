#include "anglerig/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

#include "anglerig/matrix.hpp"
#include "anglerig/pebble.hpp"
#include "anglerig/realization.hpp"
#include "anglerig/rigidity.hpp"
#include "anglerig/rng.hpp"

namespace anglerig {

std::optional<MaxwellViolation> maxwell_colored_check(const ColoredGraph& g) {
  const int m = g.edge_count();
  if (m > 20) throw std::invalid_argument("maxwell check is exhaustive; edge count too large");
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    int edge_total = 0;
    std::uint32_t color_bits = 0;
    std::uint32_t vertex_bits = 0;
    for (int i = 0; i < m; ++i) {
      if (!(mask & (1u << i))) continue;
      ++edge_total;
      color_bits |= 1u << g.colors()[i];
      vertex_bits |= 1u << g.edges()[i].u;
      vertex_bits |= 1u << g.edges()[i].v;
    }
    const int vertices = __builtin_popcount(vertex_bits);
    const int colors = __builtin_popcount(color_bits);
    if (edge_total > 2 * vertices + colors - 4) {
      MaxwellViolation out;
      out.vertex_count = vertices;
      out.chi = colors;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) out.subgraph.push_back(g.edges()[i]);
      return out;
    }
  }
  return std::nullopt;
}

namespace {

// Rank of the edge set E \ removed (+ extra) via the pebble game.
int reduced_rank(const ColoredGraph& g, const std::vector<int>& removed_idx,
                 int extra_idx = -1) {
  PebbleGame23 game(g.n());
  for (int i = 0; i < g.edge_count(); ++i) {
    if (std::find(removed_idx.begin(), removed_idx.end(), i) != removed_idx.end() && i != extra_idx)
      continue;
    game.try_insert(g.edges()[i].u, g.edges()[i].v);
  }
  return game.accepted();
}

// Enumerates index transversals over the given color classes in lex order.
bool next_choice(std::vector<std::size_t>& choice, const std::vector<std::vector<int>>& classes) {
  for (std::size_t i = choice.size(); i-- > 0;) {
    if (++choice[i] < classes[i].size()) return true;
    choice[i] = 0;
  }
  return false;
}

} // namespace

std::optional<std::vector<Edge>> transversal_condition_global(const ColoredGraph& g) {
  const int n = g.n(), k = g.k();
  const int basis_size = 2 * n - 3;
  if (g.edge_count() - k + 1 != basis_size) return std::nullopt;

  std::vector<std::vector<int>> classes(k);
  for (int i = 0; i < g.edge_count(); ++i) classes[g.colors()[i] - 1].push_back(i);

  std::vector<std::size_t> choice(k, 0);
  do {
    std::vector<int> removed;
    for (int c = 0; c < k; ++c) removed.push_back(classes[c][choice[c]]);
    bool all_bases = true;
    for (int c = 0; c < k && all_bases; ++c)
      if (reduced_rank(g, removed, removed[c]) != basis_size) all_bases = false;
    if (all_bases) {
      std::vector<Edge> witness;
      for (int idx : removed) witness.push_back(g.edges()[idx]);
      return witness;
    }
  } while (next_choice(choice, classes));
  return std::nullopt;
}

PerColorWitnesses transversal_condition_per_color(const ColoredGraph& g) {
  const int n = g.n(), k = g.k();
  const int basis_size = 2 * n - 3;
  PerColorWitnesses out;
  out.ok = true;

  std::vector<std::vector<int>> classes(k);
  for (int i = 0; i < g.edge_count(); ++i) classes[g.colors()[i] - 1].push_back(i);

  for (int skip = 1; skip <= k; ++skip) {
    std::optional<std::vector<Edge>> witness;
    if (g.edge_count() - (k - 1) == basis_size) {
      std::vector<std::vector<int>> others;
      for (int c = 1; c <= k; ++c)
        if (c != skip) others.push_back(classes[c - 1]);
      std::vector<std::size_t> choice(others.size(), 0);
      bool more = true;
      while (more && !witness) {
        std::vector<int> removed;
        for (std::size_t i = 0; i < others.size(); ++i) removed.push_back(others[i][choice[i]]);
        if (reduced_rank(g, removed) == basis_size) {
          std::vector<Edge> w;
          for (int idx : removed) w.push_back(g.edges()[idx]);
          witness = std::move(w);
        }
        more = next_choice(choice, others);
      }
    }
    if (!witness) out.ok = false;
    out.witness[skip] = std::move(witness);
  }
  return out;
}

std::optional<CircuitCertificate> unique_circuit(const ColoredGraph& g, std::uint64_t seed) {
  const int n = g.n();
  if (g.edge_count() != 2 * n - 2) throw std::invalid_argument("unique_circuit needs |E| = 2n-2");
  if (r2_rank(n, g.edges()) != 2 * n - 3) return std::nullopt;  // corank != 1 or not spanning

  CircuitCertificate cert;
  for (int i = 0; i < g.edge_count(); ++i) {
    std::vector<Edge> without;
    for (int j = 0; j < g.edge_count(); ++j)
      if (j != i) without.push_back(g.edges()[j]);
    if (r2_independent(n, without)) {
      cert.circuit.push_back(g.edges()[i]);
      cert.colors.insert(g.colors()[i]);
    }
  }

  // Stress-support cross-check; non-generic samples are retried.
  for (int attempt = 0;; ++attempt) {
    if (attempt == 3) throw std::logic_error("circuit/stress support mismatch persisted");
    const Realization p =
        random_realization(n, derive_seed(seed, 0x5c1, attempt), 1'000'000LL << attempt);
    const auto stresses = cokernel_basis(rigidity_matrix(g.skeleton(), p));
    if (stresses.size() != 1) continue;
    std::vector<Edge> support;
    for (int i = 0; i < g.edge_count(); ++i)
      if (stresses[0][i] != 0) support.push_back(g.edges()[i]);
    if (support != cert.circuit) continue;
    for (const Edge& e : cert.circuit) cert.stress.push_back(stresses[0][g.edge_index(e)]);
    break;
  }
  return cert;
}

bool two_color_rigid_predicate(const ColoredGraph& g) {
  if (g.k() != 2) throw std::invalid_argument("predicate applies to 2-colored graphs");
  if (g.edge_count() != 2 * g.n() - 2) return false;
  const auto cert = unique_circuit(g);
  return cert && cert->colors == std::set<int>{1, 2};
}

std::pair<int, int> laman_one_reduction_pair(const Graph& g, int v) {
  if (!is_laman(g)) throw std::invalid_argument("graph is not Laman");
  std::vector<int> nb;
  for (const Edge& e : g.edges) {
    if (e.u == v) nb.push_back(e.v);
    if (e.v == v) nb.push_back(e.u);
  }
  if (nb.size() != 3) throw std::invalid_argument("vertex does not have degree 3");
  std::sort(nb.begin(), nb.end());
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const Edge candidate(nb[a], nb[b]);
      if (g.has_edge(candidate)) continue;
      Graph reduced;
      reduced.n = g.n - 1;
      const auto relabel = [v](int w) { return w > v ? w - 1 : w; };
      for (const Edge& e : g.edges) {
        if (e.u == v || e.v == v) continue;
        reduced.edges.emplace_back(relabel(e.u), relabel(e.v));
      }
      reduced.edges.emplace_back(relabel(candidate.u), relabel(candidate.v));
      std::sort(reduced.edges.begin(), reduced.edges.end());
      if (is_laman(reduced)) return {nb[a], nb[b]};
    }
  throw std::logic_error("no Laman reduction pair found at a degree-3 vertex");
}

} // namespace anglerig
