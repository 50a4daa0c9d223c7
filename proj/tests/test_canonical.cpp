#include "doctest.h"

#include <stdexcept>

#include <algorithm>
#include <numeric>
#include <set>

#include "anglerig/canonical.hpp"
#include "anglerig/rng.hpp"

using namespace anglerig;

namespace {

// Brute-force oracle: minimum encoding over all n! vertex permutations and
// k! color permutations.
std::string brute_key(const ColoredGraph& g) {
  const int n = g.n(), k = g.k();
  std::vector<int> vperm(n), cperm(k);
  std::iota(vperm.begin(), vperm.end(), 1);
  std::string best;
  bool have = false;
  do {
    std::iota(cperm.begin(), cperm.end(), 1);
    do {
      std::string enc;
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i) {
          const int idx = g.edge_index(Edge(vperm[i], vperm[j]));
          enc.push_back(idx < 0 ? 0 : static_cast<char>(cperm[g.colors()[idx] - 1]));
        }
      if (!have || enc < best) {
        best = enc;
        have = true;
      }
    } while (std::next_permutation(cperm.begin(), cperm.end()));
  } while (std::next_permutation(vperm.begin(), vperm.end()));
  return best;
}

ColoredGraph random_colored_graph(Rng& rng, int max_n) {
  const int n = 2 + static_cast<int>(rng.below(max_n - 1));
  std::vector<std::pair<Edge, int>> ce;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng.below(2)) ce.emplace_back(Edge(u, v), 1);
  if (ce.empty()) ce.emplace_back(Edge(1, 2), 1);
  const int k = 1 + static_cast<int>(rng.below(std::min<std::uint64_t>(3, ce.size())));
  for (std::size_t i = 0; i < ce.size(); ++i)
    ce[i].second = (i < static_cast<std::size_t>(k)) ? static_cast<int>(i) + 1
                                                     : 1 + static_cast<int>(rng.below(k));
  return ColoredGraph::make(n, std::move(ce));
}

ColoredGraph relabeled(const ColoredGraph& g, Rng& rng) {
  std::vector<int> vperm(g.n() + 1), cperm(g.k() + 1);
  std::iota(vperm.begin(), vperm.end(), 0);
  std::iota(cperm.begin(), cperm.end(), 0);
  for (int i = g.n(); i > 1; --i) std::swap(vperm[i], vperm[1 + rng.below(i)]);
  for (int i = g.k(); i > 1; --i) std::swap(cperm[i], cperm[1 + rng.below(i)]);
  std::vector<std::pair<Edge, int>> ce;
  for (std::size_t i = 0; i < g.edges().size(); ++i)
    ce.emplace_back(Edge(vperm[g.edges()[i].u], vperm[g.edges()[i].v]), cperm[g.colors()[i]]);
  return ColoredGraph::make(g.n(), std::move(ce));
}

} // namespace

TEST_CASE("canonical form is a class function on random relabelings") {
  Rng rng(100);
  for (int trial = 0; trial < 1000; ++trial) {
    const ColoredGraph g = random_colored_graph(rng, 8);
    const std::string key = canonical_key(g);
    CHECK(canonical_key(relabeled(g, rng)) == key);
  }
}

TEST_CASE("canonical classes match the brute-force oracle for small graphs") {
  Rng rng(200);
  std::vector<ColoredGraph> graphs;
  for (int trial = 0; trial < 60; ++trial) graphs.push_back(random_colored_graph(rng, 5));
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      const bool same_fast = canonical_key(graphs[i]) == canonical_key(graphs[j]);
      const bool same_brute = graphs[i].n() == graphs[j].n() && graphs[i].k() == graphs[j].k() &&
                              brute_key(graphs[i]) == brute_key(graphs[j]);
      CHECK(same_fast == same_brute);
    }
}

TEST_CASE("complementary K4 bicolorings are equivalent under the color swap") {
  std::vector<std::pair<Edge, int>> one_blue, five_blue;
  for (int u = 1; u <= 4; ++u)
    for (int v = u + 1; v <= 4; ++v) {
      const bool base = (u == 1 && v == 2);
      one_blue.emplace_back(Edge(u, v), base ? 2 : 1);
      five_blue.emplace_back(Edge(u, v), base ? 1 : 2);
    }
  CHECK(canonical_key(ColoredGraph::make(4, one_blue)) ==
        canonical_key(ColoredGraph::make(4, five_blue)));

  // blue triangle vs blue star at a vertex: complementary classes
  std::vector<std::pair<Edge, int>> triangle, star;
  for (int u = 1; u <= 4; ++u)
    for (int v = u + 1; v <= 4; ++v) {
      const Edge e(u, v);
      const bool in_triangle = (u >= 2);  // 23, 24, 34
      const bool in_star = (u == 1);      // 12, 13, 14
      triangle.emplace_back(e, in_triangle ? 2 : 1);
      star.emplace_back(e, in_star ? 2 : 1);
    }
  CHECK(canonical_key(ColoredGraph::make(4, triangle)) ==
        canonical_key(ColoredGraph::make(4, star)));
}

TEST_CASE("exactly five bichromatic K4 classes, by exhaustive brute force") {
  // independent oracle for the class count: all 2^6-2 surjective bicolorings
  // bucketed by the brute-force key
  std::vector<Edge> edges;
  for (int u = 1; u <= 4; ++u)
    for (int v = u + 1; v <= 4; ++v) edges.emplace_back(u, v);
  std::set<std::string> brute_classes, fast_classes;
  for (int mask = 1; mask < 63; ++mask) {
    std::vector<std::pair<Edge, int>> ce;
    for (int i = 0; i < 6; ++i) ce.emplace_back(edges[i], (mask >> i) & 1 ? 2 : 1);
    const ColoredGraph g = ColoredGraph::make(4, std::move(ce));
    brute_classes.insert(brute_key(g));
    fast_classes.insert(canonical_key(g));
  }
  CHECK(brute_classes.size() == 5);
  CHECK(fast_classes.size() == 5);
}

TEST_CASE("automorphism groups of standard graphs") {
  Graph k4;
  k4.n = 4;
  for (int u = 1; u <= 4; ++u)
    for (int v = u + 1; v <= 4; ++v) k4.edges.emplace_back(u, v);
  CHECK(automorphisms(k4).size() == 24);

  Graph path3;
  path3.n = 3;
  path3.edges = {Edge(1, 2), Edge(2, 3)};
  CHECK(automorphisms(path3).size() == 2);

  Graph c5;
  c5.n = 5;
  c5.edges = {Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5), Edge(1, 5)};
  CHECK(automorphisms(c5).size() == 10);
}
