#include "doctest.h"

#include <stdexcept>

#include <algorithm>

#include "anglerig/matrix.hpp"
#include "anglerig/pebble.hpp"
#include "anglerig/realization.hpp"
#include "anglerig/rigidity.hpp"
#include "anglerig/rng.hpp"

using namespace anglerig;

namespace {

std::vector<Edge> complete_edges(int n) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return edges;
}

} // namespace

TEST_CASE("pebble game on standard graphs") {
  CHECK(r2_rank(3, complete_edges(3)) == 3);
  CHECK(r2_rank(4, complete_edges(4)) == 5);  // one dependency in K4
  CHECK(r2_rank(4, {}) == 0);
  CHECK(r2_rank(6, complete_edges(6)) == 9);  // 2*6-3
}

TEST_CASE("laman recognition") {
  Graph k3{3, complete_edges(3)};
  CHECK(is_laman(k3));
  Graph k4{4, complete_edges(4)};
  CHECK(!is_laman(k4));
  Graph k4_minus{4, {Edge(1, 2), Edge(1, 3), Edge(1, 4), Edge(2, 3), Edge(2, 4)}};
  CHECK(is_laman(k4_minus));
  Graph two_triangles{6, {Edge(1, 2), Edge(1, 3), Edge(2, 3), Edge(4, 5), Edge(4, 6), Edge(5, 6)}};
  CHECK(!is_laman(two_triangles));  // 6 edges != 2*6-3
}

TEST_CASE("rank is order independent") {
  Rng rng(5);
  std::vector<Edge> edges = complete_edges(5);
  const int base = r2_rank(5, edges);
  for (int trial = 0; trial < 10; ++trial) {
    for (std::size_t i = edges.size(); i > 1; --i)
      std::swap(edges[i - 1], edges[rng.below(i)]);
    CHECK(r2_rank(5, edges) == base);
  }
}

TEST_CASE("pebble rank equals the exact rigidity matrix rank") {
  Rng rng(13);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(5));
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (rng.below(2)) edges.emplace_back(u, v);
    const Graph g{n, edges};
    const Realization p = random_realization(n, rng.next());
    CHECK(r2_rank(n, edges) == exact_rank(rigidity_matrix(g, p)));
  }
}

TEST_CASE("bad edges are rejected") {
  PebbleGame23 game(3);
  CHECK_THROWS_AS(game.try_insert(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(game.try_insert(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(game.try_insert(1, 4), std::invalid_argument);
}
