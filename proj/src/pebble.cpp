#include "anglerig/pebble.hpp"

#include <algorithm>
#include <stdexcept>

namespace anglerig {

PebbleGame23::PebbleGame23(int n)
    : n_(n), pebbles_(n + 1, 2), out_(n + 1), visited_(n + 1, 0), parent_(n + 1, 0) {}

// DFS along the orientation for a vertex with a free pebble; on success the
// path is reversed and the pebble moved to `target`.
bool PebbleGame23::collect_pebble(int target, int other) {
  ++stamp_;
  visited_[target] = stamp_;
  visited_[other] = stamp_;  // pebbles on the other endpoint stay put
  std::vector<int> stack{target};
  parent_[target] = 0;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (const int w : out_[x]) {
      if (visited_[w] == stamp_) continue;
      visited_[w] = stamp_;
      parent_[w] = x;
      if (pebbles_[w] > 0) {
        --pebbles_[w];
        ++pebbles_[target];
        // reverse the tree path target -> ... -> w
        int cur = w;
        while (cur != target) {
          const int prev = parent_[cur];
          auto& prev_out = out_[prev];
          prev_out.erase(std::find(prev_out.begin(), prev_out.end(), cur));
          out_[cur].push_back(prev);
          cur = prev;
        }
        return true;
      }
      stack.push_back(w);
    }
  }
  return false;
}

bool PebbleGame23::try_insert(int u, int v) {
  if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) throw std::invalid_argument("bad edge");
  while (pebbles_[u] + pebbles_[v] < 4) {
    if (!collect_pebble(u, v) && !collect_pebble(v, u)) return false;
  }
  --pebbles_[u];
  out_[u].push_back(v);
  ++accepted_;
  return true;
}

int r2_rank(int n, std::span<const Edge> edges) {
  PebbleGame23 game(n);
  for (const Edge& e : edges) game.try_insert(e.u, e.v);
  return game.accepted();
}

bool r2_independent(int n, std::span<const Edge> edges) {
  PebbleGame23 game(n);
  for (const Edge& e : edges)
    if (!game.try_insert(e.u, e.v)) return false;
  return true;
}

bool is_laman(const Graph& g) {
  return static_cast<int>(g.edges.size()) == 2 * g.n - 3 && r2_independent(g.n, g.edges);
}

} // namespace anglerig
