#ifndef ANGLERIG_PEBBLE_HPP
#define ANGLERIG_PEBBLE_HPP

#include <span>
#include <vector>

#include "anglerig/graph.hpp"

namespace anglerig {

// (2,3)-pebble game. Single-use: feed edges through try_insert.
class PebbleGame23 {
 public:
  explicit PebbleGame23(int n);

  // Accepts the edge iff it is independent of the accepted set in the
  // generic 2-d rigidity matroid.
  bool try_insert(int u, int v);

  int accepted() const { return accepted_; }

 private:
  bool collect_pebble(int target, int other);

  int n_;
  std::vector<int> pebbles_;               // 0..2 per vertex
  std::vector<std::vector<int>> out_;      // orientation of accepted edges
  std::vector<int> visited_;
  std::vector<int> parent_;
  int stamp_ = 0;
  int accepted_ = 0;
};

// Rank in the generic 2-d rigidity matroid.
int r2_rank(int n, std::span<const Edge> edges);

// True iff the edge set is independent ((2,3)-sparse).
bool r2_independent(int n, std::span<const Edge> edges);

// |E| = 2n-3 and independent.
bool is_laman(const Graph& g);

} // namespace anglerig

#endif
