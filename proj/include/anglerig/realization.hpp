#ifndef ANGLERIG_REALIZATION_HPP
#define ANGLERIG_REALIZATION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "anglerig/graph.hpp"
#include "anglerig/rational.hpp"

namespace anglerig {

// Exact planar point assignment; pts[v-1] is the point of vertex v.
struct Realization {
  std::vector<std::pair<Rat, Rat>> pts;

  int n() const { return static_cast<int>(pts.size()); }
  const Rat& x(int v) const { return pts[v - 1].first; }
  const Rat& y(int v) const { return pts[v - 1].second; }

  Realization rotated90() const;  // p -> p^perp, (x,y) -> (-y,x)
};

struct FloatRealization {
  std::vector<std::pair<double, double>> pts;

  int n() const { return static_cast<int>(pts.size()); }
  double x(int v) const { return pts[v - 1].first; }
  double y(int v) const { return pts[v - 1].second; }
};

// Integer coordinates uniform in [-bound, bound], all 2n values pairwise
// distinct, deterministic per seed. Requires bound >= n^2.
Realization random_realization(int n, std::uint64_t seed, long long bound = 1'000'000);

FloatRealization to_float(const Realization& p);

// "v x y" lines; accepts "a/b", integers and finite decimals.
Realization parse_realization(const std::string& text, int n);
std::string format_realization(const Realization& p);
FloatRealization parse_float_realization(const std::string& text, int n);

} // namespace anglerig

#endif
