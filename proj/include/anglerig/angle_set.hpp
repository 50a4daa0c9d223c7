#ifndef ANGLERIG_ANGLE_SET_HPP
#define ANGLERIG_ANGLE_SET_HPP

#include <vector>

#include "anglerig/graph.hpp"

namespace anglerig {

// Ordered pair of distinct edges. Order is immaterial for the matroid but
// fixes the sign convention of differential rows (first = leaf, second =
// star center for sets produced by to_angle_set).
struct Angle {
  Edge first;
  Edge second;

  bool operator==(const Angle&) const = default;
};

// A set of angles together with its edge support. The support may contain
// edges that appear in no angle (singleton color classes); those are
// isolated vertices of the angle graph G2.
struct AngleSet {
  int n = 0;                 // vertex universe 1..n
  std::vector<Angle> angles;
  std::vector<Edge> edges;   // sorted support, superset of the angles' edges

  std::vector<int> vertex_support() const;  // V(A)
};

// Star construction: one star per color class, centered on the class's
// lexicographically least edge. |angles| = |E| - k and G2 is acyclic.
AngleSet to_angle_set(const ColoredGraph& g);

// Colors = connected components of G2 (isolated support edges become
// singleton classes). Throws when G2 has a cycle.
ColoredGraph from_angle_set(const AngleSet& a);

// True iff G2 contains a cycle; a repeated edge pair counts as a 2-cycle.
bool g2_has_cycle(const AngleSet& a);

} // namespace anglerig

#endif
