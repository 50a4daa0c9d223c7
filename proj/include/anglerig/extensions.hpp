#ifndef ANGLERIG_EXTENSIONS_HPP
#define ANGLERIG_EXTENSIONS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "anglerig/graph.hpp"
#include "anglerig/realization.hpp"

namespace anglerig {

struct ExtensionStep {
  enum class Kind { zero, one };

  Kind kind = Kind::zero;
  std::vector<int> attach;          // zero: {x,y}; one: {x,y,z}
  std::optional<Edge> removed;      // one: the edge xy that the extension removes
  std::vector<int> colors;          // colors of the new edges wx, wy (, wz)

  bool operator==(const ExtensionStep&) const = default;
};

struct ConstructionSequence {
  ColoredGraph base;                 // a bichromatic K4
  std::vector<ExtensionStep> steps;  // forward order
  ColoredGraph final_graph;          // result of replaying the steps

  bool operator==(const ConstructionSequence&) const = default;
};

// Adds vertex w = n+1 adjacent to x and y. Colors must come from 1..k.
ColoredGraph zero_extend(const ColoredGraph& g, int x, int y, int col_wx, int col_wy);

// Removes edge xy, adds w = n+1 adjacent to x, y, z. Color-preserving:
// col_wx or col_wy must equal the removed edge's color.
ColoredGraph one_extend_cp(const ColoredGraph& g, const Edge& xy, int z, int col_wx, int col_wy,
                           int col_wz);

ColoredGraph apply_step(const ColoredGraph& g, const ExtensionStep& step);

// The five canonical classes of bichromatic K4 colorings.
std::array<ColoredGraph, 5> k4_base_cases();

// Greedy reduction to a bichromatic K4 following degree-2 first, then
// degree-3 outside/inside the unique circuit; every intermediate graph is
// verified to stay in the 2-color-rigid class. Requires the predicate.
ConstructionSequence construct_sequence(const ColoredGraph& g);

// Applies the steps to the base and checks the result matches final_graph
// up to canonical form; throws on mismatch.
ColoredGraph replay(const ConstructionSequence& seq);

std::string sequence_to_json(const ConstructionSequence& seq);
ConstructionSequence sequence_from_json(const std::string& text);

// Recolors edge e to color j (j != c(e)); when e was the last edge of its
// color the remaining colors are renumbered to close the gap.
ColoredGraph color_swap(const ColoredGraph& g, const Edge& e, int target_color);

struct SwapDeterminantResult {
  Rat det_original;     // det S(G,c,p)
  Rat det_swapped;      // det S(G,c*,p), e moved from color k to k-1
  Rat det_contracted;   // det S(G-e,c',p), colors k and k-1 merged
  Rat edge_length_sq;   // |p_x - p_y|^2
  bool holds = false;   // det = det* + (-1)^k len^2 det'
};

// Exact three-determinant identity for an edge e of the last color k >= 3
// on a graph with |E| = 2n-4+k; a and b are the pinned vertices whose
// columns are deleted, both off e.
SwapDeterminantResult swap_determinant_identity(const ColoredGraph& g, const Edge& e,
                                                const Realization& p, int a, int b);

} // namespace anglerig

#endif
