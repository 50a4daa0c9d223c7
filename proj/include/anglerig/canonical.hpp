#ifndef ANGLERIG_CANONICAL_HPP
#define ANGLERIG_CANONICAL_HPP

#include <string>
#include <vector>

#include "anglerig/graph.hpp"

namespace anglerig {

// Two colored graphs have equal `bytes` iff they are isomorphic under a
// vertex permutation combined with a color permutation.
struct CanonicalForm {
  std::string bytes;
  std::vector<int> vertex_map;  // vertex v (1-based) -> canonical position (0-based)
  std::vector<int> color_map;   // color c (1-based)  -> canonical color (1-based)

  bool operator==(const CanonicalForm& rhs) const { return bytes == rhs.bytes; }
};

CanonicalForm canonical_form(const ColoredGraph& g);
std::string canonical_key(const ColoredGraph& g);
std::string canonical_key(const Graph& g);

// hex rendering of the canonical bytes, for JSON output
std::string canonical_hex(const ColoredGraph& g);

// All vertex permutations (1-based image arrays) preserving the uncolored
// adjacency. Intended for desk-scale n; uses degree/refinement pruning.
std::vector<std::vector<int>> automorphisms(const Graph& g);

} // namespace anglerig

#endif
