#ifndef ANGLERIG_COMBINATORICS_HPP
#define ANGLERIG_COMBINATORICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "anglerig/graph.hpp"
#include "anglerig/rational.hpp"

namespace anglerig {

struct MaxwellViolation {
  std::vector<Edge> subgraph;  // the violating edge set H
  int vertex_count = 0;        // |V(H)|
  int chi = 0;                 // colors among H
};

// Checks |E(H)| <= 2|V(H)| + chi(H) - 4 over every nonempty edge subset.
// Returns the first violator in mask order, nullopt when none.
std::optional<MaxwellViolation> maxwell_colored_check(const ColoredGraph& g);

// One edge per color such that (E \ F) + e_i is an R2 basis for every
// color i; nullopt when no transversal works.
std::optional<std::vector<Edge>> transversal_condition_global(const ColoredGraph& g);

struct PerColorWitnesses {
  bool ok = false;                                      // every color has a witness
  std::map<int, std::optional<std::vector<Edge>>> witness;  // color -> F_i
};

// For each color i: one edge per other color whose removal leaves an R2
// basis.
PerColorWitnesses transversal_condition_per_color(const ColoredGraph& g);

struct CircuitCertificate {
  std::vector<Edge> circuit;
  std::vector<Rat> stress;  // support cross-check witness, indexed by circuit order
  std::set<int> colors;
};

// Requires |E| = 2n-2. Present iff the edge set spans with corank exactly
// one; the circuit is {e : E - e is (2,3)-sparse}, cross-validated against
// the support of the unique equilibrium stress at a random realization.
std::optional<CircuitCertificate> unique_circuit(const ColoredGraph& g, std::uint64_t seed = 1);

// |c| = 2, |E| = 2n-2, and the unique circuit exists and uses both colors.
bool two_color_rigid_predicate(const ColoredGraph& g);

// For a Laman graph and a degree-3 vertex v, a pair {x,y} of neighbours
// with G - v + xy Laman. Throws when no pair works (cannot happen for
// Laman inputs) or when preconditions fail.
std::pair<int, int> laman_one_reduction_pair(const Graph& g, int v);

} // namespace anglerig

#endif
