#ifndef ANGLERIG_ALGEBRAIC_HPP
#define ANGLERIG_ALGEBRAIC_HPP

#include <cstdint>

#include "anglerig/angle_set.hpp"
#include "anglerig/graph.hpp"
#include "anglerig/matrix.hpp"

namespace anglerig {

// Independent rational stand-ins for the x_i, y_i transcendentals after the
// complex change of variables. All 2n values are distinct, so every edge
// difference X_ij, Y_ij and product S_ij = X_ij * Y_ij is nonzero.
struct ComplexifiedRealization {
  std::vector<Rat> x, y;

  int n() const { return static_cast<int>(x.size()); }
  Rat x_diff(const Edge& e) const { return x[e.u - 1] - x[e.v - 1]; }
  Rat y_diff(const Edge& e) const { return y[e.u - 1] - y[e.v - 1]; }
  Rat s(const Edge& e) const { return x_diff(e) * y_diff(e); }
};

ComplexifiedRealization sample_complexified(int n, std::uint64_t seed,
                                            long long bound = 1'000'000);

// |A| x 2n matrix of rescaled angle differentials; row for the angle
// pairing (ij) with (kl) carries S_kl * (Y_ij, -X_ij, -Y_ij, X_ij) at the
// i,j column pairs and -S_ij * (Y_kl, -X_kl, -Y_kl, X_kl) at k,l.
// Requires an acyclic angle set (and distinct edges per angle).
RatMat differential_matrix(const AngleSet& a, const ComplexifiedRealization& q);

// T: |A| x |support| with -S_second at the first edge's column and
// +S_first at the second edge's column of each angle row; block diagonal
// over stars for star angle sets.
RatMat star_block_matrix(const AngleSet& a, const ComplexifiedRealization& q);

// The angle-rigidity matrix of the rotated realization with every color
// entry replaced by S_ij.
RatMat j_matrix(const ColoredGraph& g, const ComplexifiedRealization& q);

// Verifies M(A) == T * R(G, q^perp) entry-exactly for A = to_angle_set(g).
bool factorization_check(const ColoredGraph& g, std::uint64_t seed);

struct MatroidRankEquivalence {
  int rank_differential = 0;  // rank M(A)
  int angle_count = 0;        // |A|
  int rank_angle_matrix = 0;  // rank R(G,c,p) at the matched realization
  int edge_count = 0;
  bool verdict = false;       // full-rank equivalence held
};

MatroidRankEquivalence matroid_rank_equivalence(const ColoredGraph& g, std::uint64_t seed);

// Requires a cyclic angle set; true iff the differential rows are
// dependent at q (expected always, rank drop by the cycle relation).
bool cycle_dependence_check(const AngleSet& a, const ComplexifiedRealization& q);

} // namespace anglerig

#endif
