#ifndef ANGLERIG_RIGIDITY_HPP
#define ANGLERIG_RIGIDITY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anglerig/graph.hpp"
#include "anglerig/matrix.hpp"
#include "anglerig/realization.hpp"

namespace anglerig {

// Bar-joint rigidity matrix R(G,p), |E| x 2|V|, rows in edge order. Row vw
// carries p_v - p_w in v's column pair and the negation in w's.
RatMat rigidity_matrix(const Graph& g, const Realization& p);

// Angle-rigidity matrix [R(G,p) | M(G,c,p)], |E| x (2|V| + |c|). The color
// block has -|p_v - p_w|^2 in column c(vw). Throws when an edge has
// coincident endpoints.
RatMat angle_rigidity_matrix(const ColoredGraph& g, const Realization& p);
FloatMat angle_rigidity_matrix(const ColoredGraph& g, const FloatRealization& p);

// The four trivial kernel vectors of R(G,c,p): two translations, the
// rotated configuration with zero color part, and the configuration itself
// with all-ones color part. Throws when all points coincide.
std::array<std::vector<Rat>, 4> trivial_flex_vectors(const ColoredGraph& g, const Realization& p);

enum class FieldMode { exact, floating };

struct RigidityReport {
  int rank = 0;
  int target_rank = 0;      // 2|V| + |c| - 4
  int edge_count = 0;
  bool infinitesimally_angle_rigid = false;
  bool independent = false;
  bool minimally_angle_rigid = false;
  int kernel_dim = 0;       // 2|V| + |c| - rank
  int nontrivial_flex_dim = 0;
  std::vector<std::vector<Rat>> stress_basis;  // cokernel, exact mode only
  Realization realization;  // the realization that achieved `rank`
  std::uint64_t seed = 0;   // 0 when an explicit realization was supplied
  int attempts = 0;
  bool generic_probabilistic = false;  // true when the verdict used sampled points
  FieldMode mode = FieldMode::exact;
  double tol = 0.0;
};

// Verdicts at one fixed realization.
RigidityReport report_at(const ColoredGraph& g, const Realization& p);
RigidityReport report_at(const ColoredGraph& g, const FloatRealization& p, double tol = 1e-9);

// Generic verdict: up to `attempts` random realizations (escalating the
// coordinate bound), keeping the maximum rank. Flexibility verdicts are
// probabilistic per the sampling caveat; rigidity verdicts are certified by
// the achieved rank.
RigidityReport report_seeded(const ColoredGraph& g, std::uint64_t seed,
                             long long bound = 1'000'000, int attempts = 3);

// Sum_{vw in F} omega_vw |p_v - p_w|^2 for an equilibrium stress omega of
// the bar-joint framework (G,p); throws when omega is not a stress.
Rat stress_sum(const Graph& g, const Realization& p, std::span<const Rat> omega,
               std::span<const Edge> subset);

// Zero-padded lift of a stress of (G_i, p) into coker R(G,c,p) (verified).
std::vector<Rat> lift_monochromatic_stress(const ColoredGraph& g, int color,
                                           std::span<const Rat> omega_i, const Realization& p);

} // namespace anglerig

#endif
