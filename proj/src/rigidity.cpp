#include "anglerig/rigidity.hpp"

#include <algorithm>
#include <stdexcept>

#include "anglerig/rng.hpp"

namespace anglerig {

RatMat rigidity_matrix(const Graph& g, const Realization& p) {
  if (p.n() < g.n) throw std::invalid_argument("realization does not cover all vertices");
  RatMat m(static_cast<int>(g.edges.size()), 2 * g.n);
  for (std::size_t r = 0; r < g.edges.size(); ++r) {
    const auto [u, v] = g.edges[r];
    const Rat dx = p.x(u) - p.x(v);
    const Rat dy = p.y(u) - p.y(v);
    const int row = static_cast<int>(r);
    m.at(row, 2 * (u - 1)) = dx;
    m.at(row, 2 * (u - 1) + 1) = dy;
    m.at(row, 2 * (v - 1)) = -dx;
    m.at(row, 2 * (v - 1) + 1) = -dy;
  }
  return m;
}

RatMat angle_rigidity_matrix(const ColoredGraph& g, const Realization& p) {
  if (p.n() < g.n()) throw std::invalid_argument("realization does not cover all vertices");
  RatMat m(g.edge_count(), 2 * g.n() + g.k());
  for (int r = 0; r < g.edge_count(); ++r) {
    const auto [u, v] = g.edges()[r];
    const Rat dx = p.x(u) - p.x(v);
    const Rat dy = p.y(u) - p.y(v);
    if (dx == 0 && dy == 0)
      throw std::invalid_argument("coincident endpoints on edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    m.at(r, 2 * (u - 1)) = dx;
    m.at(r, 2 * (u - 1) + 1) = dy;
    m.at(r, 2 * (v - 1)) = -dx;
    m.at(r, 2 * (v - 1) + 1) = -dy;
    m.at(r, 2 * g.n() + g.colors()[r] - 1) = -(dx * dx + dy * dy);
  }
  return m;
}

FloatMat angle_rigidity_matrix(const ColoredGraph& g, const FloatRealization& p) {
  if (p.n() < g.n()) throw std::invalid_argument("realization does not cover all vertices");
  FloatMat m(g.edge_count(), 2 * g.n() + g.k());
  for (int r = 0; r < g.edge_count(); ++r) {
    const auto [u, v] = g.edges()[r];
    const double dx = p.x(u) - p.x(v);
    const double dy = p.y(u) - p.y(v);
    if (dx == 0.0 && dy == 0.0)
      throw std::invalid_argument("coincident endpoints on edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    m.at(r, 2 * (u - 1)) = dx;
    m.at(r, 2 * (u - 1) + 1) = dy;
    m.at(r, 2 * (v - 1)) = -dx;
    m.at(r, 2 * (v - 1) + 1) = -dy;
    m.at(r, 2 * g.n() + g.colors()[r] - 1) = -(dx * dx + dy * dy);
  }
  return m;
}

std::array<std::vector<Rat>, 4> trivial_flex_vectors(const ColoredGraph& g, const Realization& p) {
  const int n = g.n();
  bool spread = false;
  for (int v = 2; v <= n && !spread; ++v)
    if (p.pts[v - 1] != p.pts[0]) spread = true;
  if (!spread) throw std::invalid_argument("all points coincident");

  const int dim = 2 * n + g.k();
  std::array<std::vector<Rat>, 4> out;
  for (auto& vec : out) vec.assign(dim, Rat(0));
  for (int v = 1; v <= n; ++v) {
    out[0][2 * (v - 1)] = 1;                 // translation in x
    out[1][2 * (v - 1) + 1] = 1;             // translation in y
    out[2][2 * (v - 1)] = -p.y(v);           // rotated configuration p^perp
    out[2][2 * (v - 1) + 1] = p.x(v);
    out[3][2 * (v - 1)] = p.x(v);            // configuration itself ...
    out[3][2 * (v - 1) + 1] = p.y(v);
  }
  for (int c = 0; c < g.k(); ++c) out[3][2 * n + c] = 1;  // ... with all-ones color part
  return out;
}

namespace {

RigidityReport build_exact_report(const ColoredGraph& g, const Realization& p) {
  RigidityReport rep;
  rep.mode = FieldMode::exact;
  rep.edge_count = g.edge_count();
  rep.target_rank = 2 * g.n() + g.k() - 4;
  const RatMat m = angle_rigidity_matrix(g, p);
  rep.rank = exact_rank(m);
  rep.kernel_dim = m.cols() - rep.rank;
  rep.nontrivial_flex_dim = std::max(0, rep.kernel_dim - 4);
  rep.infinitesimally_angle_rigid = (rep.rank == rep.target_rank);
  rep.independent = (rep.rank == rep.edge_count);
  rep.minimally_angle_rigid = rep.infinitesimally_angle_rigid && rep.edge_count == rep.target_rank;
  rep.stress_basis = cokernel_basis(m);
  rep.realization = p;
  return rep;
}

} // namespace

RigidityReport report_at(const ColoredGraph& g, const Realization& p) {
  if (g.n() < 2) throw std::invalid_argument("need at least two vertices");
  return build_exact_report(g, p);
}

RigidityReport report_at(const ColoredGraph& g, const FloatRealization& p, double tol) {
  if (g.n() < 2) throw std::invalid_argument("need at least two vertices");
  RigidityReport rep;
  rep.mode = FieldMode::floating;
  rep.tol = tol;
  rep.edge_count = g.edge_count();
  rep.target_rank = 2 * g.n() + g.k() - 4;
  const FloatMat m = angle_rigidity_matrix(g, p);
  rep.rank = float_rank(m, tol);
  rep.kernel_dim = m.cols() - rep.rank;
  rep.nontrivial_flex_dim = std::max(0, rep.kernel_dim - 4);
  rep.infinitesimally_angle_rigid = (rep.rank == rep.target_rank);
  rep.independent = (rep.rank == rep.edge_count);
  rep.minimally_angle_rigid = rep.infinitesimally_angle_rigid && rep.edge_count == rep.target_rank;
  return rep;
}

RigidityReport report_seeded(const ColoredGraph& g, std::uint64_t seed, long long bound,
                             int attempts) {
  if (g.n() < 2) throw std::invalid_argument("need at least two vertices");
  const int cap = std::min(g.edge_count(), 2 * g.n() + g.k() - 4);
  std::optional<RigidityReport> best;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const long long b = bound << std::min(attempt, 20);
    const Realization p = random_realization(g.n(), derive_seed(seed, attempt), b);
    RigidityReport rep = build_exact_report(g, p);
    rep.seed = seed;
    rep.attempts = attempt + 1;
    rep.generic_probabilistic = true;
    if (!best || rep.rank > best->rank) best = std::move(rep);
    if (best->rank >= cap) break;  // rank cannot grow past the trivial-kernel cap
  }
  return *best;
}

Rat stress_sum(const Graph& g, const Realization& p, std::span<const Rat> omega,
               std::span<const Edge> subset) {
  if (omega.size() != g.edges.size()) throw std::invalid_argument("stress length mismatch");
  const RatMat r = rigidity_matrix(g, p);
  const std::vector<Rat> w(omega.begin(), omega.end());
  for (const Rat& entry : vec_mat(w, r))
    if (entry != 0) throw std::invalid_argument("omega is not an equilibrium stress of (G,p)");
  Rat total(0);
  for (const Edge& e : subset) {
    const auto it = std::lower_bound(g.edges.begin(), g.edges.end(), e);
    if (it == g.edges.end() || *it != e) throw std::invalid_argument("subset contains non-edge");
    const std::size_t idx = static_cast<std::size_t>(it - g.edges.begin());
    const Rat dx = p.x(e.u) - p.x(e.v);
    const Rat dy = p.y(e.u) - p.y(e.v);
    total += omega[idx] * (dx * dx + dy * dy);
  }
  return total;
}

std::vector<Rat> lift_monochromatic_stress(const ColoredGraph& g, int color,
                                           std::span<const Rat> omega_i, const Realization& p) {
  const ColoredGraph gi = subgraph_color_restrict(g, color);
  if (omega_i.size() != gi.edges().size())
    throw std::invalid_argument("stress length does not match the color class");
  const RatMat ri = rigidity_matrix(gi.skeleton(), p);
  const std::vector<Rat> wi(omega_i.begin(), omega_i.end());
  for (const Rat& entry : vec_mat(wi, ri))
    if (entry != 0) throw std::invalid_argument("omega is not a stress of (G_i,p)");

  std::vector<Rat> lifted(g.edge_count(), Rat(0));
  for (std::size_t j = 0; j < gi.edges().size(); ++j)
    lifted[g.edge_index(gi.edges()[j])] = omega_i[j];

  const RatMat full = angle_rigidity_matrix(g, p);
  for (const Rat& entry : vec_mat(lifted, full))
    if (entry != 0) throw std::logic_error("lifted stress failed verification");
  return lifted;
}

} // namespace anglerig
