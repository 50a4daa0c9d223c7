#include "anglerig/algebraic.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "anglerig/realization.hpp"
#include "anglerig/rigidity.hpp"
#include "anglerig/rng.hpp"

namespace anglerig {

ComplexifiedRealization sample_complexified(int n, std::uint64_t seed, long long bound) {
  const Realization p = random_realization(n, seed, std::max(bound, static_cast<long long>(n) * n));
  ComplexifiedRealization q;
  q.x.reserve(n);
  q.y.reserve(n);
  for (const auto& [x, y] : p.pts) {
    q.x.push_back(x);
    q.y.push_back(y);
  }
  return q;
}

namespace {

int support_index(const AngleSet& a, const Edge& e) {
  const auto it = std::find(a.edges.begin(), a.edges.end(), e);
  if (it == a.edges.end())
    throw std::invalid_argument("angle references edge outside the support");
  return static_cast<int>(it - a.edges.begin());
}

void check_realization(const AngleSet& a, const ComplexifiedRealization& q) {
  if (q.n() < a.n) throw std::invalid_argument("realization does not cover the vertex universe");
  for (const Edge& e : a.edges)
    if (q.x_diff(e) == 0 || q.y_diff(e) == 0)
      throw std::invalid_argument("degenerate coordinates: X or Y difference vanishes on an edge");
}

// Rows of the rescaled differentials; shared by the public builders so the
// cyclic-set check can reuse it without the acyclicity gate.
RatMat differential_rows(const AngleSet& a, const ComplexifiedRealization& q) {
  check_realization(a, q);
  RatMat m(static_cast<int>(a.angles.size()), 2 * a.n);
  for (std::size_t r = 0; r < a.angles.size(); ++r) {
    const auto& [first, second] = a.angles[r];
    if (first == second) throw std::invalid_argument("angle must pair distinct edges");
    const int row = static_cast<int>(r);
    const Rat s_first = q.s(first);
    const Rat s_second = q.s(second);
    const auto add = [&](const Edge& e, const Rat& coeff) {
      const Rat dx_coeff = coeff * q.y_diff(e);
      const Rat dy_coeff = -coeff * q.x_diff(e);
      m.at(row, 2 * (e.u - 1)) += dx_coeff;
      m.at(row, 2 * (e.u - 1) + 1) += dy_coeff;
      m.at(row, 2 * (e.v - 1)) += -dx_coeff;
      m.at(row, 2 * (e.v - 1) + 1) += -dy_coeff;
    };
    add(first, s_second);
    add(second, -s_first);
  }
  return m;
}

} // namespace

RatMat differential_matrix(const AngleSet& a, const ComplexifiedRealization& q) {
  if (g2_has_cycle(a)) throw std::invalid_argument("angle graph G2 has a cycle");
  return differential_rows(a, q);
}

RatMat star_block_matrix(const AngleSet& a, const ComplexifiedRealization& q) {
  check_realization(a, q);
  RatMat t(static_cast<int>(a.angles.size()), static_cast<int>(a.edges.size()));
  for (std::size_t r = 0; r < a.angles.size(); ++r) {
    const auto& [first, second] = a.angles[r];
    t.at(static_cast<int>(r), support_index(a, first)) = -q.s(second);
    t.at(static_cast<int>(r), support_index(a, second)) = q.s(first);
  }
  return t;
}

RatMat j_matrix(const ColoredGraph& g, const ComplexifiedRealization& q) {
  if (q.n() < g.n()) throw std::invalid_argument("realization does not cover the vertex universe");
  Realization p;
  for (int i = 0; i < q.n(); ++i) p.pts.emplace_back(q.x[i], q.y[i]);
  RatMat j = angle_rigidity_matrix(g, p.rotated90());
  for (int r = 0; r < g.edge_count(); ++r)
    j.at(r, 2 * g.n() + g.colors()[r] - 1) = q.s(g.edges()[r]);
  return j;
}

bool factorization_check(const ColoredGraph& g, std::uint64_t seed) {
  const AngleSet a = to_angle_set(g);
  const ComplexifiedRealization q = sample_complexified(g.n(), seed);
  const RatMat m = differential_matrix(a, q);
  const RatMat t = star_block_matrix(a, q);
  Realization p;
  for (int i = 0; i < q.n(); ++i) p.pts.emplace_back(q.x[i], q.y[i]);
  const RatMat r = rigidity_matrix(g.skeleton(), p.rotated90());
  return m == t * r;
}

MatroidRankEquivalence matroid_rank_equivalence(const ColoredGraph& g, std::uint64_t seed) {
  const AngleSet a = to_angle_set(g);
  const ComplexifiedRealization q = sample_complexified(g.n(), seed);
  MatroidRankEquivalence out;
  out.angle_count = static_cast<int>(a.angles.size());
  out.edge_count = g.edge_count();
  out.rank_differential = exact_rank(differential_rows(a, q));
  Realization p;
  for (int i = 0; i < q.n(); ++i) p.pts.emplace_back(q.x[i], q.y[i]);
  out.rank_angle_matrix = exact_rank(angle_rigidity_matrix(g, p));
  out.verdict =
      (out.rank_differential == out.angle_count) == (out.rank_angle_matrix == out.edge_count);
  return out;
}

bool cycle_dependence_check(const AngleSet& a, const ComplexifiedRealization& q) {
  if (!g2_has_cycle(a)) throw std::invalid_argument("angle set is acyclic");
  const RatMat m = differential_rows(a, q);
  return exact_rank(m) < static_cast<int>(a.angles.size());
}

} // namespace anglerig
