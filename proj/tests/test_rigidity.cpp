#include "doctest.h"

#include <stdexcept>

#include <cmath>

#include "anglerig/canonical.hpp"
#include "anglerig/pebble.hpp"
#include "anglerig/rigidity.hpp"
#include "anglerig/rng.hpp"

using namespace anglerig;

namespace {

ColoredGraph k4_with_colors(std::vector<int> colors) {
  // edge order 12,13,14,23,24,34
  std::vector<std::pair<Edge, int>> ce;
  int i = 0;
  for (int u = 1; u <= 4; ++u)
    for (int v = u + 1; v <= 4; ++v) ce.emplace_back(Edge(u, v), colors[i++]);
  return ColoredGraph::make(4, std::move(ce));
}

// colors {12,13,14,23}->1, {24,34}->2 with the embedding that has an extra
// vertical flex of vertex 4
const ColoredGraph vertical_flex_k4 = k4_with_colors({1, 1, 1, 1, 2, 2});

Realization vertical_flex_embedding() {
  Realization p;
  p.pts = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(2), Rat(1)}, {Rat(0), Rat(1)}};
  return p;
}

ColoredGraph random_graph_mono(Rng& rng, int n) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (rng.below(2)) edges.emplace_back(u, v);
  if (edges.empty()) edges.emplace_back(1, 2);
  return ColoredGraph::monochromatic(n, std::move(edges));
}

} // namespace

TEST_CASE("random realizations are reproducible and admissible") {
  const Realization a = random_realization(4, 42);
  const Realization b = random_realization(4, 42);
  CHECK(a.pts == b.pts);
  const Realization c = random_realization(4, 43);
  CHECK(a.pts != c.pts);
  for (int u = 1; u <= 4; ++u)
    for (int v = u + 1; v <= 4; ++v) CHECK(a.pts[u - 1] != a.pts[v - 1]);
  CHECK_THROWS_AS(random_realization(40, 1, 100), std::invalid_argument);
}

TEST_CASE("single edge row") {
  const ColoredGraph g = ColoredGraph::monochromatic(2, {Edge(1, 2)});
  Realization p;
  p.pts = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}};
  const RatMat m = angle_rigidity_matrix(g, p);
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 5);
  const long expected[5] = {-1, 0, 1, 0, -1};
  for (int j = 0; j < 5; ++j) CHECK(m.at(0, j) == Rat(expected[j]));

  // the scaling direction (u^p, 1) annihilates the row
  const auto flexes = trivial_flex_vectors(g, p);
  for (const auto& v : flexes)
    for (const Rat& entry : mat_vec(m, v)) CHECK(entry == 0);
}

TEST_CASE("triangle matrices match the displayed entry pattern") {
  // Independent re-statement of the 3x7 / 3x8 triangle matrices as direct
  // coordinate formulas, compared entry-by-entry at random points.
  Rng rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    const Realization p = random_realization(3, rng.next());
    const Rat x1 = p.x(1), y1 = p.y(1), x2 = p.x(2), y2 = p.y(2), x3 = p.x(3), y3 = p.y(3);

    const ColoredGraph mono = ColoredGraph::monochromatic(3, {Edge(1, 2), Edge(1, 3), Edge(2, 3)});
    const RatMat m1 = angle_rigidity_matrix(mono, p);
    const Rat d12 = (x1 - x2) * (x1 - x2) + (y1 - y2) * (y1 - y2);
    const Rat d13 = (x1 - x3) * (x1 - x3) + (y1 - y3) * (y1 - y3);
    const Rat d23 = (x2 - x3) * (x2 - x3) + (y2 - y3) * (y2 - y3);
    const Rat expect1[3][7] = {
        {x1 - x2, y1 - y2, x2 - x1, y2 - y1, Rat(0), Rat(0), -d12},
        {x1 - x3, y1 - y3, Rat(0), Rat(0), x3 - x1, y3 - y1, -d13},
        {Rat(0), Rat(0), x2 - x3, y2 - y3, x3 - x2, y3 - y2, -d23},
    };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 7; ++j) CHECK(m1.at(i, j) == expect1[i][j]);

    // classes {12,13} and {23}
    const ColoredGraph two =
        ColoredGraph::make(3, {{Edge(1, 2), 1}, {Edge(1, 3), 1}, {Edge(2, 3), 2}});
    const RatMat m2 = angle_rigidity_matrix(two, p);
    const Rat expect2[3][8] = {
        {x1 - x2, y1 - y2, x2 - x1, y2 - y1, Rat(0), Rat(0), -d12, Rat(0)},
        {x1 - x3, y1 - y3, Rat(0), Rat(0), x3 - x1, y3 - y1, -d13, Rat(0)},
        {Rat(0), Rat(0), x2 - x3, y2 - y3, x3 - x2, y3 - y2, Rat(0), -d23},
    };
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 8; ++j) CHECK(m2.at(i, j) == expect2[i][j]);
  }
}

TEST_CASE("coincident endpoints are rejected") {
  const ColoredGraph g = ColoredGraph::monochromatic(2, {Edge(1, 2)});
  Realization p;
  p.pts = {{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
  CHECK_THROWS_AS(angle_rigidity_matrix(g, p), std::invalid_argument);
  CHECK_THROWS_AS(trivial_flex_vectors(g, p), std::invalid_argument);
}

TEST_CASE("trivial flexes lie in the exact kernel on random frameworks") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(4));
    ColoredGraph g = random_graph_mono(rng, n);
    const Realization p = random_realization(n, rng.next());
    const RatMat m = angle_rigidity_matrix(g, p);
    const auto flexes = trivial_flex_vectors(g, p);
    for (const auto& v : flexes)
      for (const Rat& entry : mat_vec(m, v)) CHECK(entry == 0);
    // independence of the four directions
    RatMat f(4, 2 * n + g.k());
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < f.cols(); ++j) f.at(i, j) = flexes[i][j];
    CHECK(exact_rank(f) == 4);
    // hence the rank never exceeds 2n + k - 4
    CHECK(exact_rank(m) <= 2 * n + g.k() - 4);
  }
}

TEST_CASE("vertical-flex embedding is not infinitesimally angle-rigid") {
  const RigidityReport rep = report_at(vertical_flex_k4, vertical_flex_embedding());
  CHECK(rep.rank == 5);
  CHECK(rep.kernel_dim == 5);
  CHECK(rep.nontrivial_flex_dim == 1);
  CHECK(!rep.infinitesimally_angle_rigid);
  CHECK(!rep.independent);
  CHECK(rep.stress_basis.size() == 1);
}

TEST_CASE("the same coloring is rigid at random realizations") {
  const RigidityReport rep = report_seeded(vertical_flex_k4, 2024);
  CHECK(rep.rank == 6);
  CHECK(rep.infinitesimally_angle_rigid);
  CHECK(rep.minimally_angle_rigid);
  CHECK(rep.independent);
  CHECK(rep.generic_probabilistic);
}

TEST_CASE("diagonal-pair K4 at the irrational embedding, floating mode") {
  // colors {12,14,23,34}->1, {13,24}->2
  const ColoredGraph g = k4_with_colors({1, 2, 1, 1, 2, 1});
  FloatRealization p;
  const double s2 = std::sqrt(2.0), s3 = std::sqrt(3.0), s6 = std::sqrt(6.0);
  p.pts = {{0.0, 0.0}, {1.0, 0.0}, {1.0 + 1.0 / s2, 1.0 / s6}, {(1.0 + s2) / 2.0, (1.0 + s2) / (2.0 * s3)}};
  const RigidityReport rep = report_at(g, p, 1e-9);
  CHECK(rep.mode == FieldMode::floating);
  CHECK(rep.rank == 6);
  CHECK(rep.infinitesimally_angle_rigid);
  CHECK(rep.minimally_angle_rigid);
}

TEST_CASE("rank is invariant under similarity transforms") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(3));
    ColoredGraph g = random_graph_mono(rng, n);
    const Realization p = random_realization(n, rng.next());
    const int base = exact_rank(angle_rigidity_matrix(g, p));

    Realization translated = p, scaled = p;
    for (auto& [x, y] : translated.pts) {
      x += Rat(17);
      y -= Rat(5);
    }
    for (auto& [x, y] : scaled.pts) {
      x *= Rat(3, 2);
      y *= Rat(3, 2);
    }
    CHECK(exact_rank(angle_rigidity_matrix(g, translated)) == base);
    CHECK(exact_rank(angle_rigidity_matrix(g, scaled)) == base);
    CHECK(exact_rank(angle_rigidity_matrix(g, p.rotated90())) == base);
  }
}

TEST_CASE("monochromatic rigidity matches bar-joint rigidity") {
  Rng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(4));
    const ColoredGraph g = random_graph_mono(rng, n);
    const Realization p = random_realization(n, rng.next());
    const bool angle_rigid = report_at(g, p).infinitesimally_angle_rigid;
    const int bar_rank = exact_rank(rigidity_matrix(g.skeleton(), p));
    CHECK(angle_rigid == (bar_rank == 2 * n - 3));
  }
}

TEST_CASE("stress sums over a dependent K4") {
  const ColoredGraph k4 = k4_with_colors({1, 1, 1, 1, 1, 1});
  const Realization p = random_realization(4, 99);
  const auto stresses = cokernel_basis(rigidity_matrix(k4.skeleton(), p));
  REQUIRE(stresses.size() == 1);
  const auto& omega = stresses[0];

  CHECK(stress_sum(k4.skeleton(), p, omega, {}) == Rat(0));
  CHECK(stress_sum(k4.skeleton(), p, omega, k4.edges()) == Rat(0));
  const std::vector<Edge> one{Edge(1, 2)};
  CHECK(stress_sum(k4.skeleton(), p, omega, one) != Rat(0));

  std::vector<Rat> bogus(omega.size(), Rat(1));
  bogus[0] = Rat(2);
  CHECK_THROWS_AS(stress_sum(k4.skeleton(), p, bogus, k4.edges()), std::invalid_argument);
}

TEST_CASE("monochromatic stresses lift to the colored matrix") {
  // K4 entirely in color 1 next to a pendant edge in color 2
  const ColoredGraph g = ColoredGraph::make(
      5, {{Edge(1, 2), 1}, {Edge(1, 3), 1}, {Edge(1, 4), 1}, {Edge(2, 3), 1}, {Edge(2, 4), 1},
          {Edge(3, 4), 1}, {Edge(4, 5), 2}, {Edge(3, 5), 2}});
  const Realization p = random_realization(5, 31);
  const ColoredGraph g1 = subgraph_color_restrict(g, 1);
  const auto stresses = cokernel_basis(rigidity_matrix(g1.skeleton(), p));
  REQUIRE(stresses.size() == 1);  // the K4 stress
  const std::vector<Rat> lifted = lift_monochromatic_stress(g, 1, stresses[0], p);
  CHECK(lifted.size() == g.edges().size());

  // a Laman color class supports only the zero stress
  const ColoredGraph g2 = subgraph_color_restrict(g, 2);
  CHECK(cokernel_basis(rigidity_matrix(g2.skeleton(), p)).empty());

  std::vector<Rat> not_a_stress(6, Rat(1));
  CHECK_THROWS_AS(lift_monochromatic_stress(g, 1, not_a_stress, p), std::invalid_argument);
}

TEST_CASE("independence flag matches the stress basis") {
  Rng rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(3));
    const ColoredGraph g = random_graph_mono(rng, n);
    const RigidityReport rep = report_at(g, random_realization(n, rng.next()));
    CHECK(rep.independent == rep.stress_basis.empty());
    CHECK(rep.independent == (rep.rank == rep.edge_count));
  }
}

TEST_CASE("realization parsing rejects bad files") {
  CHECK_THROWS_AS(parse_realization("1 0 0\n1 1 1\n", 2), std::invalid_argument);  // reassigned
  CHECK_THROWS_AS(parse_realization("1 0 0\n", 2), std::invalid_argument);         // missing vertex
  CHECK_THROWS_AS(parse_realization("3 0 0\n", 2), std::invalid_argument);         // out of range
  const Realization p = parse_realization("# points\n1 1/2 -2\n2 0.25 7\n", 2);
  CHECK(p.x(1) == Rat(1, 2));
  CHECK(p.y(1) == Rat(-2));
  CHECK(p.x(2) == Rat(1, 4));
}
