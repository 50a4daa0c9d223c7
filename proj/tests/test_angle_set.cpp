#include "doctest.h"

#include <stdexcept>

#include "anglerig/angle_set.hpp"
#include "anglerig/canonical.hpp"
#include "anglerig/enumeration.hpp"

using namespace anglerig;

namespace {

const ColoredGraph triangle_two_colors =
    ColoredGraph::make(3, {{Edge(1, 2), 1}, {Edge(2, 3), 1}, {Edge(1, 3), 2}});

} // namespace

TEST_CASE("star construction per color class") {
  // one class of three edges: star centered on the lex-least edge
  const ColoredGraph g = ColoredGraph::make(
      4, {{Edge(1, 2), 1}, {Edge(1, 3), 1}, {Edge(1, 4), 1}, {Edge(2, 3), 2}});
  const AngleSet a = to_angle_set(g);
  CHECK(a.angles.size() == g.edges().size() - 2);  // |E| - k
  int with_center = 0;
  for (const Angle& angle : a.angles)
    if (angle.second == Edge(1, 2)) ++with_center;
  CHECK(with_center == 2);  // leaves 13, 14 hang off the least edge 12
  CHECK(!g2_has_cycle(a));
}

TEST_CASE("singleton color classes become isolated G2 vertices") {
  const AngleSet a = to_angle_set(triangle_two_colors);
  REQUIRE(a.angles.size() == 1);
  CHECK(a.angles[0].first == Edge(2, 3));
  CHECK(a.angles[0].second == Edge(1, 2));
  CHECK(a.edges.size() == 3);  // support still carries the singleton 13
}

TEST_CASE("angle set to colored graph") {
  AngleSet single;
  single.n = 4;
  single.edges = {Edge(1, 2), Edge(3, 4)};
  single.angles = {Angle{Edge(1, 2), Edge(3, 4)}};
  const ColoredGraph g = from_angle_set(single);
  CHECK(g.k() == 1);
  CHECK(g.edge_count() == 2);
  CHECK(g.color_of(Edge(1, 2)) == g.color_of(Edge(3, 4)));
}

TEST_CASE("round trip through angle sets preserves the canonical class") {
  CHECK(canonical_key(from_angle_set(to_angle_set(triangle_two_colors))) ==
        canonical_key(triangle_two_colors));
}

TEST_CASE("round trip on every colored graph with n <= 6") {
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& g : generate_candidate_graphs(n, 2)) {
      for (int k = 1; k <= 3; ++k) {
        for_each_coloring_class(g, k, [&](const std::vector<int>& rgs) {
          std::vector<std::pair<Edge, int>> ce;
          for (std::size_t i = 0; i < g.edges.size(); ++i) ce.emplace_back(g.edges[i], rgs[i]);
          const ColoredGraph colored = ColoredGraph::make(g.n, std::move(ce));
          const AngleSet a = to_angle_set(colored);
          CHECK(a.angles.size() == colored.edges().size() - static_cast<std::size_t>(k));
          CHECK(!g2_has_cycle(a));
          CHECK(canonical_key(from_angle_set(a)) == canonical_key(colored));
          return true;
        });
      }
    }
  }
}

TEST_CASE("cycle detection") {
  AngleSet cyc;
  cyc.n = 3;
  cyc.edges = {Edge(1, 2), Edge(1, 3), Edge(2, 3)};
  cyc.angles = {Angle{Edge(1, 2), Edge(1, 3)}, Angle{Edge(1, 3), Edge(2, 3)},
                Angle{Edge(2, 3), Edge(1, 2)}};
  CHECK(g2_has_cycle(cyc));
  CHECK_THROWS_AS(from_angle_set(cyc), std::invalid_argument);

  AngleSet two_cycle;
  two_cycle.n = 4;
  two_cycle.edges = {Edge(1, 2), Edge(3, 4)};
  two_cycle.angles = {Angle{Edge(1, 2), Edge(3, 4)}, Angle{Edge(3, 4), Edge(1, 2)}};
  CHECK(g2_has_cycle(two_cycle));

  AngleSet forest;
  forest.n = 5;
  forest.edges = {Edge(1, 2), Edge(1, 3), Edge(2, 3), Edge(4, 5), Edge(3, 5)};
  forest.angles = {Angle{Edge(1, 3), Edge(1, 2)}, Angle{Edge(2, 3), Edge(1, 2)},
                   Angle{Edge(3, 5), Edge(4, 5)}};
  CHECK(!g2_has_cycle(forest));

  AngleSet degenerate;
  degenerate.n = 2;
  degenerate.edges = {Edge(1, 2)};
  degenerate.angles = {Angle{Edge(1, 2), Edge(1, 2)}};
  CHECK_THROWS_AS(g2_has_cycle(degenerate), std::invalid_argument);
}
