#include "doctest.h"

#include <stdexcept>

#include "anglerig/graph.hpp"

using namespace anglerig;

namespace {

ColoredGraph k3(std::vector<int> colors) {
  return ColoredGraph::make(3, {{Edge(1, 2), colors[0]}, {Edge(1, 3), colors[1]}, {Edge(2, 3), colors[2]}});
}

} // namespace

TEST_CASE("validate accepts a monochromatic triangle") {
  CHECK(!validate(k3({1, 1, 1})));
}

TEST_CASE("validate flags color gaps, loops, ranges and duplicates") {
  CHECK(validate(k3({1, 3, 1})).value().find("gap") != std::string::npos);
  const ColoredGraph loop = ColoredGraph::make(2, {{Edge(1, 1), 1}});
  CHECK(validate(loop).value().find("loop") != std::string::npos);
  const ColoredGraph oob = ColoredGraph::make(2, {{Edge(1, 3), 1}});
  CHECK(validate(oob).value().find("range") != std::string::npos);
  const ColoredGraph dup = ColoredGraph::make(3, {{Edge(1, 2), 1}, {Edge(2, 1), 1}});
  CHECK(validate(dup).value().find("duplicate") != std::string::npos);
}

TEST_CASE("chi counts colors of edge subsets") {
  // triangle with the path edges in color 1 and the closing edge in color 2
  const ColoredGraph g =
      ColoredGraph::make(3, {{Edge(1, 2), 1}, {Edge(2, 3), 1}, {Edge(1, 3), 2}});
  CHECK(chi(g, g.edges()) == 2);
  const std::vector<Edge> single{Edge(1, 2)};
  CHECK(chi(g, single) == 1);
  CHECK(chi(g, {}) == 0);
  const std::vector<Edge> bogus{Edge(1, 4)};
  CHECK_THROWS_AS(chi(g, bogus), std::invalid_argument);
}

TEST_CASE("color restriction") {
  const ColoredGraph g =
      ColoredGraph::make(3, {{Edge(1, 2), 1}, {Edge(2, 3), 1}, {Edge(1, 3), 2}});
  const ColoredGraph path = subgraph_color_restrict(g, 1);
  CHECK(path.edges() == std::vector<Edge>{Edge(1, 2), Edge(2, 3)});
  const ColoredGraph closing = subgraph_color_restrict(g, 2);
  CHECK(closing.edges() == std::vector<Edge>{Edge(1, 3)});
  const ColoredGraph mono = k3({1, 1, 1});
  CHECK(subgraph_color_restrict(mono, 1).edges() == mono.edges());
  CHECK_THROWS_AS(subgraph_color_restrict(g, 3), std::invalid_argument);
}

TEST_CASE("text format round trip with comments") {
  const std::string text = "# a triangle\n3 2\n1 2 1\n2 3 1\n1 3 2\n";
  const ColoredGraph g = parse_colored_graph(text);
  CHECK(g.n() == 3);
  CHECK(g.k() == 2);
  CHECK(g.edge_count() == 3);
  CHECK(format_colored_graph(g) == "3 2\n1 2 1\n1 3 2\n2 3 1\n");
  CHECK(parse_colored_graph(format_colored_graph(g)) == g);
  CHECK(parse_colored_graph(colored_graph_json_line(g)) == g);
  CHECK_THROWS(parse_colored_graph("3 5\n1 2 1\n2 3 1\n1 3 2\n"));  // wrong declared k
}

TEST_CASE("graph6 known strings") {
  const Graph k4 = parse_graph6("C~");
  CHECK(k4.n == 4);
  CHECK(k4.edges.size() == 6);
  CHECK(write_graph6(k4) == "C~");

  const Graph k3 = parse_graph6("Bw");
  CHECK(k3.n == 3);
  CHECK(k3.edges.size() == 3);

  const Graph path3 = parse_graph6("Bg");
  CHECK(path3.n == 3);
  CHECK(path3.edges == std::vector<Edge>{Edge(1, 2), Edge(2, 3)});
  CHECK(write_graph6(path3) == "Bg");
}

TEST_CASE("graph6 round trips") {
  for (const char* s : {"C~", "Bw", "Bg", "D?{", "FwCW?", "G?qa`_"}) {
    const Graph g = parse_graph6(s);
    CHECK(write_graph6(g) == s);
  }
  CHECK(parse_graph6(">>graph6<<C~").n == 4);
  CHECK_THROWS(parse_graph6("C"));  // truncated bit section
}
