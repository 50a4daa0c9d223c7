#include "anglerig/angle_set.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace anglerig {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // false if already joined (i.e. joining closes a cycle)
  bool join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

int support_index(const AngleSet& a, const Edge& e) {
  const auto it = std::find(a.edges.begin(), a.edges.end(), e);
  if (it == a.edges.end())
    throw std::invalid_argument("angle references edge outside the support");
  return static_cast<int>(it - a.edges.begin());
}

} // namespace

std::vector<int> AngleSet::vertex_support() const {
  std::set<int> vs;
  for (const Edge& e : edges) {
    vs.insert(e.u);
    vs.insert(e.v);
  }
  return {vs.begin(), vs.end()};
}

AngleSet to_angle_set(const ColoredGraph& g) {
  AngleSet a;
  a.n = g.n();
  a.edges = g.edges();
  for (int color = 1; color <= g.k(); ++color) {
    const std::vector<Edge> cls = g.color_class(color);
    if (cls.empty()) throw std::invalid_argument("empty color class");
    const Edge center = cls.front();  // classes come out lex-sorted
    for (std::size_t i = 1; i < cls.size(); ++i) a.angles.push_back(Angle{cls[i], center});
  }
  return a;
}

bool g2_has_cycle(const AngleSet& a) {
  UnionFind uf(static_cast<int>(a.edges.size()));
  for (const Angle& angle : a.angles) {
    if (angle.first == angle.second) throw std::invalid_argument("angle must pair distinct edges");
    if (!uf.join(support_index(a, angle.first), support_index(a, angle.second))) return true;
  }
  return false;
}

ColoredGraph from_angle_set(const AngleSet& a) {
  if (g2_has_cycle(a)) throw std::invalid_argument("angle graph G2 has a cycle");
  UnionFind uf(static_cast<int>(a.edges.size()));
  for (const Angle& angle : a.angles)
    uf.join(support_index(a, angle.first), support_index(a, angle.second));

  // component roots -> colors, numbered by first edge occurrence
  std::map<int, int> color_of_root;
  std::vector<std::pair<Edge, int>> ce;
  for (std::size_t i = 0; i < a.edges.size(); ++i) {
    const int root = uf.find(static_cast<int>(i));
    auto [it, fresh] = color_of_root.emplace(root, static_cast<int>(color_of_root.size()) + 1);
    ce.emplace_back(a.edges[i], it->second);
    (void)fresh;
  }
  return ColoredGraph::make(a.n, std::move(ce));
}

} // namespace anglerig
