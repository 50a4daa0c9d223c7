#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "anglerig/canonical.hpp"
#include "anglerig/combinatorics.hpp"
#include "anglerig/enumeration.hpp"
#include "anglerig/extensions.hpp"
#include "anglerig/pebble.hpp"
#include "anglerig/rigidity.hpp"

namespace py = pybind11;
using namespace anglerig;

namespace {

ColoredGraph graph_from_text(const std::string& text) {
  ColoredGraph g = parse_colored_graph(text);
  if (const auto violation = validate(g)) throw std::invalid_argument(*violation);
  return g;
}

std::vector<Edge> edges_from_pairs(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.emplace_back(u, v);
  return edges;
}

py::dict report_dict(const RigidityReport& rep) {
  py::dict d;
  d["rank"] = rep.rank;
  d["target_rank"] = rep.target_rank;
  d["edge_count"] = rep.edge_count;
  d["infinitesimally_angle_rigid"] = rep.infinitesimally_angle_rigid;
  d["independent"] = rep.independent;
  d["minimally_angle_rigid"] = rep.minimally_angle_rigid;
  d["kernel_dim"] = rep.kernel_dim;
  d["nontrivial_flex_dim"] = rep.nontrivial_flex_dim;
  d["stress_basis_size"] = rep.stress_basis.size();
  return d;
}

} // namespace

PYBIND11_MODULE(_anglerig, m) {
  m.doc() = "angle rigidity of edge-colored planar frameworks";

  m.def("validate", [](const std::string& text) {
    const ColoredGraph g = parse_colored_graph(text);
    const auto violation = validate(g);
    return violation ? *violation : std::string();
  }, py::arg("text"), "empty string when the colored graph is valid");

  m.def("canonical_form", [](const std::string& text) {
    return canonical_hex(graph_from_text(text));
  }, py::arg("text"), "hex canonical key, invariant under vertex and color permutation");

  m.def("check", [](const std::string& text, std::uint64_t seed, long long bound) {
    return report_dict(report_seeded(graph_from_text(text), seed, bound));
  }, py::arg("text"), py::arg("seed") = 20240324, py::arg("bound") = 1'000'000,
     "rigidity report at random integer realizations");

  m.def("r2_rank", [](int n, const std::vector<std::pair<int, int>>& pairs) {
    return r2_rank(n, edges_from_pairs(pairs));
  }, py::arg("n"), py::arg("edges"), "rank in the generic 2-d rigidity matroid");

  m.def("is_laman", [](int n, const std::vector<std::pair<int, int>>& pairs) {
    Graph g{n, edges_from_pairs(pairs)};
    std::sort(g.edges.begin(), g.edges.end());
    return is_laman(g);
  }, py::arg("n"), py::arg("edges"));

  m.def("two_color_rigid", [](const std::string& text) {
    return two_color_rigid_predicate(graph_from_text(text));
  }, py::arg("text"));

  m.def("maxwell_ok", [](const std::string& text) {
    return !maxwell_colored_check(graph_from_text(text)).has_value();
  }, py::arg("text"));

  m.def("construct_sequence_json", [](const std::string& text) {
    return sequence_to_json(construct_sequence(graph_from_text(text)));
  }, py::arg("text"), "construction from a bichromatic quadrilateral base, as JSON");

  m.def("k4_base_cases", [] {
    std::vector<std::string> out;
    for (const ColoredGraph& g : k4_base_cases()) out.push_back(format_colored_graph(g));
    return out;
  });

  m.def("count_k_color_rigid", [](int n, int k, std::uint64_t seed, int jobs) {
    EnumerationJob job;
    job.n = n;
    job.k = k;
    job.seed = seed;
    job.jobs = jobs;
    job.count_all = (k == 2);
    const EnumSummary s = count_k_color_rigid(job);
    py::dict d;
    d["graphs"] = s.graphs;
    d["k_color_rigid"] = s.k_color_rigid;
    d["rigid_colored_total"] = s.rigid_total;
    d["min_maps"] = s.min_maps;
    d["max_maps"] = s.max_maps;
    return d;
  }, py::arg("n"), py::arg("k") = 2, py::arg("seed") = 20240324, py::arg("jobs") = 1);
}
