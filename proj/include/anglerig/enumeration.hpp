#ifndef ANGLERIG_ENUMERATION_HPP
#define ANGLERIG_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "anglerig/graph.hpp"

namespace anglerig {

// Candidate graphs with |E| = 2n-4+k up to isomorphism, built by exhaustive
// edge-mask enumeration with canonical-form rejection. For k = 2 the
// minimum-degree-2 restriction applies. Built-in generation supports
// 4 <= n <= 7; larger orders are ingested from graph6 files.
std::vector<Graph> generate_candidate_graphs(int n, int k = 2);

// Visits every surjective k-coloring of the edges up to graph automorphism
// and color permutation, as restricted-growth strings over the sorted edge
// list. Stop early by returning false from the visitor.
void for_each_coloring_class(const Graph& g, int k,
                             const std::function<bool(const std::vector<int>&)>& visit);

// Convenience: materialized coloring classes.
std::vector<std::vector<int>> enumerate_colorings(const Graph& g, int k);

struct EnumerationJob {
  int n = 4;
  int k = 2;
  std::uint64_t seed = 20240324;
  int jobs = 1;
  long long bound = 1'000'000;
  std::string graphs_path;   // optional graph6 source
  std::string out_path;      // optional NDJSON record sink
  std::string resume_path;   // optional NDJSON with previous records
  bool count_all = true;     // false: stop a graph at its first rigid coloring
};

struct GraphRecord {
  std::string g6;
  long long colorings = 0;  // coloring classes examined
  long long rigid = 0;      // classes that are minimally angle-rigid
  std::uint64_t seed = 0;
  std::string status = "done";
};

struct EnumSummary {
  int n = 0;
  int k = 0;
  long long graphs = 0;
  long long k_color_rigid = 0;
  long long rigid_total = 0;
  long long min_maps = 0;  // over graphs with at least one rigid coloring
  long long max_maps = 0;
  std::vector<GraphRecord> records;
};

EnumSummary count_k_color_rigid(const EnumerationJob& job);

// (min, max) rigid 2-coloring counts over the k-color-rigid candidates.
std::pair<long long, long long> per_graph_coloring_stats(int n, std::uint64_t seed,
                                                         long long bound = 1'000'000);

struct Discrepancy {
  std::string g6;
  std::vector<int> coloring;   // RGS over the sorted edge list
  std::string type;
};

// Compares the per-color transversal property against the matrix verdict
// on every enumerated colored graph; survivors of seed/bound escalation are
// reported. inject_fault flips one transversal verdict (test hook).
std::vector<Discrepancy> conjecture_scan(const EnumerationJob& job, bool inject_fault = false);

std::string summary_csv_header();
std::string summary_csv_row(const EnumSummary& s);
std::string record_to_json(const GraphRecord& r);
GraphRecord record_from_json(const std::string& line);

} // namespace anglerig

#endif
