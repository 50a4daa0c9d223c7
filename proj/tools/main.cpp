#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "anglerig/canonical.hpp"
#include "anglerig/combinatorics.hpp"
#include "anglerig/enumeration.hpp"
#include "anglerig/extensions.hpp"
#include "anglerig/rigidity.hpp"

using namespace anglerig;
using nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240324;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("ANGLERIG_SEED")) return std::strtoull(env, nullptr, 10);
  return kDefaultSeed;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ColoredGraph load_graph(const std::string& path) {
  if (path.size() > 3 && path.substr(path.size() - 3) == ".g6") {
    const std::vector<Graph> graphs = read_graph6_file(path);
    if (graphs.empty()) throw std::runtime_error("no graphs in " + path);
    return ColoredGraph::monochromatic(graphs[0].n, graphs[0].edges);
  }
  ColoredGraph g = read_colored_graph_file(path);
  if (const auto violation = validate(g)) throw std::runtime_error("invalid input: " + *violation);
  return g;
}

ordered_json edges_json(const std::vector<Edge>& edges) {
  ordered_json out = ordered_json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

ordered_json graph_json(const ColoredGraph& g) {
  ordered_json j;
  j["n"] = g.n();
  j["k"] = g.k();
  auto& edges = j["edges"] = ordered_json::array();
  for (int i = 0; i < g.edge_count(); ++i)
    edges.push_back({g.edges()[i].u, g.edges()[i].v, g.colors()[i]});
  j["canonical"] = canonical_hex(g);
  return j;
}

ordered_json conditions_json(const ColoredGraph& g) {
  ordered_json j;
  if (g.edge_count() > 20) {  // the subset check is exhaustive
    j["maxwell_ok"] = nullptr;
    j["maxwell_violation"] = nullptr;
    j["transversal_global"]["ok"] = nullptr;
    j["transversal_global"]["witness"] = nullptr;
    j["transversal_per_color"]["ok"] = nullptr;
    j["transversal_per_color"]["witnesses"] = nullptr;
    j["two_color"]["applicable"] = false;
    j["two_color"]["rigid"] = nullptr;
    j["two_color"]["circuit"] = nullptr;
    return j;
  }
  const auto maxwell = maxwell_colored_check(g);
  j["maxwell_ok"] = !maxwell.has_value();
  if (maxwell) {
    ordered_json v;
    v["edges"] = edges_json(maxwell->subgraph);
    v["vertices"] = maxwell->vertex_count;
    v["colors"] = maxwell->chi;
    j["maxwell_violation"] = v;
  } else {
    j["maxwell_violation"] = nullptr;
  }

  const auto global = transversal_condition_global(g);
  j["transversal_global"]["ok"] = global.has_value();
  j["transversal_global"]["witness"] = global ? edges_json(*global) : ordered_json(nullptr);

  const PerColorWitnesses per_color = transversal_condition_per_color(g);
  j["transversal_per_color"]["ok"] = per_color.ok;
  ordered_json witnesses;
  for (const auto& [color, witness] : per_color.witness)
    witnesses[std::to_string(color)] = witness ? edges_json(*witness) : ordered_json(nullptr);
  j["transversal_per_color"]["witnesses"] = witnesses;

  if (g.k() == 2) {
    j["two_color"]["applicable"] = true;
    j["two_color"]["rigid"] = two_color_rigid_predicate(g);
    const bool countable = g.edge_count() == 2 * g.n() - 2;
    const auto cert = countable ? unique_circuit(g) : std::nullopt;
    j["two_color"]["circuit"] = cert ? edges_json(cert->circuit) : ordered_json(nullptr);
  } else {
    j["two_color"]["applicable"] = false;
    j["two_color"]["rigid"] = nullptr;
    j["two_color"]["circuit"] = nullptr;
  }
  return j;
}

ordered_json report_json(const RigidityReport& rep) {
  ordered_json j;
  j["mode"] = rep.mode == FieldMode::exact ? "exact" : "float";
  if (rep.mode == FieldMode::floating) j["tol"] = rep.tol;
  if (rep.generic_probabilistic) {
    j["seed"] = rep.seed;
    j["attempts"] = rep.attempts;
  }
  j["rank"] = rep.rank;
  j["target_rank"] = rep.target_rank;
  j["edge_count"] = rep.edge_count;
  j["infinitesimally_angle_rigid"] = rep.infinitesimally_angle_rigid;
  j["independent"] = rep.independent;
  j["minimally_angle_rigid"] = rep.minimally_angle_rigid;
  j["kernel_dim"] = rep.kernel_dim;
  j["nontrivial_flex_dim"] = rep.nontrivial_flex_dim;
  j["generic_probabilistic"] = rep.generic_probabilistic;
  if (rep.mode == FieldMode::exact) {
    ordered_json stresses = ordered_json::array();
    for (const auto& omega : rep.stress_basis) {
      ordered_json row = ordered_json::array();
      for (const Rat& w : omega) row.push_back(rat_to_string(w));
      stresses.push_back(row);
    }
    j["stress_basis"] = stresses;
    ordered_json pts = ordered_json::array();
    for (int v = 1; v <= rep.realization.n(); ++v)
      pts.push_back({rat_to_string(rep.realization.x(v)), rat_to_string(rep.realization.y(v))});
    j["realization"] = pts;
  }
  return j;
}

void print_human_report(const ColoredGraph& g, const RigidityReport& rep, const ordered_json& cond) {
  std::cout << "graph: n=" << g.n() << " k=" << g.k() << " |E|=" << g.edge_count() << '\n';
  std::cout << "mode: " << (rep.mode == FieldMode::exact ? "exact" : "float");
  if (rep.generic_probabilistic)
    std::cout << "  seed=" << rep.seed << " attempts=" << rep.attempts;
  if (rep.mode == FieldMode::floating) std::cout << "  tol=" << rep.tol;
  std::cout << '\n';
  std::cout << "rank: " << rep.rank << " / target " << rep.target_rank << '\n';
  std::cout << "infinitesimally angle-rigid: " << (rep.infinitesimally_angle_rigid ? "yes" : "no")
            << '\n';
  std::cout << "independent: " << (rep.independent ? "yes" : "no") << '\n';
  std::cout << "minimally angle-rigid: " << (rep.minimally_angle_rigid ? "yes" : "no") << '\n';
  std::cout << "kernel dimension: " << rep.kernel_dim << " (nontrivial flexes: "
            << rep.nontrivial_flex_dim << ")\n";
  std::cout << "stress basis size: " << rep.stress_basis.size() << '\n';
  if (cond["maxwell_ok"].is_null()) {
    std::cout << "combinatorial conditions: skipped (graph too large)\n";
    return;
  }
  std::cout << "maxwell count: " << (cond["maxwell_ok"].get<bool>() ? "ok" : "violated") << '\n';
  std::cout << "transversal, single set: "
            << (cond["transversal_global"]["ok"].get<bool>() ? "holds" : "fails") << '\n';
  std::cout << "transversal, per color: "
            << (cond["transversal_per_color"]["ok"].get<bool>() ? "holds" : "fails") << '\n';
  if (cond["two_color"]["applicable"].get<bool>())
    std::cout << "two-color circuit test: "
              << (cond["two_color"]["rigid"].get<bool>() ? "rigid" : "not rigid") << '\n';
}

struct Range {
  int lo = 0, hi = -1;
};

Range parse_range(const std::string& text) {
  Range r;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    r.lo = r.hi = std::stoi(text);
  } else {
    r.lo = std::stoi(text.substr(0, dots));
    r.hi = std::stoi(text.substr(dots + 2));
  }
  return r;
}

int run_check(const std::string& path, const std::string& realization_path, bool float_mode,
              double tol, std::uint64_t seed, long long bound, int attempts, bool as_json) {
  const ColoredGraph g = load_graph(path);
  RigidityReport rep;
  if (float_mode) {
    if (realization_path.empty())
      throw std::runtime_error("float mode needs --realization (decimal coordinates)");
    rep = report_at(g, parse_float_realization(slurp(realization_path), g.n()), tol);
  } else if (!realization_path.empty()) {
    rep = report_at(g, parse_realization(slurp(realization_path), g.n()));
  } else {
    rep = report_seeded(g, seed, bound, attempts);
  }
  const ordered_json cond = conditions_json(g);
  if (as_json) {
    ordered_json j;
    j["input"] = graph_json(g);
    j["report"] = report_json(rep);
    j["conditions"] = cond;
    j["verdict"] = rep.minimally_angle_rigid
                       ? "minimally-angle-rigid"
                       : (rep.infinitesimally_angle_rigid ? "infinitesimally-angle-rigid"
                                                          : "not-infinitesimally-angle-rigid");
    std::cout << j.dump(2) << '\n';
  } else {
    print_human_report(g, rep, cond);
  }
  // the decision the exit code reports is minimal angle-rigidity
  return rep.minimally_angle_rigid ? 0 : 1;
}

int run_construct(const std::string& path, const std::string& replay_path,
                  const std::string& out_path) {
  if (!replay_path.empty()) {
    const ConstructionSequence seq = sequence_from_json(slurp(replay_path));
    const ColoredGraph g = replay(seq);
    const std::string text = format_colored_graph(g);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      out << text;
    }
    return 0;
  }
  const ColoredGraph g = load_graph(path);
  ConstructionSequence seq;
  try {
    seq = construct_sequence(g);
  } catch (const std::invalid_argument& err) {
    std::cerr << "not constructible: " << err.what() << '\n';
    return 1;
  }
  const std::string text = sequence_to_json(seq);
  if (out_path.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream out(out_path);
    out << text << '\n';
  }
  return 0;
}

int run_tables(const Range& nr, const Range& kr, int table, std::uint64_t seed, int jobs,
               long long bound, const std::string& out_path) {
  std::ostringstream out;
  std::vector<EnumSummary> summaries;
  for (int n = nr.lo; n <= nr.hi; ++n)
    for (int k = kr.lo; k <= kr.hi; ++k) {
      EnumerationJob job;
      job.n = n;
      job.k = k;
      job.seed = seed;
      job.jobs = jobs;
      job.bound = bound;
      job.count_all = (k == 2);
      summaries.push_back(count_k_color_rigid(job));
    }

  switch (table) {
    case 1:
      out << "n,graphs,2_color_rigid,2_colored_angle_rigid\n";
      for (const EnumSummary& s : summaries)
        if (s.k == 2)
          out << s.n << ',' << s.graphs << ',' << s.k_color_rigid << ',' << s.rigid_total << '\n';
      break;
    case 2:
      out << "n,min_2_color_maps,max_2_color_maps\n";
      for (const EnumSummary& s : summaries)
        if (s.k == 2) out << s.n << ',' << s.min_maps << ',' << s.max_maps << '\n';
      break;
    case 3:
      out << "n,k,k_color_rigid\n";
      for (const EnumSummary& s : summaries)
        out << s.n << ',' << s.k << ',' << s.k_color_rigid << '\n';
      break;
    default:
      out << summary_csv_header() << '\n';
      for (const EnumSummary& s : summaries) out << summary_csv_row(s) << '\n';
  }
  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(out_path);
    f << out.str();
  }
  return 0;
}

int run_enumerate(const EnumerationJob& job) {
  const EnumSummary s = count_k_color_rigid(job);
  if (job.out_path.empty())
    for (const GraphRecord& rec : s.records) std::cout << record_to_json(rec) << '\n';
  std::cout << summary_csv_header() << '\n' << summary_csv_row(s) << '\n';
  return 0;
}

int run_scan(const EnumerationJob& job, bool inject_fault, const std::string& out_path) {
  const std::vector<Discrepancy> found = conjecture_scan(job, inject_fault);
  std::ostringstream out;
  for (const Discrepancy& d : found) {
    ordered_json j;
    j["g6"] = d.g6;
    j["coloring"] = d.coloring;
    j["type"] = d.type;
    out << j.dump() << '\n';
  }
  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(out_path);
    f << out.str();
  }
  std::cerr << "scanned n=" << job.n << " k=" << job.k << ": " << found.size()
            << " discrepancies\n";
  return found.empty() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"angle-rigidity toolkit for edge-colored planar frameworks"};
  app.require_subcommand(1);

  std::string check_path, check_realization;
  bool check_float = false, check_json = false;
  double check_tol = 1e-9;
  std::uint64_t seed = default_seed();
  long long bound = 1'000'000;
  int attempts = 3;
  CLI::App* check = app.add_subcommand("check", "decide angle-rigidity of one colored graph");
  check->add_option("file", check_path, "colored-graph file (or .g6)")->required();
  check->add_option("--realization", check_realization, "realization file with 'v x y' lines");
  check->add_flag("--float", check_float, "floating-point mode (needs --realization)");
  check->add_option("--tol", check_tol, "relative pivot tolerance for float mode");
  check->add_option("--seed", seed, "seed for random realizations");
  check->add_option("--bound", bound, "coordinate bound for random realizations");
  check->add_option("--attempts", attempts, "number of random realizations to try");
  check->add_flag("--json", check_json, "machine-readable output");

  std::string construct_path, replay_path, construct_out;
  CLI::App* construct =
      app.add_subcommand("construct", "emit or replay an extension construction sequence");
  construct->add_option("file", construct_path, "2-colored graph file");
  construct->add_option("--replay", replay_path, "replay a sequence JSON file");
  construct->add_option("--out", construct_out, "output path");

  std::string tables_n = "4..6", tables_k = "2";
  int table_id = 0;
  int jobs = 1;
  std::string tables_out;
  CLI::App* tables = app.add_subcommand("tables", "reproduce the enumeration tables as CSV");
  tables->add_option("--n", tables_n, "vertex range, e.g. 4..6");
  tables->add_option("--k", tables_k, "color range, e.g. 2 or 2..4");
  tables->add_option("--table", table_id, "1, 2 or 3 for the published layouts");
  tables->add_option("--seed", seed, "master seed");
  tables->add_option("--jobs", jobs, "worker threads");
  tables->add_option("--bound", bound, "coordinate bound");
  tables->add_option("--out", tables_out, "write CSV here instead of stdout");

  EnumerationJob job;
  job.seed = default_seed();
  bool existence_only = false;
  CLI::App* enumerate = app.add_subcommand("enumerate", "per-graph rigid coloring records");
  enumerate->add_option("--n", job.n, "vertex count");
  enumerate->add_option("--k", job.k, "color count");
  enumerate->add_option("--seed", job.seed, "master seed");
  enumerate->add_option("--jobs", job.jobs, "worker threads");
  enumerate->add_option("--bound", job.bound, "coordinate bound");
  enumerate->add_option("--graphs", job.graphs_path, "graph6 file with candidate graphs");
  enumerate->add_option("--out", job.out_path, "NDJSON record sink");
  enumerate->add_option("--resume", job.resume_path, "NDJSON records from a previous run");
  enumerate->add_flag("--existence-only", existence_only,
                      "stop each graph at its first rigid coloring");

  bool inject_fault = false;
  std::string scan_out;
  CLI::App* scan = app.add_subcommand("scan", "compare transversal property against matrix verdicts");
  scan->add_option("--n", job.n, "vertex count");
  scan->add_option("--k", job.k, "color count");
  scan->add_option("--seed", job.seed, "master seed");
  scan->add_option("--bound", job.bound, "coordinate bound");
  scan->add_option("--graphs", job.graphs_path, "graph6 file with candidate graphs");
  scan->add_option("--out", scan_out, "NDJSON discrepancy sink");
  scan->add_flag("--inject-fault", inject_fault, "flip one verdict (self-test hook)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed())
      return run_check(check_path, check_realization, check_float, check_tol, seed, bound,
                       attempts, check_json);
    if (construct->parsed()) {
      if (construct_path.empty() && replay_path.empty())
        throw std::runtime_error("construct needs a graph file or --replay");
      return run_construct(construct_path, replay_path, construct_out);
    }
    if (tables->parsed())
      return run_tables(parse_range(tables_n), parse_range(tables_k), table_id, seed, jobs, bound,
                        tables_out);
    if (enumerate->parsed()) {
      job.count_all = !existence_only;
      return run_enumerate(job);
    }
    if (scan->parsed()) return run_scan(job, inject_fault, scan_out);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return 2;
}
