#include "anglerig/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "anglerig/canonical.hpp"
#include "anglerig/combinatorics.hpp"
#include "anglerig/matrix.hpp"
#include "anglerig/pebble.hpp"
#include "anglerig/realization.hpp"
#include "anglerig/rigidity.hpp"
#include "anglerig/rng.hpp"
#include "json.hpp"

namespace anglerig {

std::vector<Graph> generate_candidate_graphs(int n, int k) {
  if (n < 4 || n > 7)
    throw std::invalid_argument("built-in generation covers 4 <= n <= 7; ingest graph6 beyond");
  if (k < 2) throw std::invalid_argument("need k >= 2");
  const int target_edges = 2 * n - 4 + k;
  std::vector<Edge> all_pairs;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) all_pairs.emplace_back(u, v);
  const int pair_count = static_cast<int>(all_pairs.size());
  if (target_edges > pair_count) return {};

  std::unordered_set<std::string> seen;
  std::vector<Graph> out;
  std::vector<int> pick(target_edges);
  for (int i = 0; i < target_edges; ++i) pick[i] = i;
  for (;;) {
    Graph g;
    g.n = n;
    for (int i : pick) g.edges.push_back(all_pairs[i]);
    bool admissible = true;
    if (k == 2) {
      const std::vector<int> deg = g.degrees();
      for (int v = 1; v <= n && admissible; ++v)
        if (deg[v] < 2) admissible = false;
    }
    if (admissible && seen.insert(canonical_key(g)).second) out.push_back(std::move(g));

    // next combination
    int i = target_edges - 1;
    while (i >= 0 && pick[i] == pair_count - target_edges + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < target_edges; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(out.begin(), out.end(),
            [](const Graph& a, const Graph& b) { return write_graph6(a) < write_graph6(b); });
  return out;
}

namespace {

// Edge permutations induced by the automorphism group.
std::vector<std::vector<int>> edge_permutations(const Graph& g) {
  std::vector<std::vector<int>> perms;
  for (const std::vector<int>& sigma : automorphisms(g)) {
    std::vector<int> ep(g.edges.size());
    bool identity = true;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      const Edge image(sigma[g.edges[i].u], sigma[g.edges[i].v]);
      const auto it = std::lower_bound(g.edges.begin(), g.edges.end(), image);
      ep[i] = static_cast<int>(it - g.edges.begin());
      if (ep[i] != static_cast<int>(i)) identity = false;
    }
    if (!identity) perms.push_back(std::move(ep));
  }
  return perms;
}

// First-occurrence renormalization of a coloring sequence.
void to_rgs(std::vector<int>& c) {
  std::vector<int> seen_as(c.size() + 2, 0);
  int next = 0;
  for (int& v : c) {
    if (seen_as[v] == 0) seen_as[v] = ++next;
    v = seen_as[v];
  }
}

bool orbit_minimal(const std::vector<int>& c, const std::vector<std::vector<int>>& perms) {
  std::vector<int> image(c.size());
  for (const auto& ep : perms) {
    for (std::size_t i = 0; i < c.size(); ++i) image[i] = c[ep[i]];
    to_rgs(image);
    if (image < c) return false;
  }
  return true;
}

void rgs_recurse(std::vector<int>& c, std::size_t pos, int used, int k,
                 const std::vector<std::vector<int>>& perms,
                 const std::function<bool(const std::vector<int>&)>& visit, bool& keep_going) {
  if (!keep_going) return;
  const int m = static_cast<int>(c.size());
  if (pos == c.size()) {
    if (used == k && orbit_minimal(c, perms)) keep_going = visit(c);
    return;
  }
  const int remaining = m - static_cast<int>(pos);
  const int top = std::min(used + 1, k);
  for (int color = 1; color <= top && keep_going; ++color) {
    const int new_used = std::max(used, color);
    if (new_used + remaining - 1 < k) continue;  // cannot reach k colors any more
    c[pos] = color;
    rgs_recurse(c, pos + 1, new_used, k, perms, visit, keep_going);
  }
  c[pos] = 0;
}

} // namespace

void for_each_coloring_class(const Graph& g, int k,
                             const std::function<bool(const std::vector<int>&)>& visit) {
  const int m = static_cast<int>(g.edges.size());
  if (k < 1 || k > m) {
    if (!(k >= 1 && m == 0)) return;  // no surjective colorings
  }
  const std::vector<std::vector<int>> perms = edge_permutations(g);
  std::vector<int> c(m, 0);
  bool keep_going = true;
  rgs_recurse(c, 0, 0, k, perms, visit, keep_going);
}

std::vector<std::vector<int>> enumerate_colorings(const Graph& g, int k) {
  std::vector<std::vector<int>> out;
  for_each_coloring_class(g, k, [&](const std::vector<int>& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

namespace {

ColoredGraph colorize(const Graph& g, const std::vector<int>& rgs) {
  std::vector<std::pair<Edge, int>> ce;
  ce.reserve(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) ce.emplace_back(g.edges[i], rgs[i]);
  return ColoredGraph::make(g.n, std::move(ce));
}

// Exact-rank verdict with seed/bound escalation; rigidity is certified by a
// full-rank sample, flexibility is probabilistic.
bool class_is_rigid(const ColoredGraph& g, std::uint64_t seed, long long bound, int attempts) {
  const int target = 2 * g.n() + g.k() - 4;
  if (g.edge_count() != target) return false;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const long long b = bound << std::min(attempt, 16);
    const Realization p = random_realization(g.n(), derive_seed(seed, attempt), b);
    if (exact_rank(angle_rigidity_matrix(g, p)) == target) return true;
  }
  return false;
}

struct GraphTask {
  const Graph* graph;
  std::uint64_t seed;
  long long bound;
  int k;
  bool count_all;
};

GraphRecord process_graph(const GraphTask& task) {
  const Graph& g = *task.graph;
  GraphRecord rec;
  rec.g6 = write_graph6(g);
  rec.seed = task.seed;

  // A rigid coloring forces E minus a transversal to be an R2 basis, so a
  // skeleton that does not span with rank 2n-3 admits none.
  const bool skeleton_ok = r2_rank(g.n, g.edges) == 2 * g.n - 3;

  std::optional<std::set<int>> circuit_idx;  // k = 2 cross-check data
  if (task.k == 2 && skeleton_ok) {
    const auto cert = unique_circuit(colorize(g, std::vector<int>(g.edges.size(), 1)), task.seed);
    if (cert) {
      circuit_idx.emplace();
      ColoredGraph mono = colorize(g, std::vector<int>(g.edges.size(), 1));
      for (const Edge& e : cert->circuit) circuit_idx->insert(mono.edge_index(e));
    }
  }

  long long class_index = 0;
  for_each_coloring_class(g, task.k, [&](const std::vector<int>& rgs) {
    ++rec.colorings;
    const std::uint64_t class_seed = derive_seed(task.seed, fnv1a64(rec.g6), class_index);
    ++class_index;
    bool rigid = false;
    if (skeleton_ok) {
      const ColoredGraph colored = colorize(g, rgs);
      rigid = class_is_rigid(colored, class_seed, task.bound, 3);
      if (task.k == 2) {
        bool predicted = false;
        if (circuit_idx) {
          bool has1 = false, has2 = false;
          for (int idx : *circuit_idx) (rgs[idx] == 1 ? has1 : has2) = true;
          predicted = has1 && has2;
        }
        if (predicted && !rigid)  // false negative from a bad sample: escalate
          rigid = class_is_rigid(colored, derive_seed(class_seed, 0xebcL), task.bound * 4, 6);
        if (predicted != rigid)
          throw std::logic_error("matrix verdict disagrees with the 2-color circuit predicate on " +
                                 rec.g6);
      }
    }
    if (rigid) ++rec.rigid;
    return task.count_all || rec.rigid == 0;
  });
  return rec;
}

std::map<std::string, GraphRecord> load_records(const std::string& path) {
  std::map<std::string, GraphRecord> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      GraphRecord rec = record_from_json(line);
      if (rec.status == "done") out[rec.g6] = std::move(rec);
    } catch (const std::exception&) {
      // a partially written trailing line from an interrupted run
    }
  }
  return out;
}

std::vector<Graph> candidates_for(const EnumerationJob& job) {
  if (!job.graphs_path.empty()) {
    std::vector<Graph> graphs = read_graph6_file(job.graphs_path);
    std::vector<Graph> filtered;
    for (Graph& g : graphs) {
      if (static_cast<int>(g.edges.size()) != 2 * g.n - 4 + job.k) continue;
      filtered.push_back(std::move(g));
    }
    return filtered;
  }
  return generate_candidate_graphs(job.n, job.k);
}

} // namespace

EnumSummary count_k_color_rigid(const EnumerationJob& job) {
  const std::vector<Graph> graphs = candidates_for(job);
  const std::map<std::string, GraphRecord> resumed =
      job.resume_path.empty() ? std::map<std::string, GraphRecord>{} : load_records(job.resume_path);

  std::vector<GraphRecord> records(graphs.size());
  std::mutex sink_mutex;
  std::ofstream sink;
  if (!job.out_path.empty()) {
    sink.open(job.out_path, std::ios::app);
    if (!sink) throw std::runtime_error("cannot open record sink " + job.out_path);
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) return;
      try {
        const std::string g6 = write_graph6(graphs[i]);
        const auto it = resumed.find(g6);
        if (it != resumed.end()) {
          records[i] = it->second;
        } else {
          records[i] = process_graph(
              GraphTask{&graphs[i], derive_seed(job.seed, fnv1a64(g6)), job.bound, job.k,
                        job.count_all});
        }
        if (sink.is_open()) {
          const std::lock_guard<std::mutex> lock(sink_mutex);
          sink << record_to_json(records[i]) << '\n';
          sink.flush();
        }
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  const int thread_count = std::max(1, job.jobs);
  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  if (sink.is_open()) {  // rewrite in candidate order so the file is deterministic
    sink.close();
    std::ofstream fresh(job.out_path, std::ios::trunc);
    for (const GraphRecord& rec : records) fresh << record_to_json(rec) << '\n';
  }

  EnumSummary summary;
  summary.n = job.n;
  summary.k = job.k;
  summary.graphs = static_cast<long long>(graphs.size());
  bool any = false;
  for (const GraphRecord& rec : records) {
    if (rec.rigid > 0) {
      ++summary.k_color_rigid;
      summary.rigid_total += rec.rigid;
      if (!any || rec.rigid < summary.min_maps) summary.min_maps = rec.rigid;
      if (!any || rec.rigid > summary.max_maps) summary.max_maps = rec.rigid;
      any = true;
    }
  }
  summary.records = std::move(records);
  return summary;
}

std::pair<long long, long long> per_graph_coloring_stats(int n, std::uint64_t seed,
                                                         long long bound) {
  EnumerationJob job;
  job.n = n;
  job.k = 2;
  job.seed = seed;
  job.bound = bound;
  const EnumSummary s = count_k_color_rigid(job);
  return {s.min_maps, s.max_maps};
}

std::vector<Discrepancy> conjecture_scan(const EnumerationJob& job, bool inject_fault) {
  const std::vector<Graph> graphs = candidates_for(job);
  std::vector<Discrepancy> out;
  bool fault_pending = inject_fault;
  for (const Graph& g : graphs) {
    const std::string g6 = write_graph6(g);
    const std::uint64_t graph_seed = derive_seed(job.seed, fnv1a64(g6));
    long long class_index = 0;
    for_each_coloring_class(g, job.k, [&](const std::vector<int>& rgs) {
      const ColoredGraph colored = colorize(g, rgs);
      bool transversal = transversal_condition_per_color(colored).ok;
      if (fault_pending) {
        transversal = !transversal;
        fault_pending = false;
      }
      const std::uint64_t class_seed = derive_seed(graph_seed, 0x5caf, class_index);
      ++class_index;
      bool rigid = class_is_rigid(colored, class_seed, job.bound, 3);
      if (transversal && !rigid)  // escalate before reporting a candidate counterexample
        rigid = class_is_rigid(colored, derive_seed(class_seed, 0xe5c), job.bound * 8, 6);
      if (transversal != rigid)
        out.push_back(Discrepancy{g6, rgs,
                                  transversal ? "transversal-holds-but-not-rigid"
                                              : "rigid-but-transversal-fails"});
      return true;
    });
  }
  return out;
}

std::string summary_csv_header() {
  return "n,k,graphs,k_color_rigid,rigid_colored_total,min_maps,max_maps";
}

std::string summary_csv_row(const EnumSummary& s) {
  std::ostringstream out;
  out << s.n << ',' << s.k << ',' << s.graphs << ',' << s.k_color_rigid << ',' << s.rigid_total
      << ',' << s.min_maps << ',' << s.max_maps;
  return out.str();
}

std::string record_to_json(const GraphRecord& r) {
  nlohmann::ordered_json j;
  j["g6"] = r.g6;
  j["colorings"] = r.colorings;
  j["rigid"] = r.rigid;
  j["seed"] = r.seed;
  j["status"] = r.status;
  return j.dump();
}

GraphRecord record_from_json(const std::string& line) {
  const nlohmann::json j = nlohmann::json::parse(line);
  GraphRecord r;
  r.g6 = j.at("g6").get<std::string>();
  r.colorings = j.at("colorings").get<long long>();
  r.rigid = j.at("rigid").get<long long>();
  r.seed = j.value("seed", 0ULL);
  r.status = j.value("status", "done");
  return r;
}

} // namespace anglerig
