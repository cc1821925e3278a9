#include "rcm/harness.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "rcm/connectivity.hpp"
#include "rcm/errors.hpp"
#include "rcm/graph_io.hpp"
#include "rcm/minor.hpp"

namespace rcm {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("Rng::below needs a positive bound");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t r = engine_();
  while (r >= limit) r = engine_();
  return r % bound;
}

std::size_t Rng::between(std::size_t lo, std::size_t hi) {
  if (hi < lo) throw DomainError("Rng::between with an empty range");
  return lo + static_cast<std::size_t>(below(hi - lo + 1));
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

bool is_k_connected(const Graph& g, std::size_t c) {
  if (g.order() <= c) return false;
  for (VertexId v : g.vertices())
    if (g.degree(v) < c) return false;
  for (VertexId u : g.vertices())
    for (VertexId v : g.vertices())
      if (u < v && !g.adjacent(u, v) && local_connectivity(g, u, v, c) < c) return false;
  return true;
}

Graph sample_connected_graph(std::size_t n, std::size_t c, Rng& rng, std::size_t max_attempts) {
  if (c >= n)
    throw DomainError("a " + std::to_string(c) + "-connected graph needs more than " +
                      std::to_string(c) + " vertices, got n = " + std::to_string(n));
  const double base = static_cast<double>(c) / static_cast<double>(n - 1);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    const double p = base + rng.unit() * (1.0 - base);
    Graph g(n);
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (rng.chance(p)) g.add_edge(u, v);
    for (VertexId u = 0; u < n; ++u) {
      while (g.degree(u) < c) {
        std::vector<VertexId> options = (g.vertices() - g.neighbors(u) - VertexSet{u}).to_vector();
        g.add_edge(u, options[rng.below(options.size())]);
      }
    }
    if (is_k_connected(g, c)) return g;
  }
  throw ResourceError("no " + std::to_string(c) + "-connected graph on " + std::to_string(n) +
                      " vertices after " + std::to_string(max_attempts) + " attempts");
}

std::size_t workers_from_env() {
  const char* env = std::getenv("RCM_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  unsigned long w = std::strtoul(env, &end, 10);
  if (*end != '\0' || w == 0) throw DomainError("RCM_WORKERS must be a positive integer");
  return static_cast<std::size_t>(w);
}

namespace {

struct GraphOutcome {
  Json record;
  std::size_t checks = 0;
  std::size_t falsifiers = 0;
};

std::vector<VertexSet> pick_subsets(const Graph& g, const TheoremConfig& config, Rng& rng) {
  std::vector<VertexId> ids = g.vertices().to_vector();
  std::vector<VertexSet> out;
  if (!config.subsets) {
    for_each_subset(ids, config.k, [&](const VertexSet& s) {
      out.push_back(s);
      return true;
    });
    return out;
  }
  std::set<VertexSet> seen;
  std::size_t available = 1;
  for (std::size_t i = 0; i < config.k; ++i) available = available * (ids.size() - i) / (i + 1);
  const std::size_t want = std::min(*config.subsets, available);
  while (out.size() < want) {
    rng.shuffle(ids);
    VertexSet s = VertexSet::of(std::vector<VertexId>(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(config.k)));
    if (seen.insert(s).second) out.push_back(s);
  }
  return out;
}

GraphOutcome check_graph(const TheoremConfig& config, std::size_t index) {
  Rng rng(derive_seed(config.seed, index));
  const std::size_t n = rng.between(config.n_min, config.n_max);
  Graph g = sample_connected_graph(n, config.connectivity, rng);

  GraphOutcome out;
  Json subsets = Json::array();
  Json failures = Json::array();
  for (const VertexSet& x : pick_subsets(g, config, rng)) {
    subsets.push_back(to_json(x));
    for (const RootSequence& order : canonical_cyclic_orders(x)) {
      ++out.checks;
      auto m = find_rooted_cycle_minor(g, order);
      if (m && verify_model(g, order, *m)) continue;
      ++out.falsifiers;
      failures.push_back(to_json(order));
    }
  }
  out.record = Json{{"kind", "graph"},  {"index", index},       {"n", n},
                    {"edges", g.size()}, {"graph6", to_graph6(g)}, {"subsets", subsets},
                    {"checks", out.checks}, {"failures", failures}};

  if (out.falsifiers > 0 && !config.archive_dir.empty()) {
    std::filesystem::create_directories(config.archive_dir);
    std::string stem = config.archive_dir + "/falsifier-" + std::to_string(index);
    std::ofstream(stem + ".g6") << to_graph6(g) << '\n';
    std::ofstream(stem + ".json") << Json{{"graph6", to_graph6(g)}, {"orders", failures}}.dump(2)
                                  << '\n';
  }
  return out;
}

}  // namespace

TheoremReport verify_theorem(const TheoremConfig& config) {
  if (config.connectivity == 0) throw DomainError("connectivity must be at least 1");
  if (config.n_min > config.n_max) throw DomainError("empty n range");
  if (config.k < 2 || config.k > config.n_min)
    throw DomainError("root count must be between 2 and the smallest n");
  if (config.connectivity >= config.n_min)
    throw DomainError("cannot reach connectivity " + std::to_string(config.connectivity) +
                      " with " + std::to_string(config.n_min) + " vertices");

  auto outcomes = parallel_map(config.graphs, config.workers,
                               [&](std::size_t i) { return check_graph(config, i); });
  TheoremReport report;
  for (auto& o : outcomes) {
    report.records.push_back(std::move(o.record));
    report.checks += o.checks;
    report.falsifiers += o.falsifiers;
  }
  report.records.push_back(Json{
      {"kind", "summary"},
      {"connectivity", config.connectivity},
      {"n_range", Json::array({config.n_min, config.n_max})},
      {"graphs", config.graphs},
      {"k", config.k},
      {"subsets", config.subsets ? Json(*config.subsets) : Json("all")},
      {"seed", config.seed},
      {"checks", report.checks},
      {"falsifiers", report.falsifiers}});
  return report;
}

}  // namespace rcm
