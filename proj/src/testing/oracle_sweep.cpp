#include "rcm/testing/oracle_sweep.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "rcm/errors.hpp"
#include "rcm/graph_io.hpp"
#include "rcm/harness.hpp"
#include "rcm/minor.hpp"
#include "rcm/testing/naive_oracle.hpp"

namespace rcm::testing {

std::vector<Graph> load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw DomainError("corpus directory " + dir + " does not exist");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".g6") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw DomainError("corpus directory " + dir + " has no .g6 files");
  std::vector<Graph> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    for (Graph& g : read_graph6_stream(in)) out.push_back(std::move(g));
  }
  return out;
}

namespace {

struct Tally {
  std::size_t pairs = 0;
  std::size_t yes = 0;
  std::size_t disagree = 0;
  Json examples = Json::array();
};

Tally sweep_graph(const Graph& g, std::size_t k) {
  Tally t;
  if (g.order() < k) return t;
  for_each_subset(g.vertices().to_vector(), k, [&](const VertexSet& x) {
    std::vector<VertexId> roots = x.to_vector();
    do {
      RootSequence seq{roots};
      ++t.pairs;
      auto fast = find_rooted_cycle_minor(g, seq);
      auto slow = naive_rooted_cycle_minor(g, seq);
      bool ok = fast.has_value() == slow.has_value();
      if (fast) ok = ok && naive_model_valid(g, seq, *fast) && verify_model(g, seq, *fast);
      if (fast) ++t.yes;
      if (!ok) {
        ++t.disagree;
        if (t.examples.size() < 5)
          t.examples.push_back(Json{{"graph6", to_graph6(g)}, {"roots", to_json(seq)}});
      }
    } while (std::next_permutation(roots.begin(), roots.end()));
    return true;
  });
  return t;
}

}  // namespace

SweepReport oracle_sweep(const std::vector<Graph>& corpus, const std::vector<std::size_t>& ks,
                         std::size_t workers) {
  SweepReport report;
  for (std::size_t k : ks) {
    if (k < 2 || k > kMaxRoots) throw DomainError("sweep k must be in 2..8");
    auto tallies = parallel_map(corpus.size(), workers,
                                [&](std::size_t i) { return sweep_graph(corpus[i], k); });
    Tally total;
    for (const Tally& t : tallies) {
      total.pairs += t.pairs;
      total.yes += t.yes;
      total.disagree += t.disagree;
      for (const auto& e : t.examples)
        if (total.examples.size() < 5) total.examples.push_back(e);
    }
    report.pairs += total.pairs;
    report.disagreements += total.disagree;
    report.records.push_back(Json{{"kind", "sweep"},
                                  {"k", k},
                                  {"graphs", corpus.size()},
                                  {"pairs", total.pairs},
                                  {"with_model", total.yes},
                                  {"agree", total.pairs - total.disagree},
                                  {"disagree", total.disagree},
                                  {"examples", total.examples}});
  }
  return report;
}

}  // namespace rcm::testing
