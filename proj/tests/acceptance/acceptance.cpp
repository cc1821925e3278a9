// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria, so ctest fails if any line does.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../support/brute_force.hpp"
#include "../support/builders.hpp"
#include "rcm/connectivity.hpp"
#include "rcm/extremal.hpp"
#include "rcm/graph_io.hpp"
#include "rcm/harness.hpp"
#include "rcm/reducer.hpp"
#include "rcm/testing/naive_oracle.hpp"
#include "rcm/testing/oracle_sweep.hpp"

using namespace rcm;

namespace {

// Budgets and tolerances. Agreement and failure counts are exact.
constexpr double kOracleBudgetSeconds = 600;
constexpr double kTheoremBudgetSeconds = 1800;
constexpr std::size_t kTheoremChecks = 3600;
constexpr std::size_t kRandomOracleInstances = 1000;
constexpr std::size_t kMassedInstances = 500;
constexpr std::size_t kMengerInstances = 500;
constexpr std::size_t kMengerExhaustiveMaxN = 9;
constexpr std::size_t kReducerInstances = 200;
constexpr std::uint64_t kSeed = 20261016;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << " s";
  return o.str();
}

RootSequence reversed(const RootSequence& s) {
  RootSequence r{{s[0]}};
  for (std::size_t i = s.size() - 1; i > 0; --i) r.roots.push_back(s[i]);
  return r;
}

Verdict oracle_equivalence() {
  auto start = std::chrono::steady_clock::now();
  auto corpus = testing::load_corpus(RCM_CORPUS_DIR);
  auto sweep = testing::oracle_sweep(corpus, {3, 4}, workers_from_env());

  Rng rng(derive_seed(kSeed, 1));
  std::size_t disagreements = 0, yes = 0;
  for (std::size_t i = 0; i < kRandomOracleInstances; ++i) {
    Graph g = test::random_graph(rng, rng.between(7, 9), 0.3 + 0.6 * rng.unit());
    RootSequence s{test::random_roots(rng, g, 5)};
    auto fast = find_rooted_cycle_minor(g, s);
    auto slow = testing::naive_rooted_cycle_minor(g, s);
    if (fast.has_value() != slow.has_value()) ++disagreements;
    if (fast) {
      ++yes;
      if (!testing::naive_model_valid(g, s, *fast)) ++disagreements;
    }
  }
  double t = seconds_since(start);
  bool pass = corpus.size() == 143 && sweep.disagreements == 0 && disagreements == 0 &&
              t <= kOracleBudgetSeconds;
  return {pass, std::to_string(corpus.size()) + " corpus graphs, " + std::to_string(sweep.pairs) +
                    " pairs k=3,4, " + std::to_string(sweep.disagreements) + " disagreements; " +
                    std::to_string(kRandomOracleInstances) + " random k=5 (" + std::to_string(yes) +
                    " yes), " + std::to_string(disagreements) + " disagreements; " + fmt_seconds(t)};
}

// The canonical orders fix the direction; the reflection of each is checked
// too, so every directed cyclic order of a 5-set is covered.
Verdict theorem_replication() {
  auto start = std::chrono::steady_clock::now();
  TheoremConfig cfg;
  cfg.connectivity = 10;
  cfg.n_min = 12;
  cfg.n_max = 16;
  cfg.graphs = 50;
  cfg.subsets = 3;
  cfg.k = 5;
  cfg.seed = kSeed;
  cfg.workers = workers_from_env();
  cfg.archive_dir = RCM_ARCHIVE_DIR;
  auto report = verify_theorem(cfg);

  std::size_t checks = report.checks, failures = report.falsifiers;
  for (const Json& rec : report.records) {
    if (rec["kind"] != "graph") continue;
    Graph g = parse_graph6(rec["graph6"].get<std::string>());
    for (const Json& subset : rec["subsets"]) {
      VertexSet x;
      for (const Json& v : subset) x.insert(v.get<VertexId>());
      for (const RootSequence& order : canonical_cyclic_orders(x)) {
        ++checks;
        RootSequence back = reversed(order);
        auto m = find_rooted_cycle_minor(g, back);
        if (!m || !verify_model(g, back, *m)) ++failures;
      }
    }
  }
  double t = seconds_since(start);
  bool pass = checks == kTheoremChecks && failures == 0 && t <= kTheoremBudgetSeconds;
  return {pass, "50 10-connected graphs, n 12..16, " + std::to_string(checks) + " checks, " +
                    std::to_string(failures) + " failures; " + fmt_seconds(t)};
}

Verdict rst_replication() {
  auto start = std::chrono::steady_clock::now();
  TheoremConfig cfg;
  cfg.connectivity = 6;
  cfg.n_min = 8;
  cfg.n_max = 12;
  cfg.graphs = 50;
  cfg.subsets = std::nullopt;
  cfg.k = 4;
  cfg.seed = kSeed;
  cfg.workers = workers_from_env();
  cfg.archive_dir = RCM_ARCHIVE_DIR;
  auto report = verify_theorem(cfg);
  std::size_t min_subsets = SIZE_MAX;
  for (const Json& rec : report.records)
    if (rec["kind"] == "graph") min_subsets = std::min(min_subsets, rec["subsets"].size());
  bool pass = report.falsifiers == 0 && min_subsets >= 5;
  return {pass, "50 6-connected graphs, n 8..12, every 4-subset (at least " +
                    std::to_string(min_subsets) + " per graph), " + std::to_string(report.checks) +
                    " checks, " + std::to_string(report.falsifiers) + " failures; " +
                    fmt_seconds(seconds_since(start))};
}

Verdict extremal_family() {
  const std::vector<std::vector<ComponentSpec>> specs{{}, {{1, 3}}, {{1, 3}, {2, 4}}};
  std::string detail;
  bool pass = true;
  for (const auto& spec : specs) {
    ExtremalInstance e = generate(spec);
    VertexSet x = e.roots.as_set();
    VertexSet rest = e.graph.vertices() - x;
    bool density = rho(e.graph, rest) == 5 * rest.size() + 1;
    bool massed = is_massed(e.graph, x, Rational(5)).massed();
    auto cert = recognize(e.graph, x);
    bool certified = cert && check_certificate(e.graph, x, *cert);
    bool no_model = !find_rooted_cycle_minor(e.graph, e.roots).has_value();
    pass = pass && density && massed && certified && no_model;
    detail += (detail.empty() ? "" : "; ") + std::string("n=") + std::to_string(e.graph.order()) +
              " rho=" + std::to_string(rho(e.graph, rest)) + (density ? "" : " BAD-DENSITY") +
              (massed ? "" : " NOT-MASSED") + (certified ? "" : " NO-CERT") +
              (no_model ? "" : " HAS-MODEL");
  }
  return {pass, detail};
}

Verdict massed_equivalence() {
  Rng rng(derive_seed(kSeed, 5));
  std::size_t agree = 0, m1 = 0, m2_fail = 0;
  for (std::size_t i = 0; i < kMassedInstances; ++i) {
    Graph g = test::random_graph(rng, rng.between(2, 10), rng.unit());
    std::size_t k = rng.between(1, std::min<std::size_t>(5, g.order()));
    VertexSet x = VertexSet::of(test::random_roots(rng, g, k));
    Rational lambda(static_cast<std::int64_t>(rng.between(1, 10)), static_cast<std::int64_t>(rng.between(1, 3)));
    auto fast = is_massed(g, x, lambda);
    auto slow = test::brute_massed(g, x, lambda);
    bool violator_ok = true;
    if (fast.m2_violator) {
      const Separation& v = *fast.m2_violator;
      violator_ok = is_separation(g, x, v) && v.order() < x.size() &&
                    Rational(static_cast<std::int64_t>(rho(g, v.b_only()))) >
                        lambda * static_cast<std::int64_t>(v.b_only().size());
    }
    if (fast.m1_holds == slow.m1 && fast.m2_holds == slow.m2 && violator_ok) ++agree;
    m1 += fast.m1_holds;
    m2_fail += !fast.m2_holds;
  }
  return {agree == kMassedInstances,
          std::to_string(agree) + "/" + std::to_string(kMassedInstances) + " agree (" +
              std::to_string(m1) + " with M1, " + std::to_string(m2_fail) + " with an M2 violator)"};
}

Verdict menger_duality() {
  Rng rng(derive_seed(kSeed, 6));
  std::size_t ok = 0, path_results = 0, exhaustive = 0;
  for (std::size_t i = 0; i < kMengerInstances; ++i) {
    std::size_t n = rng.between(2, 12);
    Graph g = test::random_graph(rng, n, rng.unit());
    std::vector<VertexId> ids = g.vertices().to_vector();
    rng.shuffle(ids);
    VertexSet src = VertexSet::of(std::vector<VertexId>(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(rng.between(1, n))));
    rng.shuffle(ids);
    VertexSet snk = VertexSet::of(std::vector<VertexId>(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(rng.between(1, n))));
    std::size_t k = rng.between(1, n);
    auto r = menger(g, src, snk, k);
    bool good = false;
    std::size_t achieved = 0;
    if (auto* ps = std::get_if<PathSystem>(&r)) {
      ++path_results;
      good = ps->paths.size() == k && is_valid_path_system(g, src, snk, *ps);
      achieved = k;
    } else {
      const Separation& sep = std::get<Separation>(r);
      good = sep.order() < k && is_separation(g, src, sep) && snk.is_subset_of(sep.b);
      achieved = sep.order();
    }
    if (good && n <= kMengerExhaustiveMaxN) {
      ++exhaustive;
      std::size_t best = test::brute_min_cut(g, src, snk);
      good = std::holds_alternative<PathSystem>(r) ? best >= k : best == achieved;
    }
    ok += good;
  }
  return {ok == kMengerInstances,
          std::to_string(ok) + "/" + std::to_string(kMengerInstances) + " cross-verified (" +
              std::to_string(path_results) + " path systems, " + std::to_string(exhaustive) +
              " checked against exhaustive cuts)"};
}

Verdict reducer_soundness() {
  Rng rng(derive_seed(kSeed, 7));
  std::size_t ok = 0, yes = 0, lifts = 0, from_rules = 0;
  std::string first_problem;
  for (std::size_t i = 0; i < kReducerInstances; ++i) {
    auto inst = test::random_massed_instance(rng, 7, 12, rng.between(2, 5));
    try {
      SolveResult r = solve(inst.graph, inst.roots);
      auto exact = find_rooted_cycle_minor(inst.graph, inst.roots);
      bool sound = false;
      if (r.outcome == Outcome::model)
        sound = r.model && verify_model(inst.graph, inst.roots, *r.model) &&
                testing::naive_model_valid(inst.graph, inst.roots, *r.model);
      else if (r.outcome == Outcome::extremal)
        sound = r.certificate && check_certificate(inst.graph, inst.roots.as_set(), *r.certificate);
      bool agrees = (r.outcome == Outcome::model) == exact.has_value();
      for (const ReductionStep& s : r.trace.steps) lifts += s.lifted;
      if (r.model && r.trace.steps.back().kind != StepKind::fallback_search) ++from_rules;
      yes += r.outcome == Outcome::model;
      if (sound && agrees) ++ok;
      else if (first_problem.empty()) first_problem = "instance " + std::to_string(i) + " " + to_string(r.outcome);
    } catch (const InternalError& e) {
      if (first_problem.empty()) first_problem = e.what();
    }
  }
  return {ok == kReducerInstances,
          std::to_string(ok) + "/" + std::to_string(kReducerInstances) + " sound and agreeing (" +
              std::to_string(yes) + " yes, " + std::to_string(from_rules) + " found by the rules, " +
              std::to_string(lifts) + " lifts re-verified)" +
              (first_problem.empty() ? "" : "; first problem: " + first_problem)};
}

std::string capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return "<popen failed>";
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  int status = pclose(p);
  return out + "\n<status " + std::to_string(status) + ">";
}

Verdict determinism() {
  const std::string bin = RCM_BIN;
  const std::string fx = RCM_FIXTURES_DIR;
  const std::vector<std::string> commands{
      "check --order 1,2,3,4,5 " + fx + "/c5.txt",
      "cycle-linked --roots 0,1,2,3,4 " + fx + "/e1.g6",
      "massed --lambda 5 --roots 0,1,2,3,4 " + fx + "/e1.g6",
      "solve --roots 0,1,2,3,4 " + fx + "/e1.g6",
      "gen-extremal --spec 1:3,2:4",
      "verify-theorem --connectivity 6 --n-range 8:10 --graphs 8 --subsets 3 --k 4 --seed 99",
      "oracle-sweep --corpus " + std::string(RCM_CORPUS_DIR) + " --k 3",
  };
  std::size_t same = 0;
  std::string differing;
  for (const std::string& c : commands) {
    std::string full = bin + " " + c + " 2>/dev/null";
    std::string a = capture(full), b = capture("RCM_WORKERS=2 " + full);
    if (a == b && a.size() > 20) ++same;
    else differing += " [" + c + "]";
  }
  return {same == commands.size(), std::to_string(same) + "/" + std::to_string(commands.size()) +
                                       " commands byte-identical across two runs" + differing};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"oracle equivalence", oracle_equivalence},
      {"10-connected C5 replication", theorem_replication},
      {"6-connected C4 replication", rst_replication},
      {"extremal family", extremal_family},
      {"massed checker equivalence", massed_equivalence},
      {"menger duality", menger_duality},
      {"reducer soundness", reducer_soundness},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": "
              << v.detail << std::endl;
  }
  return failed;
}
