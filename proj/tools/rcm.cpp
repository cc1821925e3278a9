// rcm: command-line front end. Results go to stdout as JSON (one record per
// line); diagnostics go to stderr. Exit status: 0 yes/success, 1 no, 2 bad
// input or unmet precondition, 3 falsifier, 4 internal verification failure.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "rcm/connectivity.hpp"
#include "rcm/errors.hpp"
#include "rcm/extremal.hpp"
#include "rcm/graph_io.hpp"
#include "rcm/harness.hpp"
#include "rcm/minor.hpp"
#include "rcm/reducer.hpp"
#include "rcm/serialize.hpp"
#include "rcm/testing/oracle_sweep.hpp"

namespace {

using rcm::Json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kInputError = 2;
constexpr int kFalsifier = 3;

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw rcm::DomainError("bad " + what + " '" + text + "'");
  return static_cast<std::size_t>(v);
}

rcm::RootSequence parse_roots(const std::string& text) {
  rcm::RootSequence seq;
  for (const std::string& part : split(text, ','))
    seq.roots.push_back(static_cast<rcm::VertexId>(parse_count(part, "vertex id")));
  return seq;
}

std::vector<rcm::ComponentSpec> parse_spec(const std::string& text) {
  std::vector<rcm::ComponentSpec> spec;
  if (text.empty()) return spec;
  for (const std::string& part : split(text, ',')) {
    auto fields = split(part, ':');
    if (fields.size() > 2) throw rcm::DomainError("bad component spec '" + part + "'");
    rcm::ComponentSpec c;
    c.attachment = static_cast<int>(parse_count(fields[0], "attachment index"));
    if (fields.size() == 2) c.size = parse_count(fields[1], "component size");
    spec.push_back(c);
  }
  return spec;
}

int cmd_check(const std::string& file, const std::string& order) {
  rcm::Graph g = rcm::load_graph(file);
  rcm::RootSequence seq = parse_roots(order);
  auto m = rcm::find_rooted_cycle_minor(g, seq);
  if (!m) {
    emit(Json{{"verdict", "no-model"}, {"roots", rcm::to_json(seq)}});
    return kNo;
  }
  emit(rcm::to_json(seq, *m));
  return kYes;
}

int cmd_cycle_linked(const std::string& file, const std::string& roots) {
  rcm::Graph g = rcm::load_graph(file);
  rcm::VertexSet x = parse_roots(roots).as_set();
  auto report = rcm::is_cycle_linked(g, x);
  emit(rcm::to_json(report));
  return report.linked ? kYes : kNo;
}

int cmd_massed(const std::string& file, const std::string& lambda, const std::string& roots) {
  rcm::Graph g = rcm::load_graph(file);
  auto report = rcm::is_massed(g, parse_roots(roots).as_set(), rcm::Rational::parse(lambda));
  emit(rcm::to_json(report));
  return report.massed() ? kYes : kNo;
}

int cmd_solve(const std::string& file, const std::string& roots, bool explain) {
  rcm::Graph g = rcm::load_graph(file);
  rcm::RootSequence seq = parse_roots(roots);
  rcm::SolveOptions options;
  if (explain)
    options.on_step = [](const rcm::ReductionStep& s) { std::cerr << rcm::to_json(s).dump() << '\n'; };
  try {
    auto result = rcm::solve(g, seq, options);
    emit(rcm::to_json(seq, result));
    switch (result.outcome) {
      case rcm::Outcome::model:
        return kYes;
      case rcm::Outcome::extremal:
        return kNo;
      case rcm::Outcome::falsifier:
        return kFalsifier;
    }
  } catch (const rcm::NotMassedError& e) {
    emit(Json{{"error", e.what()}, {"massed", rcm::to_json(e.report())}});
    return kInputError;
  }
  return kInputError;
}

int cmd_gen_extremal(const std::string& spec_text, const std::string& out) {
  auto spec = parse_spec(spec_text);
  rcm::ExtremalInstance inst = rcm::generate(spec);
  Json spec_json = Json::array();
  for (const auto& c : spec) spec_json.push_back(Json::array({c.attachment, c.size}));
  Json orders = Json::array();
  for (const auto& o : inst.orders_with_model) orders.push_back(rcm::to_json(o));
  rcm::VertexSet rest = inst.graph.vertices() - inst.roots.as_set();
  Json sidecar{{"spec", spec_json},
               {"graph6", rcm::to_graph6(inst.graph)},
               {"n", inst.graph.order()},
               {"edges", inst.graph.size()},
               {"roots", rcm::to_json(inst.roots)},
               {"apex_pair", Json::array({inst.apex_a, inst.apex_b})},
               {"rho_outside_roots", rcm::rho(inst.graph, rest)},
               {"certificate", rcm::to_json(inst.certificate)},
               {"orders_with_model", orders}};
  if (!out.empty()) {
    std::ofstream(out) << rcm::to_graph6(inst.graph) << '\n';
    std::ofstream(out + ".json") << sidecar.dump(2) << '\n';
  }
  emit(sidecar);
  return kYes;
}

int cmd_verify_theorem(rcm::TheoremConfig config, const std::string& n_range,
                       const std::string& subsets) {
  auto bounds = split(n_range, ':');
  if (bounds.size() != 2) throw rcm::DomainError("--n-range must look like LO:HI");
  config.n_min = parse_count(bounds[0], "n");
  config.n_max = parse_count(bounds[1], "n");
  config.subsets = subsets == "all" ? std::nullopt
                                    : std::optional<std::size_t>(parse_count(subsets, "subset count"));
  config.workers = rcm::workers_from_env();
  auto start = std::chrono::steady_clock::now();
  auto report = rcm::verify_theorem(config);
  for (const Json& r : report.records) emit(r);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  std::cerr << "verify-theorem: " << report.checks << " checks, " << report.falsifiers
            << " falsifiers, " << ms.count() << " ms\n";
  return report.falsifiers == 0 ? kYes : kNo;
}

int cmd_oracle_sweep(const std::string& corpus, const std::string& ks_text) {
  std::vector<std::size_t> ks;
  for (const std::string& k : split(ks_text, ',')) ks.push_back(parse_count(k, "k"));
  auto graphs = rcm::testing::load_corpus(corpus);
  auto report = rcm::testing::oracle_sweep(graphs, ks, rcm::workers_from_env());
  for (const Json& r : report.records) emit(r);
  return report.disagreements == 0 ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rooted cycle minors: exact search, certificates and experiments"};
  app.require_subcommand(1);

  std::string file, order, roots, lambda = "5", spec, out, n_range = "12:16", subsets = "3", corpus,
                                  ks = "3,4";
  bool explain = false;
  rcm::TheoremConfig theorem;

  auto* check = app.add_subcommand("check", "Decide whether the ordered roots have a cycle minor");
  check->add_option("--order", order, "Comma-separated roots x1,...,xk")->required();
  check->add_option("file", file, "Graph file (graph6 or edge list)")->required();

  auto* linked = app.add_subcommand("cycle-linked", "Test every cyclic order of a root set");
  linked->add_option("--roots", roots, "Comma-separated roots")->required();
  linked->add_option("file", file, "Graph file")->required();

  auto* massed = app.add_subcommand("massed", "Check the lambda-massed density conditions");
  massed->add_option("--lambda", lambda, "Rational N or N/D")->capture_default_str();
  massed->add_option("--roots", roots, "Comma-separated roots")->required();
  massed->add_option("file", file, "Graph file")->required();

  auto* solve = app.add_subcommand("solve", "Reduce and solve a 5-massed instance");
  solve->add_option("--roots", roots, "Comma-separated roots, in cyclic order")->required();
  solve->add_flag("--explain", explain, "Stream each reduction step to stderr");
  solve->add_option("file", file, "Graph file")->required();

  auto* gen = app.add_subcommand("gen-extremal", "Generate an extremal obstruction instance");
  gen->add_option("--spec", spec, "Components as i:n pairs, e.g. 1:3,2:3 (empty for the core)");
  gen->add_option("-o,--output", out, "graph6 output path; a .json sidecar is written next to it");

  auto* verify = app.add_subcommand("verify-theorem", "Check cycle minors on sampled c-connected graphs");
  verify->add_option("--connectivity", theorem.connectivity)->capture_default_str();
  verify->add_option("--n-range", n_range, "LO:HI")->capture_default_str();
  verify->add_option("--graphs", theorem.graphs)->capture_default_str();
  verify->add_option("--subsets", subsets, "Root sets per graph, or 'all'")->capture_default_str();
  verify->add_option("--k", theorem.k, "Roots per set")->capture_default_str();
  verify->add_option("--seed", theorem.seed)->capture_default_str();
  verify->add_option("--archive", theorem.archive_dir, "Directory for falsifier artifacts");

  auto* sweep = app.add_subcommand("oracle-sweep", "Compare the engine with the naive oracle on a corpus");
  sweep->add_option("--corpus", corpus, "Directory of .g6 files")->required();
  sweep->add_option("--k", ks, "Comma-separated root counts")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*check) return cmd_check(file, order);
    if (*linked) return cmd_cycle_linked(file, roots);
    if (*massed) return cmd_massed(file, lambda, roots);
    if (*solve) return cmd_solve(file, roots, explain);
    if (*gen) return cmd_gen_extremal(spec, out);
    if (*verify) return cmd_verify_theorem(theorem, n_range, subsets);
    if (*sweep) return cmd_oracle_sweep(corpus, ks);
  } catch (const rcm::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const rcm::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
