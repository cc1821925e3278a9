#include "rcm/reducer.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <string_view>

namespace rcm {

namespace {

constexpr std::int64_t kLambda = 5;
constexpr std::size_t kMaxSplitOrder = 5;
constexpr std::size_t kLowDegree = 10;

// ---------------------------------------------------------------------------
// Dense-neighbourhood constructions.
//
// A pattern lists one cell per cyclic position; cell i holds x'_i plus the
// tokens named in it. "a" is the apex, "u1".."u4" are distinct vertices of
// U = V(H) - X' - a, and "U*" is every vertex of U not named elsewhere.

struct Pattern {
  std::string_view name;
  std::vector<std::vector<std::string_view>> cells;
};

const std::vector<Pattern>& patterns_for(std::size_t t) {
  static const std::vector<Pattern> two = {{"apex-path", {{"a"}, {}}}};
  static const std::vector<Pattern> four = {
      {"hub", {{}, {"u1"}, {}, {"a"}}},
      {"connected-rest", {{}, {"a"}, {}, {"U*"}}},
  };
  static const std::vector<Pattern> five = {
      {"adjacent-pair", {{}, {"a"}, {}, {}, {"u1"}}},
      {"two-hubs", {{}, {"u1"}, {"u2"}, {}, {"a"}}},
      {"split-hubs", {{"u1"}, {"u2"}, {}, {"a"}, {}}},
      {"split-hubs-rest", {{"u1"}, {"u2"}, {}, {"a"}, {"U*"}}},
      {"three-hubs", {{"u1"}, {"u2"}, {}, {"u3"}, {"a"}}},
      {"three-hubs-gap", {{"u1"}, {}, {"u2"}, {"u3"}, {"a"}}},
      {"four-hubs", {{"a"}, {}, {"u1"}, {"u2"}, {"u3", "u4"}}},
      {"hub-and-rest", {{"a"}, {}, {"u1"}, {"U*"}, {}}},
      {"hub-opposite-rest", {{"u1"}, {}, {"a"}, {}, {"U*"}}},
      {"spread-hubs", {{"u1"}, {"u2"}, {}, {"a"}, {"u3"}}},
      {"chain-hubs", {{}, {"u1"}, {"u2"}, {"u3"}, {"a"}}},
  };
  static const std::vector<Pattern> none;
  switch (t) {
    case 2:
      return two;
    case 4:
      return four;
    case 5:
      return five;
    default:
      return none;
  }
}

std::size_t named_count(const Pattern& p) {
  std::size_t n = 0;
  for (const auto& cell : p.cells)
    for (std::string_view tok : cell)
      if (tok.size() == 2 && tok[0] == 'u') n = std::max<std::size_t>(n, static_cast<std::size_t>(tok[1] - '0'));
  return n;
}

std::optional<MinorModel> try_pattern(const DenseNeighborhood& dn, const RootSequence& xp,
                                      const std::vector<VertexId>& u, const Pattern& p) {
  const std::size_t t = xp.size();
  const std::size_t named = named_count(p);
  if (named > u.size()) return std::nullopt;

  // Injections of u1..u_named into U, in lexicographic order.
  std::vector<std::size_t> pick(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) pick[i] = i;
  std::vector<std::vector<VertexId>> choices;
  do {
    std::vector<VertexId> c;
    for (std::size_t i = 0; i < named; ++i) c.push_back(u[pick[i]]);
    if (choices.empty() || choices.back() != c) choices.push_back(std::move(c));
  } while (std::next_permutation(pick.begin(), pick.end()));

  for (std::size_t reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t rot = 0; rot < t; ++rot) {
      for (const auto& chosen : choices) {
        VertexSet rest = VertexSet::of(u);
        for (VertexId v : chosen) rest.erase(v);
        MinorModel m;
        m.branch_sets.resize(t);
        for (std::size_t j = 0; j < t; ++j) {
          std::size_t pos = reflect ? (rot + t - j) % t : (rot + j) % t;
          VertexSet& cell = m.branch_sets[pos];
          cell.insert(xp[pos]);
          for (std::string_view tok : p.cells[j]) {
            if (tok == "a") {
              cell.insert(dn.apex);
            } else if (tok == "U*") {
              cell |= rest;
            } else {
              cell.insert(chosen[static_cast<std::size_t>(tok[1] - '1')]);
            }
          }
        }
        if (verify_model(dn.h, xp, m)) return m;
      }
    }
  }
  return std::nullopt;
}

std::vector<VertexId> shortest_path(const Graph& g, VertexId from, VertexId to,
                                    const VertexSet& allowed) {
  std::vector<VertexId> parent(g.id_bound(), from);
  VertexSet seen{from};
  std::queue<VertexId> q;
  q.push(from);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    if (v == to) break;
    for (VertexId w : g.neighbors(v) & allowed) {
      if (seen.contains(w)) continue;
      seen.insert(w);
      parent[w] = v;
      q.push(w);
    }
  }
  if (!seen.contains(to)) return {};
  std::vector<VertexId> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// t = 3: an x'_i-x'_j path avoiding a and x'_k, with {x'_k, a} closing the cycle.
std::optional<MinorModel> path_plus_apex(const DenseNeighborhood& dn, const RootSequence& xp) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::size_t k = 3 - i - j;
      VertexSet allowed = dn.h.vertices() - VertexSet{dn.apex, xp[k]};
      auto path = shortest_path(dn.h, xp[i], xp[j], allowed);
      if (path.empty()) continue;
      MinorModel m;
      m.branch_sets.resize(3);
      m.branch_sets[i] = VertexSet::of(path);
      m.branch_sets[i].erase(xp[j]);
      m.branch_sets[j] = VertexSet{xp[j]};
      m.branch_sets[k] = VertexSet{xp[k], dn.apex};
      if (verify_model(dn.h, xp, m)) return m;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::size_t edges_inside(const Graph& g, const VertexSet& s) {
  std::size_t n = 0;
  for (VertexId v : s) n += (g.neighbors(v) & s).size();
  return n / 2;
}

class Reducer {
 public:
  Reducer(const RootSequence& seq, const SolveOptions& options, ReductionTrace& trace)
      : seq_(seq), x_(seq.as_set()), options_(options), trace_(trace) {}

  std::optional<MinorModel> reduce(const Graph& g, std::size_t depth) {
    if (auto sep = find_split(g)) {
      ReductionStep step;
      step.kind = StepKind::separation_split;
      step.depth = depth;
      step.separation = sep;
      std::size_t at = record(step);
      Graph child = complete_on(induced(g, sep->a), sep->separator());
      return lift_from(g, reduce(child, depth + 1), at);
    }
    if (auto edge = find_sparse_edge(g)) {
      ReductionStep step;
      step.kind = StepKind::contraction;
      step.depth = depth;
      step.u = edge->first;
      step.v = edge->second;
      std::size_t at = record(step);
      return lift_from(g, reduce(contract(g, step.u, step.v), depth + 1), at);
    }
    observe_dense_entry(g, depth);
    if (auto m = dense_step(g, depth)) return m;

    ReductionStep leaf;
    leaf.kind = StepKind::leaf_search;
    leaf.depth = depth;
    leaf.instance_order = g.order();
    leaf.instance_size = g.size();
    auto m = find_rooted_cycle_minor(g, seq_);
    leaf.found = m.has_value();
    record(leaf);
    return m;
  }

 private:
  std::size_t record(const ReductionStep& step) {
    trace_.steps.push_back(step);
    if (options_.on_step) options_.on_step(step);
    return trace_.steps.size() - 1;
  }

  std::optional<MinorModel> lift_from(const Graph& g, std::optional<MinorModel> m, std::size_t at) {
    if (!m) return std::nullopt;
    MinorModel lifted = lift_model(g, seq_, *m, trace_.steps[at]);
    trace_.steps[at].lifted = true;
    return lifted;
  }

  // First separator S (by size, then lexicographically) not containing X whose
  // X-avoiding components D give a rigid separation (V - D, D u S) and whose
  // removal shrinks |V| + |E| after S is made complete.
  std::optional<Separation> find_split(const Graph& g) {
    const std::vector<VertexId> ids = g.vertices().to_vector();
    std::optional<Separation> found;
    const std::size_t top = std::min(kMaxSplitOrder, ids.empty() ? 0 : ids.size() - 1);
    for (std::size_t s = 1; s <= top && !found; ++s) {
      for_each_subset(ids, s, [&](const VertexSet& sep) {
        if (++separators_seen_ > options_.separator_budget)
          throw ResourceError("reducer: separator budget exhausted");
        VertexSet d;
        for (const VertexSet& comp : components_within(g, g.vertices() - sep))
          if (!comp.intersects(x_)) d |= comp;
        // With X inside S the rigidity test alone would decide the instance.
        if (d.empty() || x_.is_subset_of(sep)) return true;
        std::size_t missing = s * (s - 1) / 2 - edges_inside(g, sep);
        if (d.size() + rho(g, d) <= missing) return true;
        Separation candidate{g.vertices() - d, d | sep};
        if (!is_rigid(g, x_, candidate)) return true;
        found = candidate;
        return false;
      });
    }
    return found;
  }

  // First edge, ascending, not inside X, whose contraction loses few edges.
  // For a root endpoint r the pair is returned as (r, other) so r keeps its id.
  std::optional<Edge> find_sparse_edge(const Graph& g) const {
    for (auto [u, v] : g.edges()) {
      const bool ru = x_.contains(u), rv = x_.contains(v);
      if (ru && rv) continue;
      VertexSet common = g.neighbors(u) & g.neighbors(v);
      if (!ru && !rv) {
        if (common.size() < 5) return Edge{u, v};
        continue;
      }
      VertexId r = ru ? u : v;
      VertexId o = ru ? v : u;
      if ((common - x_).size() + (g.neighbors(o) & x_).size() < 6) return Edge{r, o};
    }
    return std::nullopt;
  }

  void observe_dense_entry(const Graph& g, std::size_t depth) {
    std::optional<VertexId> low;
    for (VertexId v : g.vertices() - x_)
      if (g.degree(v) < kLowDegree) {
        low = v;
        break;
      }
    trace_.observations.push_back(
        Observation{"low-degree-vertex", depth, low.has_value(),
                    low ? "vertex " + std::to_string(*low) + " has degree " +
                              std::to_string(g.degree(*low))
                        : "every non-root has degree >= 10"});
    auto k5 = find_clique(g, 5);
    std::string detail = "no K5";
    if (k5) {
      detail = "K5 on";
      for (VertexId v : *k5) detail += " " + std::to_string(v);
    }
    trace_.observations.push_back(Observation{"k5-free", depth, !k5.has_value(), detail});
  }

  std::optional<MinorModel> dense_step(const Graph& g, std::size_t depth) {
    for (VertexId a : g.vertices() - x_) {
      if (g.degree(a) >= kLowDegree || dense_neighborhood_violation(g, x_, a)) continue;
      DenseNeighborhood dn = make_dense_neighborhood(g, x_, a);
      auto routed = menger(g, x_, dn.h.vertices(), x_.size());
      auto* paths = std::get_if<PathSystem>(&routed);
      if (paths == nullptr) continue;

      RootSequence xp;
      std::vector<const std::vector<VertexId>*> path_of(seq_.size(), nullptr);
      for (const auto& p : paths->paths)
        for (std::size_t i = 0; i < seq_.size(); ++i)
          if (p.front() == seq_[i]) path_of[i] = &p;
      for (std::size_t i = 0; i < seq_.size(); ++i) {
        if (path_of[i] == nullptr) throw InternalError("root without a routed path");
        xp.roots.push_back(path_of[i]->back());
      }
      DenseResult dense = dense_construct(dn, xp);
      if (!dense.model) continue;

      MinorModel m = *dense.model;
      for (std::size_t i = 0; i < seq_.size(); ++i)
        for (VertexId v : *path_of[i]) m.branch_sets[i].insert(v);
      if (ModelCheck c = verify_model(g, seq_, m); !c)
        throw InternalError("dense construction composed an invalid model: " + c.diagnostic);

      ReductionStep step;
      step.kind = StepKind::dense_construction;
      step.depth = depth;
      step.apex = a;
      step.route = dense.route;
      step.found = true;
      step.instance_order = g.order();
      step.instance_size = g.size();
      record(step);
      return m;
    }
    return std::nullopt;
  }

  const RootSequence& seq_;
  VertexSet x_;
  const SolveOptions& options_;
  ReductionTrace& trace_;
  std::size_t separators_seen_ = 0;
};

// Largest total positive slack rho(C) - 5|C| over the X-avoiding components
// of G - S, maximized over all S of size 5.
std::int64_t order5_excess(const Graph& g, const VertexSet& x) {
  std::int64_t best = 0;
  for_each_subset(g.vertices().to_vector(), 5, [&](const VertexSet& sep) {
    std::int64_t total = 0;
    for (const VertexSet& comp : components_within(g, g.vertices() - sep)) {
      if (comp.intersects(x)) continue;
      auto slack = static_cast<std::int64_t>(rho(g, comp)) -
                   kLambda * static_cast<std::int64_t>(comp.size());
      if (slack > 0) total += slack;
    }
    best = std::max(best, total);
    return true;
  });
  return best;
}

}  // namespace

std::optional<std::string> dense_neighborhood_violation(const Graph& g, const VertexSet& x,
                                                        VertexId a) {
  g.require(x);
  g.require(a);
  if (x.contains(a)) return "apex is a root";
  VertexSet hv = g.neighbors(a);
  hv.insert(a);
  if (hv.size() < 7 || hv.size() > 10)
    return "|V(H)| = " + std::to_string(hv.size()) + " is outside 7..10";
  Graph h = induced(g, hv);
  if (find_clique(delete_vertices(h, VertexSet{a}), 4)) return "H - a contains a K4";
  const VertexSet roots = hv & x;
  for (VertexId v : hv - x)
    if (h.degree(v) < 6)
      return "non-root " + std::to_string(v) + " has degree " + std::to_string(h.degree(v)) +
             " < 6 in H";
  for (VertexId r : roots) {
    std::size_t outside = (h.neighbors(r) - x).size();
    if (outside < 2) return "root " + std::to_string(r) + " has fewer than 2 non-root neighbours in H";
    if (outside + roots.size() < 7)
      return "root " + std::to_string(r) + " has |N_H(x) \\ X| + |X n V(H)| < 7";
  }
  return std::nullopt;
}

DenseNeighborhood make_dense_neighborhood(const Graph& g, const VertexSet& x, VertexId a) {
  if (auto why = dense_neighborhood_violation(g, x, a)) throw PreconditionError(*why);
  VertexSet hv = g.neighbors(a);
  hv.insert(a);
  return DenseNeighborhood{a, induced(g, hv), hv & x};
}

DenseResult dense_construct(const DenseNeighborhood& dn, const RootSequence& xprime) {
  const std::size_t t = xprime.size();
  if (t < 2 || t > 5) throw PreconditionError("dense construction needs 2..5 roots");
  validate_roots(dn.h, xprime);
  const VertexSet xs = xprime.as_set();
  if (xs.contains(dn.apex)) throw PreconditionError("apex cannot be a root");
  if (!dn.roots_in_h.is_subset_of(xs))
    throw PreconditionError("every original root inside H must be among the new roots");

  const std::vector<VertexId> u = (dn.h.vertices() - xs - VertexSet{dn.apex}).to_vector();
  if (t == 3) {
    if (auto m = path_plus_apex(dn, xprime)) return {m, "path-plus-apex"};
  }
  for (const Pattern& p : patterns_for(t))
    if (auto m = try_pattern(dn, xprime, u, p)) return {m, std::string(p.name)};
  auto m = find_rooted_cycle_minor(dn.h, xprime);
  return {m, "exact-search"};
}

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::separation_split:
      return "separation-split";
    case StepKind::contraction:
      return "contraction";
    case StepKind::dense_construction:
      return "dense-construction";
    case StepKind::leaf_search:
      return "leaf-search";
    case StepKind::fallback_search:
      return "fallback-search";
  }
  return "unknown";
}

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::model:
      return "model";
    case Outcome::extremal:
      return "extremal";
    case Outcome::falsifier:
      return "falsifier";
  }
  return "unknown";
}

Graph replay(const Graph& g, const ReductionTrace& trace) {
  Graph cur = g;
  for (const ReductionStep& step : trace.steps) {
    if (step.kind == StepKind::separation_split) {
      cur = complete_on(induced(cur, step.separation->a), step.separation->separator());
    } else if (step.kind == StepKind::contraction) {
      cur = contract(cur, step.u, step.v);
    }
  }
  return cur;
}

MinorModel lift_model(const Graph& before, const RootSequence& seq, const MinorModel& m,
                      const ReductionStep& step) {
  MinorModel out = m;
  if (step.kind == StepKind::contraction) {
    for (VertexSet& s : out.branch_sets)
      if (s.contains(step.u)) s.insert(step.v);
  } else if (step.kind == StepKind::separation_split) {
    const Separation& sep = *step.separation;
    const std::size_t k = seq.size();
    std::vector<std::pair<std::size_t, VertexId>> owned;
    for (VertexId s : sep.separator()) {
      std::size_t owner = k;
      for (std::size_t i = 0; i < k; ++i)
        if (m.branch_sets[i].contains(s)) owner = i;
      owned.emplace_back(owner, s);
    }
    std::sort(owned.begin(), owned.end());
    // Virtual edges can only join two separator vertices that are both in use.
    auto in_use = std::count_if(owned.begin(), owned.end(), [&](const auto& o) { return o.first < k; });
    if (in_use >= 2) {
      RootSequence order;
      for (auto [owner, s] : owned) order.roots.push_back(s);
      auto linkage = find_rooted_cycle_minor(induced(before, sep.b), order);
      if (!linkage)
        throw InternalError("separation side has no C" + std::to_string(order.size()) +
                            "-minor for the order the lift needs");
      std::size_t target = k;
      for (std::size_t j = 0; j < owned.size(); ++j) {
        if (owned[j].first < k) target = owned[j].first;
        out.branch_sets[target] |= linkage->branch_sets[j];
      }
    }
  }
  if (ModelCheck c = verify_model(before, seq, out); !c)
    throw InternalError("lifted model fails verification after " + to_string(step.kind) + ": " +
                        c.diagnostic);
  return out;
}

SolveResult solve(const Graph& g, const RootSequence& seq, const SolveOptions& options) {
  validate_roots(g, seq);
  if (seq.size() > 5) throw DomainError("solve supports at most 5 roots");
  const VertexSet x = seq.as_set();

  SolveResult result;
  result.massed = is_massed(g, x, Rational(kLambda), options.separator_budget);
  if (!result.massed.massed()) throw NotMassedError(result.massed);

  Reducer reducer(seq, options, result.trace);
  auto model = reducer.reduce(g, 0);
  if (!model) {
    ReductionStep step;
    step.kind = StepKind::fallback_search;
    step.on_input = true;
    step.instance_order = g.order();
    step.instance_size = g.size();
    model = find_rooted_cycle_minor(g, seq);
    step.found = model.has_value();
    result.trace.steps.push_back(step);
    if (options.on_step) options.on_step(step);
  }

  if (model) {
    if (ModelCheck c = verify_model(g, seq, *model); !c)
      throw InternalError("solve produced an invalid model: " + c.diagnostic);
    result.outcome = Outcome::model;
    result.model = std::move(model);
  } else if (seq.size() == 5) {
    result.certificate = recognize(g, x);
    result.outcome = result.certificate ? Outcome::extremal : Outcome::falsifier;
  }

  if (seq.size() == 5) {
    VertexSet common = g.vertices() - x;
    for (VertexId r : x) common &= g.neighbors(r);
    bool holds = common.size() <= 1 || result.outcome != Outcome::falsifier;
    result.trace.observations.push_back(Observation{
        "common-neighbours", 0, holds,
        std::to_string(common.size()) + " vertices adjacent to every root"});
    if (result.outcome == Outcome::falsifier) {
      std::int64_t excess = order5_excess(g, x);
      result.trace.observations.push_back(Observation{
          "order-5-separation-density", 0, excess <= 1,
          "largest rho(B\\A) - 5|B\\A| over order-5 separations is " + std::to_string(excess)});
    }
  }
  return result;
}

}  // namespace rcm
