#include "rcm/minor.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "rcm/errors.hpp"

namespace rcm {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

// The roots' component, relabelled 0..n-1 in ascending id order.
struct CompactGraph {
  std::vector<VertexId> ids;
  std::vector<Mask> adj;
  Mask all = 0;

  int index_of(VertexId id) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    return static_cast<int>(it - ids.begin());
  }

  Mask neighbors(Mask s) const {
    Mask out = 0;
    for (; s != 0; s &= s - 1) out |= adj[static_cast<std::size_t>(std::countr_zero(s))];
    return out;
  }

  // Vertices reachable from `start` through `allowed` (start is always kept).
  Mask reach(Mask start, Mask allowed) const {
    Mask seen = start;
    Mask frontier = start;
    while (frontier != 0) {
      Mask next = neighbors(frontier) & allowed & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  bool connected(Mask s) const {
    if (s == 0) return false;
    return reach(s & (~s + 1), s) == s;
  }
};

CompactGraph compact(const Graph& g, const VertexSet& keep) {
  CompactGraph c;
  c.ids = keep.to_vector();
  if (c.ids.size() > kMaxSearchVertices)
    throw UnsupportedError("rooted minor search: component has " + std::to_string(c.ids.size()) +
                           " vertices, limit is " + std::to_string(kMaxSearchVertices));
  c.adj.assign(c.ids.size(), 0);
  for (std::size_t i = 0; i < c.ids.size(); ++i) {
    c.all |= bit(static_cast<int>(i));
    for (VertexId w : g.neighbors(c.ids[i]) & keep) c.adj[i] |= bit(c.index_of(w));
  }
  return c;
}

// Depth-first growth of branch sets. Each node either adds a free vertex to a
// branch set or forbids it for that set, so every model consistent with the
// current state survives in exactly one child. Only vertices that can still
// help close the first open adjacency demand are branched on.
class CycleSearch {
 public:
  CycleSearch(const CompactGraph& c, const std::vector<int>& roots)
      : c_(c), k_(static_cast<int>(roots.size())) {
    for (int i = 0; i < k_; ++i) {
      set_[i] = bit(roots[static_cast<std::size_t>(i)]);
      root_bits_[i] = set_[i];
      used_ |= set_[i];
    }
  }

  bool run() { return dfs(); }
  std::uint64_t nodes() const { return nodes_; }
  const std::array<Mask, kMaxRoots>& sets() const { return set_; }

  // Drops non-root vertices whose removal keeps every clause satisfied.
  void minimize() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < k_; ++i) {
        Mask candidates = set_[i] & ~root_bit(i);
        for (; candidates != 0; candidates &= candidates - 1) {
          Mask v = candidates & (~candidates + 1);
          Mask trial = set_[i] & ~v;
          if (!c_.connected(trial)) continue;
          Mask saved = set_[i];
          set_[i] = trial;
          if (all_demands_met()) {
            changed = true;
          } else {
            set_[i] = saved;
          }
        }
      }
    }
  }

 private:
  int demand_count() const { return k_ == 2 ? 1 : k_; }
  int next(int i) const { return (i + 1) % k_; }
  Mask root_bit(int i) const { return root_bits_[static_cast<std::size_t>(i)]; }

  bool demand_met(int i) const { return (c_.neighbors(set_[i]) & set_[next(i)]) != 0; }
  bool all_demands_met() const {
    for (int i = 0; i < demand_count(); ++i)
      if (!demand_met(i)) return false;
    return true;
  }

  bool dfs() {
    ++nodes_;
    Mask free = c_.all & ~used_;
    std::array<Mask, kMaxRoots> reach{};
    std::array<bool, kMaxRoots> have{};
    auto reach_of = [&](int i) {
      if (!have[i]) {
        reach[i] = c_.reach(set_[i], set_[i] | (free & ~forb_[i]));
        have[i] = true;
      }
      return reach[i];
    };

    int open = -1;
    for (int i = 0; i < demand_count(); ++i) {
      if (demand_met(i)) continue;
      Mask ri = reach_of(i);
      Mask rj = reach_of(next(i));
      if ((c_.neighbors(ri) & rj) == 0 && (ri & rj) == 0) return false;
      if (open < 0) open = i;
    }
    if (open < 0) return true;

    int i = open, j = next(open);
    if (int v = useful_candidate(i, c_.neighbors(reach_of(j)), free); v >= 0)
      return branch(i, v);
    if (int v = useful_candidate(j, c_.neighbors(set_[i]), free); v >= 0) return branch(j, v);
    return false;
  }

  // Smallest free neighbour of set `s` whose free region reaches `target`.
  int useful_candidate(int s, Mask target, Mask free) const {
    Mask region = free & ~forb_[s];
    Mask frontier = c_.neighbors(set_[s]) & region;
    Mask dead = 0;
    for (; frontier != 0; frontier &= frontier - 1) {
      Mask v = frontier & (~frontier + 1);
      if ((v & dead) != 0) continue;
      Mask comp = c_.reach(v, region);
      if ((comp & target) != 0) return std::countr_zero(v);
      dead |= comp;
    }
    return -1;
  }

  bool branch(int s, int v) {
    Mask b = bit(v);
    set_[s] |= b;
    used_ |= b;
    if (dfs()) return true;
    set_[s] &= ~b;
    used_ &= ~b;

    forb_[s] |= b;
    bool found = dfs();
    forb_[s] &= ~b;
    return found;
  }

  const CompactGraph& c_;
  int k_;
  std::array<Mask, kMaxRoots> set_{};
  std::array<Mask, kMaxRoots> forb_{};
  std::array<Mask, kMaxRoots> root_bits_{};
  Mask used_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

void validate_roots(const Graph& g, const RootSequence& seq) {
  if (seq.size() < 2) throw DomainError("need at least two roots");
  if (seq.size() > kMaxRoots)
    throw UnsupportedError("at most " + std::to_string(kMaxRoots) + " roots are supported");
  VertexSet seen;
  for (VertexId r : seq.roots) {
    g.require(r);
    if (seen.contains(r)) throw DomainError("root " + std::to_string(r) + " repeated");
    seen.insert(r);
  }
}

std::optional<MinorModel> find_rooted_cycle_minor(const Graph& g, const RootSequence& seq,
                                                  SearchStats* stats) {
  validate_roots(g, seq);
  VertexSet comp = reach_within(g, VertexSet{seq[0]}, g.vertices());
  if (!seq.as_set().is_subset_of(comp)) return std::nullopt;

  CompactGraph c = compact(g, comp);
  std::vector<int> roots;
  for (VertexId r : seq.roots) roots.push_back(c.index_of(r));
  CycleSearch search(c, roots);
  bool found = search.run();
  if (stats != nullptr) stats->nodes += search.nodes();
  if (!found) return std::nullopt;
  search.minimize();

  MinorModel m;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    VertexSet s;
    for (Mask bits = search.sets()[i]; bits != 0; bits &= bits - 1)
      s.insert(c.ids[static_cast<std::size_t>(std::countr_zero(bits))]);
    m.branch_sets.push_back(std::move(s));
  }
  return m;
}

ModelCheck verify_model(const Graph& g, const RootSequence& seq, const MinorModel& m) {
  auto fail = [](std::string why) { return ModelCheck{false, std::move(why)}; };
  const std::size_t k = seq.size();
  if (m.branch_sets.size() != k)
    return fail("expected " + std::to_string(k) + " branch sets, got " +
                std::to_string(m.branch_sets.size()));
  for (std::size_t i = 0; i < k; ++i) {
    const VertexSet& s = m.branch_sets[i];
    std::string name = "X" + std::to_string(i + 1);
    if (!g.has_vertex(seq[i])) return fail("root x" + std::to_string(i + 1) + " is not a vertex");
    if (!s.is_subset_of(g.vertices())) return fail(name + " contains a non-vertex");
    if (!s.contains(seq[i])) return fail(name + " does not contain its root");
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (m.branch_sets[i].intersects(m.branch_sets[j]))
        return fail("X" + std::to_string(i + 1) + " and X" + std::to_string(j + 1) + " overlap");
  for (std::size_t i = 0; i < k; ++i)
    if (!is_connected_set(g, m.branch_sets[i]))
      return fail("X" + std::to_string(i + 1) + " is not connected");
  if (k >= 2) {
    std::size_t demands = k == 2 ? 1 : k;
    for (std::size_t i = 0; i < demands; ++i) {
      std::size_t j = (i + 1) % k;
      if (edge_count_between(g, m.branch_sets[i], m.branch_sets[j]) == 0)
        return fail("no edge between X" + std::to_string(i + 1) + " and X" + std::to_string(j + 1));
    }
  }
  return {};
}

bool path_exists(const Graph& g, VertexId u, VertexId v) {
  g.require(u);
  g.require(v);
  return reach_within(g, VertexSet{u}, g.vertices()).contains(v);
}

std::vector<RootSequence> canonical_cyclic_orders(const VertexSet& x) {
  std::vector<VertexId> ids = x.to_vector();
  std::vector<RootSequence> out;
  if (ids.size() <= 2) {
    out.push_back(RootSequence{ids});
    return out;
  }
  std::vector<VertexId> rest(ids.begin() + 1, ids.end());
  do {
    if (rest.front() < rest.back()) {
      RootSequence seq{{ids.front()}};
      seq.roots.insert(seq.roots.end(), rest.begin(), rest.end());
      out.push_back(std::move(seq));
    }
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

RootSequence canonical_form(const RootSequence& seq) {
  const std::size_t k = seq.size();
  if (k <= 2) {
    RootSequence s = seq;
    std::sort(s.roots.begin(), s.roots.end());
    return s;
  }
  auto start = static_cast<std::size_t>(
      std::min_element(seq.roots.begin(), seq.roots.end()) - seq.roots.begin());
  RootSequence fwd, bwd;
  for (std::size_t t = 0; t < k; ++t) {
    fwd.roots.push_back(seq[(start + t) % k]);
    bwd.roots.push_back(seq[(start + k - t) % k]);
  }
  return fwd.roots[1] < fwd.roots.back() ? fwd : bwd;
}

CycleLinkReport is_cycle_linked(const Graph& g, const VertexSet& x) {
  g.require(x);
  if (x.empty()) throw DomainError("cycle-linkedness needs a nonempty root set");
  if (x.size() > kMaxRoots)
    throw UnsupportedError("at most " + std::to_string(kMaxRoots) + " roots are supported");
  CycleLinkReport report;
  if (x.size() == 1) {
    report.linked = true;
    report.witnesses.emplace_back(RootSequence{{x.front()}}, MinorModel{{x}});
    return report;
  }
  for (const RootSequence& order : canonical_cyclic_orders(x)) {
    auto model = find_rooted_cycle_minor(g, order);
    if (!model) {
      report.failing_order = order;
      report.linked = false;
      return report;
    }
    report.witnesses.emplace_back(order, std::move(*model));
  }
  report.linked = true;
  return report;
}

}  // namespace rcm
