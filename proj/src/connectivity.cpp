#include "rcm/connectivity.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "rcm/errors.hpp"
#include "rcm/minor.hpp"

namespace rcm {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(const std::string& text) {
  auto to_int = [&](const std::string& part) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size()) throw DomainError("bad rational '" + text + "'");
    return static_cast<std::int64_t>(v);
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(to_int(text));
  Rational r(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
  return r;
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, std::int64_t k) { return Rational(a.num_ * k, a.den_); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool is_separation(const Graph& g, const VertexSet& x, const Separation& sep) {
  if ((sep.a | sep.b) != g.vertices()) return false;
  if (!x.is_subset_of(sep.a)) return false;
  VertexSet a_only = sep.a_only();
  VertexSet b_only = sep.b_only();
  for (VertexId v : a_only)
    if (g.neighbors(v).intersects(b_only)) return false;
  return true;
}

bool is_valid_path_system(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
                          const PathSystem& ps) {
  VertexSet used;
  for (const auto& path : ps.paths) {
    if (path.empty()) return false;
    if (!sources.contains(path.front()) || !sinks.contains(path.back())) return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
      VertexId v = path[i];
      if (!g.has_vertex(v) || used.contains(v)) return false;
      used.insert(v);
      if (i > 0 && !g.adjacent(path[i - 1], v)) return false;
      bool interior = i > 0 && i + 1 < path.size();
      if (interior && (sources.contains(v) || sinks.contains(v))) return false;
    }
  }
  return true;
}

namespace {

// Unit vertex capacities via in/out splitting; node 2i is in(i), 2i+1 is out(i).
class VertexFlow {
 public:
  VertexFlow(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
             const VertexSet& uncapped = {})
      : ids_(g.vertices().to_vector()), sources_(sources), sinks_(sinks) {
    const int n = static_cast<int>(ids_.size());
    inf_ = n + 2;
    source_ = 2 * n;
    sink_ = 2 * n + 1;
    adj_.resize(static_cast<std::size_t>(2 * n + 2));
    for (int i = 0; i < n; ++i) {
      VertexId v = ids_[static_cast<std::size_t>(i)];
      add(2 * i, 2 * i + 1, uncapped.contains(v) ? inf_ : 1);
    }
    for (int i = 0; i < n; ++i) {
      VertexId v = ids_[static_cast<std::size_t>(i)];
      if (sources.contains(v)) add(source_, 2 * i, inf_);
      for (VertexId w : g.neighbors(v)) add(2 * i + 1, 2 * index_of(w), inf_);
      if (sinks.contains(v)) add(2 * i + 1, sink_, inf_);
    }
  }

  std::size_t run(std::size_t limit) {
    std::size_t flow = 0;
    while (flow < limit && augment()) ++flow;
    return flow;
  }

  PathSystem paths() const {
    PathSystem ps;
    for (const Arc& start : adj_[static_cast<std::size_t>(source_)]) {
      if (start.cap == start.initial) continue;
      std::vector<VertexId> path;
      int node = start.to;  // an in-node
      while (true) {
        int vi = node / 2;
        path.push_back(ids_[static_cast<std::size_t>(vi)]);
        int out = 2 * vi + 1;
        int next = -1;
        for (const Arc& a : adj_[static_cast<std::size_t>(out)]) {
          if (a.initial == 0 || a.cap == a.initial) continue;
          next = a.to;
          break;
        }
        if (next < 0 || next == sink_) break;
        node = next;
      }
      ps.paths.push_back(trim(path));
    }
    return ps;
  }

  Separation cut() const {
    std::vector<char> seen = residual_reach();
    Separation sep;
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      bool in_reached = seen[2 * i] != 0;
      bool out_reached = seen[2 * i + 1] != 0;
      if (in_reached) sep.a.insert(ids_[i]);
      if (!in_reached || !out_reached) sep.b.insert(ids_[i]);
    }
    return sep;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int initial;
    std::size_t rev;
  };

  int index_of(VertexId v) const {
    return static_cast<int>(std::lower_bound(ids_.begin(), ids_.end(), v) - ids_.begin());
  }

  void add(int u, int v, int cap) {
    auto& fu = adj_[static_cast<std::size_t>(u)];
    auto& fv = adj_[static_cast<std::size_t>(v)];
    fu.push_back(Arc{v, cap, cap, fv.size()});
    fv.push_back(Arc{u, 0, 0, fu.size() - 1});
  }

  std::vector<char> residual_reach() const {
    std::vector<char> seen(adj_.size(), 0);
    std::queue<int> q;
    q.push(source_);
    seen[static_cast<std::size_t>(source_)] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (const Arc& a : adj_[static_cast<std::size_t>(u)]) {
        if (a.cap > 0 && !seen[static_cast<std::size_t>(a.to)]) {
          seen[static_cast<std::size_t>(a.to)] = 1;
          q.push(a.to);
        }
      }
    }
    return seen;
  }

  bool augment() {
    std::vector<std::pair<int, std::size_t>> parent(adj_.size(), {-1, 0});
    std::queue<int> q;
    q.push(source_);
    parent[static_cast<std::size_t>(source_)] = {source_, 0};
    while (!q.empty() && parent[static_cast<std::size_t>(sink_)].first < 0) {
      int u = q.front();
      q.pop();
      const auto& arcs = adj_[static_cast<std::size_t>(u)];
      for (std::size_t e = 0; e < arcs.size(); ++e) {
        const Arc& a = arcs[e];
        if (a.cap > 0 && parent[static_cast<std::size_t>(a.to)].first < 0) {
          parent[static_cast<std::size_t>(a.to)] = {u, e};
          q.push(a.to);
        }
      }
    }
    if (parent[static_cast<std::size_t>(sink_)].first < 0) return false;
    for (int v = sink_; v != source_;) {
      auto [u, e] = parent[static_cast<std::size_t>(v)];
      Arc& a = adj_[static_cast<std::size_t>(u)][e];
      a.cap -= 1;
      adj_[static_cast<std::size_t>(a.to)][a.rev].cap += 1;
      v = u;
    }
    return true;
  }

  // Keep the stretch from the last source to the first sink after it, so
  // interiors avoid both terminal sets.
  std::vector<VertexId> trim(const std::vector<VertexId>& path) const {
    std::size_t start = 0;
    for (std::size_t i = 0; i < path.size(); ++i)
      if (sources_.contains(path[i])) start = i;
    std::size_t end = start;
    while (end < path.size() && !sinks_.contains(path[end])) ++end;
    return {path.begin() + static_cast<std::ptrdiff_t>(start),
            path.begin() + static_cast<std::ptrdiff_t>(end) + 1};
  }

  std::vector<VertexId> ids_;
  VertexSet sources_;
  VertexSet sinks_;
  std::vector<std::vector<Arc>> adj_;
  int inf_ = 0;
  int source_ = 0;
  int sink_ = 0;
};

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  long double r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (r > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<std::size_t>(r + 0.5L);
}

}  // namespace

std::variant<PathSystem, Separation> menger(const Graph& g, const VertexSet& sources,
                                            const VertexSet& sinks, std::size_t k) {
  g.require(sources);
  g.require(sinks);
  if (k == 0) throw DomainError("menger: k must be positive");
  VertexFlow flow(g, sources, sinks);
  if (flow.run(k) >= k) return flow.paths();
  return flow.cut();
}

std::optional<RootSeparation> min_root_separation(const Graph& g, const VertexSet& x,
                                                  const VertexSet& target) {
  g.require(x);
  g.require(target);
  if (x.empty() || target.empty()) throw DomainError("min_root_separation: empty terminal set");
  VertexFlow flow(g, x, target);
  if (flow.run(x.size()) >= x.size()) return std::nullopt;
  return RootSeparation{flow.cut(), flow.paths()};
}

std::size_t local_connectivity(const Graph& g, VertexId u, VertexId v, std::size_t limit) {
  g.require(u);
  g.require(v);
  if (u == v || g.adjacent(u, v))
    throw PreconditionError("local_connectivity needs distinct non-adjacent vertices");
  VertexFlow flow(g, VertexSet{u}, VertexSet{v}, VertexSet{u, v});
  return flow.run(limit);
}

MassedReport is_massed(const Graph& g, const VertexSet& x, const Rational& lambda,
                       std::size_t budget) {
  g.require(x);
  if (x.empty()) throw DomainError("is_massed: empty root set");
  MassedReport report;
  report.lambda = lambda;

  VertexSet rest = g.vertices() - x;
  report.m1_slack = Rational(static_cast<std::int64_t>(rho(g, rest))) -
                    lambda * static_cast<std::int64_t>(rest.size());
  report.m1_holds = report.m1_slack > Rational(0);

  const std::vector<VertexId> ids = g.vertices().to_vector();
  std::size_t total = 0;
  for (std::size_t s = 0; s < x.size(); ++s) {
    total += binomial_capped(ids.size(), s, budget);
    if (total > budget)
      throw ResourceError("is_massed: more than " + std::to_string(budget) +
                          " candidate separators");
  }

  report.m2_holds = true;
  for (std::size_t s = 0; s < x.size() && report.m2_holds; ++s) {
    for_each_subset(ids, s, [&](const VertexSet& sep) {
      ++report.separators_checked;
      for (const VertexSet& comp : components_within(g, g.vertices() - sep)) {
        if (comp.intersects(x)) continue;
        Rational slack = Rational(static_cast<std::int64_t>(rho(g, comp))) -
                         lambda * static_cast<std::int64_t>(comp.size());
        if (slack > Rational(0)) {
          report.m2_holds = false;
          report.m2_violator = Separation{g.vertices() - comp, comp | sep};
          return false;
        }
      }
      return true;
    });
  }
  return report;
}

bool is_rigid(const Graph& g, const VertexSet& x, const Separation& sep) {
  if (!is_separation(g, x, sep)) throw PreconditionError("is_rigid: not a separation of (G, X)");
  if (sep.b_only().empty() || sep.order() == 0) return false;
  return is_cycle_linked(induced(g, sep.b), sep.separator()).linked;
}

}  // namespace rcm
