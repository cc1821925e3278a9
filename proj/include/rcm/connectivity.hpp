#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rcm/graph.hpp"

namespace rcm {

// Exact rational number with a positive denominator.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  static Rational parse(const std::string& text);  // "N" or "N/D"

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  std::string str() const;

  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, std::int64_t k);
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

// (A, B) with A u B = V(G) and no edge between A\B and B\A.
struct Separation {
  VertexSet a;
  VertexSet b;

  std::size_t order() const { return (a & b).size(); }
  VertexSet separator() const { return a & b; }
  VertexSet a_only() const { return a - b; }
  VertexSet b_only() const { return b - a; }
  friend bool operator==(const Separation&, const Separation&) = default;
};

/// True iff `sep` is a separation of (g, x): covers V, x within A, no A\B-B\A edge.
bool is_separation(const Graph& g, const VertexSet& x, const Separation& sep);

struct PathSystem {
  std::vector<std::vector<VertexId>> paths;
};

/// Paths are walks along edges, pairwise vertex-disjoint, each from a source to
/// a sink, with interiors avoiding both terminal sets.
bool is_valid_path_system(const Graph& g, const VertexSet& sources, const VertexSet& sinks,
                          const PathSystem& ps);

/// Either k vertex-disjoint sources-to-sinks paths or a separation of order
/// < k with sources in A and sinks in B. Unit vertex capacities, ascending-id
/// augmentation order.
std::variant<PathSystem, Separation> menger(const Graph& g, const VertexSet& sources,
                                            const VertexSet& sinks, std::size_t k);

struct RootSeparation {
  Separation separation;
  PathSystem dual;  // order-many disjoint paths certifying minimality
};

/// A minimum-order separation with x in A and target in B, or nullopt when
/// |x| disjoint x-to-target paths exist.
std::optional<RootSeparation> min_root_separation(const Graph& g, const VertexSet& x,
                                                  const VertexSet& target);

/// Number of internally disjoint u-v paths, capped at `limit`. u and v must be
/// distinct and non-adjacent.
std::size_t local_connectivity(const Graph& g, VertexId u, VertexId v, std::size_t limit);

struct MassedReport {
  Rational lambda;
  bool m1_holds = false;
  Rational m1_slack;  // rho(V\X) - lambda |V\X|
  bool m2_holds = false;
  std::optional<Separation> m2_violator;
  std::size_t separators_checked = 0;

  bool massed() const { return m1_holds && m2_holds; }
};

inline constexpr std::size_t kDefaultSeparatorBudget = 20'000'000;

/// (M1) directly; (M2) by scanning every separator S with |S| < |x| and every
/// component C of G - S avoiding x. Since rho is additive over components, a
/// union violates the bound only if one of its components does, so one test per
/// component suffices. The first violator in (|S|, lexicographic S, smallest C)
/// order is reported. Throws ResourceError if the scan exceeds `budget` separators.
MassedReport is_massed(const Graph& g, const VertexSet& x, const Rational& lambda,
                       std::size_t budget = kDefaultSeparatorBudget);

/// B\A nonempty and (G[B], A n B) cycle-linked. A separation of order 0 is
/// never rigid because the empty set is not cycle-linked.
bool is_rigid(const Graph& g, const VertexSet& x, const Separation& sep);

/// Calls `fn(S)` for each subset of `universe` of size exactly `size`, in
/// lexicographic order; stops early when fn returns false.
template <class Fn>
bool for_each_subset(const std::vector<VertexId>& universe, std::size_t size, Fn&& fn) {
  const std::size_t n = universe.size();
  if (size > n) return true;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (std::size_t i : idx) s.insert(universe[i]);
    if (!fn(s)) return false;
    std::size_t pos = size;
    while (pos > 0 && idx[pos - 1] == n - size + pos - 1) --pos;
    if (pos == 0) return true;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace rcm
