#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcm/graph.hpp"

namespace rcm {

/// Branch-set search is exponential in the number of roots.
inline constexpr std::size_t kMaxRoots = 8;
/// The search packs the roots' component into 64-bit masks.
inline constexpr std::size_t kMaxSearchVertices = 64;

// Ordered distinct roots x_1..x_k.
struct RootSequence {
  std::vector<VertexId> roots;

  std::size_t size() const { return roots.size(); }
  VertexId operator[](std::size_t i) const { return roots[i]; }
  VertexSet as_set() const { return VertexSet::of(roots); }
  friend bool operator==(const RootSequence&, const RootSequence&) = default;
  friend auto operator<=>(const RootSequence&, const RootSequence&) = default;
};

// Branch sets X_1..X_k of a rooted cycle minor; X_i holds root x_i.
struct MinorModel {
  std::vector<VertexSet> branch_sets;

  friend bool operator==(const MinorModel&, const MinorModel&) = default;
};

struct ModelCheck {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

struct SearchStats {
  std::uint64_t nodes = 0;
};

/// Throws DomainError for unknown or repeated roots or k < 2, UnsupportedError for k > kMaxRoots.
void validate_roots(const Graph& g, const RootSequence& seq);

/// Exact decision of whether (g, x_1..x_k) has a C_k-minor. A returned model
/// is inclusion-minimal and passes verify_model; nullopt is a proof of absence.
/// k = 2 asks for two disjoint adjacent connected sets, i.e. an x_1-x_2 path.
std::optional<MinorModel> find_rooted_cycle_minor(const Graph& g, const RootSequence& seq,
                                                  SearchStats* stats = nullptr);

/// Checks every model clause; the diagnostic names the first one that fails.
ModelCheck verify_model(const Graph& g, const RootSequence& seq, const MinorModel& m);

bool path_exists(const Graph& g, VertexId u, VertexId v);

/// Cyclic orders of `x` up to rotation and reflection: smallest root first,
/// second root smaller than the last. (k-1)!/2 orders for k >= 3.
std::vector<RootSequence> canonical_cyclic_orders(const VertexSet& x);

/// The representative of seq's dihedral class in the form above.
RootSequence canonical_form(const RootSequence& seq);

struct CycleLinkReport {
  bool linked = false;
  std::vector<std::pair<RootSequence, MinorModel>> witnesses;
  std::optional<RootSequence> failing_order;
};

/// Tries every canonical order, stopping at the first without a model. For
/// |x| = 2 this is a path query and |x| = 1 is trivially linked.
CycleLinkReport is_cycle_linked(const Graph& g, const VertexSet& x);

}  // namespace rcm
