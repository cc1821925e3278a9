#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rcm/connectivity.hpp"
#include "rcm/errors.hpp"
#include "rcm/extremal.hpp"
#include "rcm/graph.hpp"
#include "rcm/minor.hpp"

namespace rcm {

// H = G[N[a]] for a low-degree non-root vertex a.
struct DenseNeighborhood {
  VertexId apex = 0;
  Graph h;
  VertexSet roots_in_h;  // X n V(H)
};

/// The first local density clause that fails for H = G[N[a]], or nullopt:
/// 7 <= |V(H)| <= 10; H - a has no K4; every non-root has degree >= 6 in H;
/// every root x in H has |N_H(x) \ X| >= 2 and |N_H(x) \ X| + |X n V(H)| >= 7.
std::optional<std::string> dense_neighborhood_violation(const Graph& g, const VertexSet& x,
                                                        VertexId a);

/// Throws PreconditionError naming the violated clause.
DenseNeighborhood make_dense_neighborhood(const Graph& g, const VertexSet& x, VertexId a);

struct DenseResult {
  std::optional<MinorModel> model;
  std::string route;  // which construction produced the model
};

/// A C_t-minor of (H, x'_1..x'_t) for 2 <= t <= 5, with x' inside V(H) - a
/// and covering X n V(H). Fixed constructions are tried first under every
/// rotation and reflection of the order; each candidate is verified, and
/// exact search inside H is the last resort.
DenseResult dense_construct(const DenseNeighborhood& dn, const RootSequence& xprime);

enum class StepKind { separation_split, contraction, dense_construction, leaf_search, fallback_search };

std::string to_string(StepKind kind);

struct ReductionStep {
  StepKind kind = StepKind::leaf_search;
  std::size_t depth = 0;
  // separation_split: recurse on G[A] with A n B made complete.
  std::optional<Separation> separation;
  // contraction: v merged into u, u keeps its id.
  VertexId u = 0;
  VertexId v = 0;
  // dense_construction
  std::optional<VertexId> apex;
  std::string route;
  // leaf_search / fallback_search / dense_construction
  bool found = false;
  bool on_input = false;
  // Set once the model from below has been lifted and re-verified here.
  bool lifted = false;
  // Size of the instance a search or construction ran on.
  std::size_t instance_order = 0;
  std::size_t instance_size = 0;
};

// A check of a structural fact that holds in minimal counterexamples. A
// failure is expected on YES instances and only matters for falsifiers.
struct Observation {
  std::string name;
  std::size_t depth = 0;
  bool holds = true;
  std::string detail;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  std::vector<Observation> observations;
};

/// Rebuilds the final reduced graph by applying the trace's splits and
/// contractions to g in order.
Graph replay(const Graph& g, const ReductionTrace& trace);

/// Maps a model of the graph after `step` back to `before`, the graph the
/// step was applied to, and re-verifies it. Throws InternalError if the lift
/// fails verification.
MinorModel lift_model(const Graph& before, const RootSequence& seq, const MinorModel& m,
                      const ReductionStep& step);

enum class Outcome { model, extremal, falsifier };

std::string to_string(Outcome outcome);

struct SolveResult {
  Outcome outcome = Outcome::falsifier;
  std::optional<MinorModel> model;
  std::optional<ExtremalCertificate> certificate;
  ReductionTrace trace;
  MassedReport massed;
};

class NotMassedError : public PreconditionError {
 public:
  explicit NotMassedError(MassedReport report)
      : PreconditionError("instance is not 5-massed"), report_(std::move(report)) {}
  const MassedReport& report() const noexcept { return report_; }

 private:
  MassedReport report_;
};

struct SolveOptions {
  // Called as each step is recorded.
  std::function<void(const ReductionStep&)> on_step;
  std::size_t separator_budget = kDefaultSeparatorBudget;
};

/// Rooted C_k-minor or extremal certificate for a 5-massed instance with
/// 2 <= k <= 5. Reductions run first (rigid separations, sparse-edge
/// contractions, dense neighbourhoods); whatever they return is lifted and
/// verified on g. If they find nothing, exact search on g decides, and a NO
/// is explained by recognize when k = 5. An outcome with neither is a
/// falsifier. Throws NotMassedError when the precondition fails.
SolveResult solve(const Graph& g, const RootSequence& seq, const SolveOptions& options = {});

}  // namespace rcm
