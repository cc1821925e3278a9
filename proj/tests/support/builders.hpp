#pragma once

#include <cstddef>
#include <vector>

#include "rcm/connectivity.hpp"
#include "rcm/graph.hpp"
#include "rcm/harness.hpp"
#include "rcm/minor.hpp"

namespace rcm::test {

Graph cycle(const std::vector<VertexId>& ids);
Graph path(const std::vector<VertexId>& ids);
Graph complete(std::size_t n, VertexId first = 0);
Graph star(std::size_t leaves);  // centre 0, leaves 1..leaves
// Hub 0 joined to the cycle 1..rim.
Graph wheel(std::size_t rim);
// Vertex 0 joined to every vertex of the complete multipartite graph with the
// given part sizes (ids from 1).
Graph apex_over_multipartite(const std::vector<std::size_t>& parts);
Graph random_graph(Rng& rng, std::size_t n, double p);
std::vector<VertexId> random_roots(Rng& rng, const Graph& g, std::size_t k);

struct RootedInstance {
  Graph graph;
  RootSequence roots;
};

/// Dense random graphs on n in [n_lo, n_hi] with k random roots, redrawn until
/// the pair is 5-massed.
RootedInstance random_massed_instance(Rng& rng, std::size_t n_lo, std::size_t n_hi, std::size_t k);

/// Relabels vertex i as perm[i].
Graph relabel(const Graph& g, const std::vector<VertexId>& perm);

}  // namespace rcm::test
