#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rcm/vertex_set.hpp"

namespace rcm {

using Edge = std::pair<VertexId, VertexId>;

// Simple undirected graph over stable vertex ids. Ids need not be contiguous;
// transforms return new graphs that keep the ids of surviving vertices.
class Graph {
 public:
  Graph() = default;
  // Vertices 0..n-1, no edges.
  explicit Graph(std::size_t n);

  static Graph from_edges(const std::vector<Edge>& edges, std::size_t isolated_up_to = 0);

  void add_vertex(VertexId v);
  // Adds both endpoints if absent. Loops are rejected; repeated edges are no-ops.
  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);

  bool has_vertex(VertexId v) const { return vertices_.contains(v); }
  bool adjacent(VertexId u, VertexId v) const {
    return u < adj_.size() && adj_[u].contains(v);
  }

  const VertexSet& vertices() const { return vertices_; }
  const VertexSet& neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  std::size_t order() const { return vertices_.size(); }
  std::size_t size() const { return edge_count_; }
  // One past the largest id ever added.
  std::size_t id_bound() const { return adj_.size(); }

  // Each edge once as (u, v) with u < v, ascending.
  std::vector<Edge> edges() const;

  // Throws DomainError unless every member of `s` is a vertex.
  void require(const VertexSet& s) const;
  void require(VertexId v) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  VertexSet vertices_;
  std::vector<VertexSet> adj_;
  std::size_t edge_count_ = 0;
};

// Maps each surviving vertex to the original vertices it stands for.
struct ContractionTrace {
  std::map<VertexId, VertexSet> merged_from;

  static ContractionTrace identity(const Graph& g);
  VertexSet expand(const VertexSet& s) const;
};

/// e_G(X, Y): edges with one end in X and the other in Y, each edge counted once.
std::size_t edge_count_between(const Graph& g, const VertexSet& x, const VertexSet& y);

/// rho_G(X): edges with at least one end in X.
std::size_t rho(const Graph& g, const VertexSet& x);

/// N_G(X): vertices outside X with a neighbour in X.
VertexSet neighborhood(const Graph& g, const VertexSet& x);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);

Graph induced(const Graph& g, const VertexSet& x);
Graph delete_vertices(const Graph& g, const VertexSet& s);

/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
/// Components of G[within]; cheaper than building the induced graph.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within);
/// Vertices reachable from `start` inside G[within] (start itself included if in `within`).
VertexSet reach_within(const Graph& g, const VertexSet& start, const VertexSet& within);
bool is_connected_set(const Graph& g, const VertexSet& x);

/// G/uv. The merged vertex keeps the id `u`; parallel edges collapse.
Graph contract(const Graph& g, VertexId u, VertexId v, ContractionTrace& trace);
Graph contract(const Graph& g, VertexId u, VertexId v);

/// Adds every missing edge inside `s`.
Graph complete_on(const Graph& g, const VertexSet& s);

/// Lexicographically first clique of the given size, if any.
std::optional<VertexSet> find_clique(const Graph& g, std::size_t size);

}  // namespace rcm
