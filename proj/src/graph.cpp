#include "rcm/graph.hpp"

#include <string>

#include "rcm/errors.hpp"

namespace rcm {

Graph::Graph(std::size_t n) {
  for (std::size_t v = 0; v < n; ++v) add_vertex(static_cast<VertexId>(v));
}

Graph Graph::from_edges(const std::vector<Edge>& edges, std::size_t isolated_up_to) {
  Graph g(isolated_up_to);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_vertex(VertexId v) {
  if (v >= adj_.size()) adj_.resize(static_cast<std::size_t>(v) + 1);
  vertices_.insert(v);
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  add_vertex(u);
  add_vertex(v);
  if (adj_[u].contains(v)) return;
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++edge_count_;
}

void Graph::remove_edge(VertexId u, VertexId v) {
  if (!adjacent(u, v)) return;
  adj_[u].erase(v);
  adj_[v].erase(u);
  --edge_count_;
}

const VertexSet& Graph::neighbors(VertexId v) const {
  require(v);
  return adj_[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u : vertices_)
    for (VertexId v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::require(const VertexSet& s) const {
  if (!s.is_subset_of(vertices_)) {
    for (VertexId v : s)
      if (!vertices_.contains(v)) throw DomainError("unknown vertex " + std::to_string(v));
  }
}

void Graph::require(VertexId v) const {
  if (!vertices_.contains(v)) throw DomainError("unknown vertex " + std::to_string(v));
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertices_ != b.vertices_ || a.edge_count_ != b.edge_count_) return false;
  for (VertexId v : a.vertices_)
    if (a.adj_[v] != b.adj_[v]) return false;
  return true;
}

ContractionTrace ContractionTrace::identity(const Graph& g) {
  ContractionTrace t;
  for (VertexId v : g.vertices()) t.merged_from[v] = VertexSet{v};
  return t;
}

VertexSet ContractionTrace::expand(const VertexSet& s) const {
  VertexSet out;
  for (VertexId v : s) {
    auto it = merged_from.find(v);
    if (it == merged_from.end())
      out.insert(v);
    else
      out |= it->second;
  }
  return out;
}

std::size_t edge_count_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
  g.require(x);
  g.require(y);
  std::size_t count = 0;
  for (VertexId u : x) {
    for (VertexId v : g.neighbors(u) & y) {
      // An edge with both ends in x and in y would be seen from both sides.
      if (x.contains(v) && y.contains(u) && v < u) continue;
      ++count;
    }
  }
  return count;
}

std::size_t rho(const Graph& g, const VertexSet& x) {
  g.require(x);
  std::size_t degree_sum = 0, inside = 0;
  for (VertexId u : x) {
    const auto& nu = g.neighbors(u);
    degree_sum += nu.size();
    inside += (nu & x).size();
  }
  return degree_sum - inside / 2;
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
  g.require(x);
  VertexSet out;
  for (VertexId u : x) out |= g.neighbors(u);
  return out - x;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
  return neighborhood(g, x) | x;
}

Graph induced(const Graph& g, const VertexSet& x) {
  g.require(x);
  Graph h;
  for (VertexId u : x) {
    h.add_vertex(u);
    for (VertexId v : g.neighbors(u) & x)
      if (u < v) h.add_edge(u, v);
  }
  return h;
}

Graph delete_vertices(const Graph& g, const VertexSet& s) {
  g.require(s);
  return induced(g, g.vertices() - s);
}

VertexSet reach_within(const Graph& g, const VertexSet& start, const VertexSet& within) {
  VertexSet seen = start & within;
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (VertexId u : frontier) next |= g.neighbors(u);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within & g.vertices();
  while (!left.empty()) {
    VertexSet comp = reach_within(g, VertexSet{left.front()}, left);
    left -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components_within(g, g.vertices()); }

bool is_connected_set(const Graph& g, const VertexSet& x) {
  if (x.empty()) return false;
  return reach_within(g, VertexSet{x.front()}, x) == x;
}

Graph contract(const Graph& g, VertexId u, VertexId v, ContractionTrace& trace) {
  if (!g.has_vertex(u) || !g.has_vertex(v)) throw DomainError("contract: unknown vertex");
  if (!g.adjacent(u, v))
    throw PreconditionError("contract: " + std::to_string(u) + "-" + std::to_string(v) +
                            " is not an edge");
  Graph h;
  for (VertexId a : g.vertices()) {
    if (a == v) continue;
    h.add_vertex(a);
  }
  for (auto [a, b] : g.edges()) {
    VertexId ra = a == v ? u : a;
    VertexId rb = b == v ? u : b;
    if (ra != rb) h.add_edge(ra, rb);
  }
  VertexSet merged = trace.merged_from.count(u) ? trace.merged_from[u] : VertexSet{u};
  merged |= trace.merged_from.count(v) ? trace.merged_from[v] : VertexSet{v};
  trace.merged_from.erase(v);
  trace.merged_from[u] = std::move(merged);
  return h;
}

Graph contract(const Graph& g, VertexId u, VertexId v) {
  ContractionTrace scratch;
  return contract(g, u, v, scratch);
}

Graph complete_on(const Graph& g, const VertexSet& s) {
  g.require(s);
  Graph h = g;
  for (VertexId a : s)
    for (VertexId b : s)
      if (a < b) h.add_edge(a, b);
  return h;
}

namespace {

bool extend_clique(const Graph& g, VertexSet& clique, const VertexSet& candidates,
                   std::size_t need) {
  if (need == 0) return true;
  if (candidates.size() < need) return false;
  for (VertexId v : candidates) {
    VertexSet rest = candidates & g.neighbors(v);
    // Only extend upward so each clique is visited once.
    VertexSet upward;
    for (VertexId w : rest)
      if (w > v) upward.insert(w);
    clique.insert(v);
    if (extend_clique(g, clique, upward, need - 1)) return true;
    clique.erase(v);
  }
  return false;
}

}  // namespace

std::optional<VertexSet> find_clique(const Graph& g, std::size_t size) {
  VertexSet clique;
  if (extend_clique(g, clique, g.vertices(), size)) return clique;
  return std::nullopt;
}

}  // namespace rcm
