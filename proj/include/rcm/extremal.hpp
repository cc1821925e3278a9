#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rcm/graph.hpp"
#include "rcm/minor.hpp"

namespace rcm {

// A component C of G - (X u {a, b}) with N(C) inside {a, b, x_i, x_{i+2}}.
struct TightComponent {
  VertexSet vertices;
  int attachment = 1;  // i in 1..5, smallest that fits
  friend bool operator==(const TightComponent&, const TightComponent&) = default;
};

// Labeling x_1..x_5 of the roots, apex pair {a, b}, and every component of
// G - (X u {a, b}).
struct ExtremalCertificate {
  RootSequence labeling;
  VertexId apex_a = 0;
  VertexId apex_b = 0;
  std::vector<TightComponent> components;
  friend bool operator==(const ExtremalCertificate&, const ExtremalCertificate&) = default;
};

/// {a, b, x_i, x_{i+2}} for attachment index i (1-based, cyclic).
VertexSet attachment_set(const ExtremalCertificate& cert, int attachment);

/// Checks every clause against g: no x_i x_{i+1} edge, ab and all a-x_i, b-x_i
/// edges present, components listed exactly, each with rho(C) = 5|C| and its
/// attachments in place, and rho(V \ X) = 5|V \ X| + 1.
ModelCheck check_certificate(const Graph& g, const VertexSet& x, const ExtremalCertificate& cert);

/// Tries the 12 canonical labelings of x and every apex pair a < b outside x;
/// returns the first certificate that passes check_certificate. |x| must be 5.
std::optional<ExtremalCertificate> recognize(const Graph& g, const VertexSet& x);

struct ComponentSpec {
  int attachment = 1;    // 1..5
  std::size_t size = 3;  // at least 3
};

struct ExtremalInstance {
  Graph graph;
  RootSequence roots;  // x_1..x_5 = ids 0..4
  VertexId apex_a = 5;
  VertexId apex_b = 6;
  ExtremalCertificate certificate;  // as returned by recognize
  std::vector<RootSequence> orders_with_model;
};

/// Builds the core on x_1..x_5, a, b and one component per spec entry: a
/// triangle fully joined to its four attachments, extended by a path whose
/// new vertices each also see all four attachments, so rho(C) = 5|C|.
/// The result must pass recognize, be 5-massed, and have no C_5-minor for
/// x_1..x_5; otherwise DomainError explains which filter rejected it.
ExtremalInstance generate(const std::vector<ComponentSpec>& spec);

}  // namespace rcm
