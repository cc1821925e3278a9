#include "rcm/extremal.hpp"

#include <string>

#include "rcm/connectivity.hpp"
#include "rcm/errors.hpp"

namespace rcm {

namespace {

VertexId label(const ExtremalCertificate& cert, int i) {
  return cert.labeling[static_cast<std::size_t>((i - 1 + 5) % 5)];
}

std::optional<int> fitting_attachment(const Graph& g, const ExtremalCertificate& cert,
                                      const VertexSet& comp) {
  VertexSet boundary = neighborhood(g, comp);
  for (int i = 1; i <= 5; ++i)
    if (boundary.is_subset_of(attachment_set(cert, i))) return i;
  return std::nullopt;
}

}  // namespace

VertexSet attachment_set(const ExtremalCertificate& cert, int attachment) {
  return VertexSet{cert.apex_a, cert.apex_b, label(cert, attachment), label(cert, attachment + 2)};
}

ModelCheck check_certificate(const Graph& g, const VertexSet& x, const ExtremalCertificate& cert) {
  auto fail = [](std::string why) { return ModelCheck{false, std::move(why)}; };
  if (x.size() != 5 || cert.labeling.size() != 5) return fail("root set must have 5 vertices");
  if (cert.labeling.as_set() != x) return fail("labeling is not a permutation of the roots");
  g.require(x);
  const VertexId a = cert.apex_a, b = cert.apex_b;
  if (a == b || !g.has_vertex(a) || !g.has_vertex(b) || x.contains(a) || x.contains(b))
    return fail("apexes must be two distinct non-root vertices");
  for (int i = 1; i <= 5; ++i)
    if (g.adjacent(label(cert, i), label(cert, i + 1)))
      return fail("x" + std::to_string(i) + " is adjacent to x" + std::to_string(i % 5 + 1));
  if (!g.adjacent(a, b)) return fail("apexes are not adjacent");
  for (VertexId r : x)
    if (!g.adjacent(a, r) || !g.adjacent(b, r))
      return fail("root " + std::to_string(r) + " misses an apex");

  std::vector<VertexSet> comps = components_within(g, g.vertices() - x - VertexSet{a, b});
  if (comps.size() != cert.components.size()) return fail("component list is incomplete");
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const TightComponent& tc = cert.components[c];
    std::string name = "component " + std::to_string(c + 1);
    if (tc.vertices != comps[c]) return fail(name + " does not match G - (X u {a,b})");
    if (tc.attachment < 1 || tc.attachment > 5) return fail(name + " has a bad attachment index");
    if (rho(g, tc.vertices) != 5 * tc.vertices.size()) return fail(name + " has rho(C) != 5|C|");
    if (!neighborhood(g, tc.vertices).is_subset_of(attachment_set(cert, tc.attachment)))
      return fail(name + " attaches outside {a, b, x_i, x_{i+2}}");
  }
  VertexSet rest = g.vertices() - x;
  if (rho(g, rest) != 5 * rest.size() + 1) return fail("rho(V \\ X) != 5|V \\ X| + 1");
  return {};
}

std::optional<ExtremalCertificate> recognize(const Graph& g, const VertexSet& x) {
  g.require(x);
  if (x.size() != 5) throw DomainError("recognize needs exactly 5 roots");
  VertexSet rest = g.vertices() - x;
  if (rho(g, rest) != 5 * rest.size() + 1) return std::nullopt;

  VertexSet common = rest;
  for (VertexId r : x) common &= g.neighbors(r);

  for (const RootSequence& order : canonical_cyclic_orders(x)) {
    bool cyclic_edge = false;
    for (std::size_t i = 0; i < 5; ++i)
      if (g.adjacent(order[i], order[(i + 1) % 5])) cyclic_edge = true;
    if (cyclic_edge) continue;
    for (VertexId a : common) {
      for (VertexId b : common & g.neighbors(a)) {
        if (b <= a) continue;
        ExtremalCertificate cert{order, a, b, {}};
        bool fits = true;
        for (const VertexSet& comp : components_within(g, rest - VertexSet{a, b})) {
          auto i = fitting_attachment(g, cert, comp);
          if (!i) {
            fits = false;
            break;
          }
          cert.components.push_back(TightComponent{comp, *i});
        }
        if (fits && check_certificate(g, x, cert)) return cert;
      }
    }
  }
  return std::nullopt;
}

ExtremalInstance generate(const std::vector<ComponentSpec>& spec) {
  ExtremalInstance inst;
  inst.roots = RootSequence{{0, 1, 2, 3, 4}};
  Graph& g = inst.graph;
  const VertexId a = inst.apex_a, b = inst.apex_b;
  g.add_edge(a, b);
  for (VertexId r = 0; r < 5; ++r) {
    g.add_edge(a, r);
    g.add_edge(b, r);
  }

  VertexId next = 7;
  for (const ComponentSpec& c : spec) {
    if (c.attachment < 1 || c.attachment > 5)
      throw DomainError("attachment index " + std::to_string(c.attachment) + " is not in 1..5");
    if (c.size < 3)
      throw DomainError("component of size " + std::to_string(c.size) +
                        " cannot reach rho(C) = 5|C| with four attachments; need size >= 3");
    const VertexId xi = static_cast<VertexId>(c.attachment - 1);
    const VertexId xj = static_cast<VertexId>((c.attachment + 1) % 5);
    const VertexSet attach{a, b, xi, xj};
    std::vector<VertexId> members;
    for (std::size_t t = 0; t < c.size; ++t) {
      VertexId v = next++;
      members.push_back(v);
      for (VertexId w : attach) g.add_edge(v, w);
      if (t > 0) g.add_edge(members[t - 1], v);
    }
    g.add_edge(members[0], members[2]);
    if (rho(g, VertexSet::of(members)) != 5 * members.size())
      throw InternalError("generated component misses rho(C) = 5|C|");
  }

  const VertexSet x = inst.roots.as_set();
  auto cert = recognize(g, x);
  if (!cert) throw DomainError("generated instance rejected: recognize found no certificate");
  inst.certificate = *cert;
  if (!is_massed(g, x, Rational(5)).massed())
    throw DomainError("generated instance rejected: not 5-massed");
  if (find_rooted_cycle_minor(g, inst.roots))
    throw DomainError("generated instance rejected: x1..x5 has a C5-minor");
  for (const RootSequence& order : canonical_cyclic_orders(x))
    if (find_rooted_cycle_minor(g, order)) inst.orders_with_model.push_back(order);
  return inst;
}

}  // namespace rcm
