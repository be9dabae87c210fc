// Latent projection of a DMG onto an observed subset O of its vertices.
//
// The projection has vertex set O and joins two (not necessarily distinct)
// observed vertices by an edge exactly when the original graph contains a
// nontrivial collider-free walk between them whose every non-endpoint lies
// outside O, with matching edge marks at the walk's endpoints.  It is
// computed by triroute saturation: repeatedly add the missing shortcut edge
// of some noncolliding length-2 walk whose middle vertex is unobserved,
// until a fixpoint, then take the induced subgraph on O.

#ifndef MUSEP_MARGINALIZE_HPP
#define MUSEP_MARGINALIZE_HPP

#include <utility>
#include <vector>

#include "musep/graph.hpp"

namespace musep {

// A walk of length 2 whose middle vertex differs from both endpoints.  The
// endpoints themselves may coincide (such triroutes create loops).
struct TriRoute {
  VertexId left;
  VertexId mid;
  VertexId right;
  Edge left_edge;
  Edge right_edge;
  bool colliding;  // both marks at mid are heads
};

// Saturation processes middle vertices from a worklist; the order hook lets
// tests confirm that the fixpoint does not depend on choice order.
enum class SaturationOrder { forward, reversed };

Dmg latent_projection(const Dmg& g, const VertexSet& o,
                      SaturationOrder order = SaturationOrder::forward);

// The sequence of shortcut additions performed by the saturation, in order:
// each entry pairs the noncolliding triroute with the edge it forced.
std::vector<std::pair<TriRoute, Edge>> projection_fixpoint_trace(const Dmg& g,
                                                                 const VertexSet& o);

// One disagreement between the graph and its projection on a query kept
// inside O.  Vertex ids and the conditioning set are in projection indices.
struct InvarianceViolation {
  VertexId alpha;
  VertexId beta;
  VertexSet c;
  bool separated_in_g;
  bool separated_in_projection;
};

struct InvarianceReport {
  long long queries = 0;
  std::vector<InvarianceViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Exhaustively compares mu_separated(g, <{alpha},{beta}|C>) against the same
// query in latent_projection(g, o) for all alpha, beta in o and C subset of
// o.  Throws CapExceededError when |o| > cap.
InvarianceReport verify_marginalization_invariance(const Dmg& g, const VertexSet& o,
                                                   int cap = 12);

}  // namespace musep

#endif  // MUSEP_MARGINALIZE_HPP
