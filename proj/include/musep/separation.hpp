// Mu-separation decision procedure with witness extraction, plus the
// equivalent criteria it is cross-checked against: delta-separation via
// bereaved graphs, classical m-separation, and the history-version /
// augmented-graph reduction to undirected separation.
//
// Mu-separation is asymmetric: "b is mu-separated from a given c" asks for
// the absence of a nontrivial walk from some vertex of a \ c to some vertex
// of b in which every collider is an ancestor of c, no noncollider lies in
// c, and the final edge has a head at its final vertex.

#ifndef MUSEP_SEPARATION_HPP
#define MUSEP_SEPARATION_HPP

#include <optional>
#include <vector>

#include "musep/graph.hpp"
#include "musep/walk.hpp"

namespace musep {

struct SeparationQuery {
  VertexSet a;  // sources
  VertexSet b;  // targets
  VertexSet c;  // conditioning set
};

// True iff b is mu-separated from a given c in g.  Decided by forward
// reachability over states (vertex, arrival mark) with collider/noncollider
// gating; no walk is materialized.
bool mu_separated(const Dmg& g, const SeparationQuery& q);

// Witness: some mu-connecting route when mu_separated is false, absent
// otherwise.  The returned walk passes is_route and is_mu_connecting.
std::optional<Route> find_mu_connecting_route(const Dmg& g, const SeparationQuery& q);

// Strengthened witness: a mu-connecting walk whose every collider lies in c
// itself, not merely in An(c).  Exists whenever any connecting walk does;
// obtained from a route witness by detouring each collider down a shortest
// directed path into c and back.  Passes is_mu_connecting and
// walk_colliders_within(w, c).
std::optional<Walk> find_mu_connecting_walk_colliders_in_c(const Dmg& g,
                                                           const SeparationQuery& q);

// Consistency check: conjunction of mu_separated over singleton source and
// target pairs.  Equals mu_separated on every query.
bool mu_separated_sets_decomposes(const Dmg& g, const SeparationQuery& q);

// Low-level core shared with the equivalence module: the set of vertices
// reachable with an arrival head by gated walks out of a \ c, i.e. the set
// of all beta for which <a, {beta} | c> is mu-connected.  trav must come
// from build_traversals(g) and anc_c from ancestors(g, c).
VertexSet mu_reachable_heads(const Dmg& g,
                             const std::vector<std::vector<Traversal>>& trav,
                             const VertexSet& a, const VertexSet& c,
                             const VertexSet& anc_c);

// Removes every non-loop directed edge whose tail lies in b.  Defined for
// directed graphs only; throws std::invalid_argument on bidirected edges.
Dmg bereaved_graph(const Dmg& g, const VertexSet& b);

// Delta-separation in a directed graph: mu-separation of b from a given c
// inside bereaved_graph(g, b).  Requires a, b, c pairwise disjoint with a
// and b nonempty; equals mu_separated(g, <a, b | c u b>) on all such inputs.
bool delta_separated(const Dmg& g, const VertexSet& a, const VertexSet& b,
                     const VertexSet& c);

// Classical m-separation (no head requirement at the final vertex).
// Requires a, b, c pairwise disjoint.
bool m_separated(const Dmg& g, const VertexSet& a, const VertexSet& b,
                 const VertexSet& c);

// The b-history version of g: one fresh vertex per member of b that
// receives copies of exactly the head-ended edges into that member.
// past_of[v] is the index of v's copy, or -1 for vertices outside b.
struct HistoryVersion {
  Dmg graph;
  std::vector<VertexId> past_of;
};

HistoryVersion history_version(const Dmg& g, const VertexSet& b);

// Undirected graph on the same vertices joining every pair of distinct
// vertices that are collider-connected: linked by a nontrivial walk whose
// every non-endpoint vertex is a collider.
UndirectedGraph augmented_graph(const Dmg& g);

// Decides the same relation as mu_separated by reduction: build the
// b-history version, restrict to An(a u b^p u c), augment, and test
// undirected separation of a \ c from the past copies by c.
bool mu_separated_via_augmentation(const Dmg& g, const SeparationQuery& q);

}  // namespace musep

#endif  // MUSEP_SEPARATION_HPP
