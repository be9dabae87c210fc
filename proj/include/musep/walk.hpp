// Walks and routes over a DMG, plus the validators used to check witness
// output.  A walk records, for every step, the traversed edge together with
// the marks encountered when leaving one endpoint and arriving at the other;
// this makes the orientation of directed-loop traversals explicit.
//
// A route is a walk in which no vertex other than the final vertex occurs
// more than once and the final vertex occurs at most twice; consequently a
// route has at most |V| steps.

#ifndef MUSEP_WALK_HPP
#define MUSEP_WALK_HPP

#include <vector>

#include "musep/graph.hpp"

namespace musep {

struct WalkStep {
  Edge edge;
  Mark departure;  // mark at the vertex the step leaves
  Mark arrival;    // mark at the vertex the step enters
  VertexId next;   // the vertex the step enters

  bool operator==(const WalkStep&) const = default;
};

struct Walk {
  VertexId start = 0;
  std::vector<WalkStep> steps;

  VertexId end() const { return steps.empty() ? start : steps.back().next; }
  int length() const { return static_cast<int>(steps.size()); }
  bool nontrivial() const { return !steps.empty(); }

  // start, then the vertex after each step.
  std::vector<VertexId> vertices() const;

  bool operator==(const Walk&) const = default;
};

// Routes are walks with the occurrence restriction; route-ness is checked by
// is_route rather than encoded in the type.
using Route = Walk;

// One way of stepping out of a vertex: the edge, the mark at the vertex left
// behind (departure) and at the vertex entered (arrival).  A directed loop
// yields two traversals (one per orientation), a bidirected loop one.
struct Traversal {
  Edge edge;
  Mark departure;
  Mark arrival;
  VertexId to;
};

// Per-vertex traversal lists in deterministic order; the shared adjacency
// structure behind all walk searches.
std::vector<std::vector<Traversal>> build_traversals(const Dmg& g);

// Structural validity: every step's edge exists in g, is incident with the
// step's endpoints, and carries the marks its kind dictates.
bool is_valid_walk(const Dmg& g, const Walk& w);

// Valid walk + route occurrence restriction.
bool is_route(const Dmg& g, const Walk& w);

// True iff w is mu-connecting given c: valid, nontrivial, starts outside c,
// every collider is in An(c), no noncollider is in c, and the final edge has
// a head at the final vertex.
bool is_mu_connecting(const Dmg& g, const Walk& w, const VertexSet& c);

// True iff every collider of w lies in c itself (the strengthened witness
// form; stronger than the An(c) requirement of is_mu_connecting).
bool walk_colliders_within(const Walk& w, const VertexSet& c);

// Human-readable rendering, e.g. "a <- b <- g -> b" with "<->" for
// bidirected steps.
std::string format_walk(const Dmg& g, const Walk& w);

}  // namespace musep

#endif  // MUSEP_WALK_HPP
