#ifndef MUSEP_TIMESERIES_HPP
#define MUSEP_TIMESERIES_HPP

#include <utility>

#include "musep/graph.hpp"
#include "musep/separation.hpp"

namespace musep {

// Finite time-slice expansion of a directed graph.  Vertex (v, t) of the
// unrolled DAG has index t * base_n + v and label "<base label>@<t>"; there
// is an edge (u, s) -> (v, t) exactly when u -> v is an edge of the base
// graph and s < t.  The result is acyclic and loop-free even when the base
// graph has directed loops.
struct UnrolledDag {
  Dmg dag;
  int base_n = 0;   // vertex count of the base graph
  int horizon = 0;  // largest time index; slices run 0..horizon

  VertexId node(VertexId v, int t) const { return t * base_n + v; }
};

// A set of unrolled vertices described by a base-graph vertex set and a time
// selector: either every copy up to and including time t, or the copies at
// time t only.
struct SliceSet {
  VertexSet base;
  int t = 0;
  bool cumulative = false;  // true: times 0..t; false: exactly t

  static SliceSet up_to(VertexSet base, int t) { return {std::move(base), t, true}; }
  static SliceSet exactly(VertexSet base, int t) { return {std::move(base), t, false}; }

  VertexSet materialize(const UnrolledDag& u) const;
};

// Unrolls a directed graph (no bidirected edges allowed) over time slices
// 0..T.  Requires T >= 0.
UnrolledDag unroll(const Dmg& d, int T);

// Horizon at which the rolled and unrolled separation statements are
// guaranteed to agree: 3(|E|+1)+1 for |E| the edge count of the base graph.
int proof_horizon(const Dmg& d);

// Evaluates a separation statement both in the rolled graph and in its
// unrolled version: rolled is the mu-separation of b from a given c in d;
// unrolled is the d-separation, in unroll(d, T), of the copies of b at time
// T from the copies of a\c at times 0..T-1 given the copies of c at times
// 0..T-1.  rolled implies unrolled for every T >= 1, and the two agree once
// T reaches proof_horizon(d).
std::pair<bool, bool> check_rolling_correspondence(const Dmg& d, const VertexSet& a,
                                                   const VertexSet& b, const VertexSet& c,
                                                   int T);

}  // namespace musep

#endif  // MUSEP_TIMESERIES_HPP
