// Brute-force reference implementations.  Everything here is deliberately
// naive and size-guarded; the fast procedures are validated against these in
// the test suites.

#ifndef MUSEP_ORACLE_HPP
#define MUSEP_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "musep/equivalence.hpp"
#include "musep/graph.hpp"
#include "musep/separation.hpp"
#include "musep/walk.hpp"

namespace musep {

// Lazily enumerates every route from source to target: walks in which no
// vertex other than the target repeats and the target occurs at most twice.
// Depth-first extension with per-vertex visit counts; both orientations of a
// directed loop count as distinct steps.  Holds its own copy of the graph.
class RouteIterator {
 public:
  RouteIterator(const Dmg& g, VertexId source, VertexId target);

  // The next route, or absent when exhausted.  The trivial (empty) route is
  // emitted first when source == target.
  std::optional<Route> next();

 private:
  Dmg g_;
  VertexId source_;
  VertexId target_;
  std::vector<std::vector<Traversal>> trav_;
  std::vector<std::size_t> cursor_;  // per-depth resume position
  std::vector<WalkStep> steps_;
  std::vector<int> count_;
  bool emitted_trivial_ = false;

  VertexId at() const { return steps_.empty() ? source_ : steps_.back().next; }
};

RouteIterator enumerate_routes(const Dmg& g, VertexId source, VertexId target);

// Ground truth for mu_separated by exhaustive route scanning (routes suffice
// to witness mu-connection).  Guarded to 8 vertices.
bool mu_separated_bruteforce(const Dmg& g, const SeparationQuery& q);

// Ground truth for latent_projection straight from the definition: searches
// collider-free walks with distinct unobserved non-endpoints for every
// ordered endpoint pair and converts endpoint marks into edges.  Guarded to
// 8 vertices.
Dmg latent_projection_bruteforce(const Dmg& g, const VertexSet& o);

// One disagreement between two independence models.
struct ModelTriple {
  VertexId alpha;
  VertexId beta;
  std::uint64_t c_mask;
  bool separated_in_m1;
  bool separated_in_m2;
};

// All disagreements, in (alpha, beta, C) lexicographic order; empty iff the
// models are equal.  Throws on mismatched vertex counts.
std::vector<ModelTriple> model_diff(const IndependenceModel& m1,
                                    const IndependenceModel& m2);

// Deterministic random graphs for property tests: vertices "v0", "v1", ...;
// every ordered pair (loops included) draws for a directed edge, every
// unordered pair for a bidirected edge.  Identical (n, densities, seed)
// yield identical graphs on every platform.
Dmg random_dmg(int n, double p_directed, double p_bidirected, std::uint64_t seed);
Dmg random_dg(int n, double p_directed, std::uint64_t seed);

}  // namespace musep

#endif  // MUSEP_ORACLE_HPP
