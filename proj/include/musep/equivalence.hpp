// Inducing paths, separability, Markov equivalence, maximal DMGs and
// directed mixed equivalence graphs (DMEGs).
//
// Two DMGs over the same vertices are Markov equivalent when they induce the
// same mu-separation independence model.  Every equivalence class has a
// greatest element (a supergraph of all members); it is assembled here from
// potential-parent and potential-sibling predicates evaluated against an
// exhaustively tabulated independence model.  Separability itself needs no
// table: a pair is inseparable exactly when an inducing path joins it, and
// the set D(alpha, beta) is a universal witness separator otherwise.

#ifndef MUSEP_EQUIVALENCE_HPP
#define MUSEP_EQUIVALENCE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "musep/graph.hpp"

namespace musep {

// Flavors of inducing path.  Every flavor demands a head at the final
// vertex, no noncolliders, and all non-endpoints ancestral to {alpha, beta};
// the flavors constrain the first edge and the ancestor set:
//   any        - first edge alpha-> or alpha<->, later edges bidirected
//   bidirected - all edges bidirected
//   unidirected- first edge alpha->, later edges bidirected
//   directed   - unidirected with all non-endpoints ancestral to beta alone
enum class InducingPathKind { any, bidirected, unidirected, directed };

// True iff an inducing path of the given kind runs from alpha to beta.
// min_length (in edges) of 2 excludes the single-edge paths; paths of
// length 2 may reuse one bidirected edge (alpha <-> gamma <-> alpha).
bool inducing_path_exists(const Dmg& g, VertexId alpha, VertexId beta,
                          InducingPathKind kind, int min_length = 1);

// D(alpha, beta): vertices ancestral to {alpha, beta} that are directedly
// collider-connected to beta (some walk into beta with a head at beta whose
// every non-endpoint is a collider), with alpha itself removed.
VertexSet d_set(const Dmg& g, VertexId alpha, VertexId beta);

// Decides whether beta is separable from alpha and returns the witness
// separator D(alpha, beta) when it is; absent means no separating set
// exists at all (an inducing path joins the pair).
std::optional<VertexSet> separable(const Dmg& g, VertexId alpha, VertexId beta);

// Size cap for exhaustive model construction: the MUSEP_CAP environment
// variable when set to a positive integer, otherwise 12.
int default_model_cap();

// The full mu-separation independence model of a graph at singleton
// resolution: one bit per (source, target, conditioning set) triple.
// Set-level queries are conjunctions of these.
class IndependenceModel {
 public:
  IndependenceModel() = default;

  int n() const { return n_; }

  // c_mask encodes the conditioning set with bit v = vertex v.
  bool separated(VertexId a, VertexId b, std::uint64_t c_mask) const;
  bool separated(VertexId a, VertexId b, const VertexSet& c) const;

  // The marginal model over o: entries re-indexed to o's members.
  IndependenceModel restricted(const VertexSet& o) const;

  bool operator==(const IndependenceModel&) const = default;

 private:
  friend IndependenceModel independence_model(const Dmg& g, int cap);

  void init(int n);
  void set_separated(VertexId a, VertexId b, std::uint64_t c_mask);

  int n_ = 0;
  std::size_t words_ = 0;  // 64-bit words per (a, b) pair
  std::vector<std::uint64_t> bits_;
};

// Tabulates the model with one gated reachability search per (C, source)
// pair.  Throws CapExceededError when the graph exceeds cap vertices.
IndependenceModel independence_model(const Dmg& g, int cap = default_model_cap());

// alpha in u(beta): no conditioning set avoiding alpha separates beta from
// alpha.
bool in_u_set(const IndependenceModel& m, VertexId alpha, VertexId beta);

// Model agreement on only the triples (alpha, beta, C) with beta in C and
// alpha outside C.  For two graphs that both carry every directed and
// bidirected loop this already implies full model equality.
bool agree_on_loop_restricted_triples(const IndependenceModel& m1,
                                      const IndependenceModel& m2);

// True iff the graphs induce identical independence models.  Requires
// identical label tables.
bool markov_equivalent(const Dmg& g1, const Dmg& g2, int cap = default_model_cap());

// The abstract potential-sibling conditions (s1)-(s3) and potential-parent
// conditions (p1)-(p4), quantified directly over the tabulated model.
bool potential_sibling(const IndependenceModel& m, VertexId alpha, VertexId beta);
bool potential_parent(const IndependenceModel& m, VertexId alpha, VertexId beta);

// The greatest element of g's Markov equivalence class: directed edges are
// the potential-parent pairs, bidirected edges the potential-sibling pairs.
// With cross_validate set, every edge added relative to g is independently
// re-checked by markov_equivalent(g, g + e); a failure throws
// std::logic_error.
Dmg maximal_dmg(const Dmg& g, int cap = default_model_cap(),
                bool cross_validate = false);

// True iff g equals the maximal element of its own class.
bool is_maximal(const Dmg& g, int cap = default_model_cap());

// A Markov equivalence class rendered as one annotated graph: the maximal
// element with every individually removable non-loop edge dashed.  A dashed
// edge is absent from at least one member; a solid non-loop edge is present
// in every member.  Loops are never dashed.
struct Dmeg {
  Dmg maximal;
  std::set<EdgePair> dashed_directed;
  std::set<EdgePair> dashed_bidirected;  // canonical pairs

  bool is_dashed(const Edge& e) const;
};

// Builds the DMEG of a maximal DMG.  One inducing-path test decides each
// directed edge, two decide each bidirected edge; no subset enumeration.
// Throws std::invalid_argument when n is not maximal.
Dmeg dmeg(const Dmg& n, int cap = default_model_cap());

// All members of n's Markov equivalence class with n's loops held fixed:
// subsets of the non-loop edges whose graph is Markov equivalent to n.
// Throws when n is not maximal or has more than edge_cap non-loop edges.
std::vector<Dmg> equivalence_class(const Dmg& n, int cap = default_model_cap(),
                                   int edge_cap = 16);

}  // namespace musep

#endif  // MUSEP_EQUIVALENCE_HPP
