// Core representation of directed mixed graphs (DMGs): vertices with string
// labels, directed edges (ordered pairs, loops allowed) and bidirected edges
// (unordered pairs, loops allowed).  Between any two distinct vertices a and b
// a DMG can hold at most the three non-loop edges a->b, b->a and a<->b; each
// vertex can additionally hold one directed and one bidirected loop.
//
// Graphs are immutable values: every mutating operation returns a new graph.

#ifndef MUSEP_GRAPH_HPP
#define MUSEP_GRAPH_HPP

#include <compare>
#include <initializer_list>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace musep {

// Vertices are dense indices into a graph's label table.  Labels are only for
// input/output; all algorithms work on indices so that vertex sets can be
// bit-encoded.
using VertexId = int;

// A set of vertices of one fixed graph, sized to that graph's vertex count.
using VertexSet = boost::dynamic_bitset<>;

// Thrown by the exhaustive operations (independence models, invariance
// verification, class enumeration) when the input exceeds their size cap.
class CapExceededError : public std::runtime_error {
 public:
  CapExceededError(const std::string& op, int required, int cap);
  int required() const { return required_; }
  int cap() const { return cap_; }

 private:
  int required_;
  int cap_;
};

VertexSet empty_set(int n);
VertexSet full_set(int n);
VertexSet make_set(int n, std::initializer_list<VertexId> vs);
VertexSet make_set(int n, const std::vector<VertexId>& vs);

// Ascending list of the members of a vertex set.
std::vector<VertexId> members(const VertexSet& s);

// Edge marks.  Every edge end carries a mark: directed edges have a tail at
// the source and a head at the target, bidirected edges have heads at both
// ends.
enum class Mark { head, tail };

enum class EdgeKind { directed, bidirected };

// A single edge.  For a directed edge, a is the source and b the target; for
// a bidirected edge the endpoints are stored in canonical (sorted) order so
// that a<->b and b<->a compare equal.
struct Edge {
  EdgeKind kind;
  VertexId a;
  VertexId b;

  static Edge dir(VertexId source, VertexId target) {
    return Edge{EdgeKind::directed, source, target};
  }
  static Edge bidir(VertexId x, VertexId y) {
    if (x > y) std::swap(x, y);
    return Edge{EdgeKind::bidirected, x, y};
  }

  bool is_loop() const { return a == b; }
  auto operator<=>(const Edge&) const = default;
};

using EdgePair = std::pair<VertexId, VertexId>;

// A directed mixed graph.  Construct through make_dmg (label-based, fully
// validated) or the index-based named constructor from_parts.
class Dmg {
 public:
  Dmg() = default;

  // Index-based constructor; validates ranges and canonicalizes bidirected
  // pairs.  Throws std::invalid_argument on bad input.
  static Dmg from_parts(std::vector<std::string> labels,
                        std::set<EdgePair> directed,
                        std::set<EdgePair> bidirected);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const;
  std::optional<VertexId> index_of(std::string_view label) const;

  const std::set<EdgePair>& directed() const { return directed_; }
  const std::set<EdgePair>& bidirected() const { return bidirected_; }

  bool has_directed(VertexId s, VertexId t) const;
  bool has_bidirected(VertexId x, VertexId y) const;
  bool has_edge(const Edge& e) const;
  bool is_dg() const { return bidirected_.empty(); }

  // All edges in a deterministic order: directed ascending, then bidirected.
  std::vector<Edge> edges() const;
  std::vector<Edge> nonloop_edges() const;

  bool operator==(const Dmg&) const = default;

 private:
  std::vector<std::string> labels_;
  std::set<EdgePair> directed_;    // ordered (source, target) pairs
  std::set<EdgePair> bidirected_;  // canonical pairs with first <= second
};

// Builds a DMG from labels and label pairs.  Labels must be unique and
// non-empty; every endpoint must be a listed label; duplicate edges are
// rejected (hence vector inputs, so duplicates are visible).
Dmg make_dmg(const std::vector<std::string>& labels,
             const std::vector<std::pair<std::string, std::string>>& directed,
             const std::vector<std::pair<std::string, std::string>>& bidirected);

// An(c): all vertices with a directed path (possibly trivial) into some
// vertex of c.  Always c subset of An(c).
VertexSet ancestors(const Dmg& g, const VertexSet& c);

// pa(b): sources of directed edges into b.  A vertex with a directed loop is
// its own parent.
VertexSet parents(const Dmg& g, VertexId b);

// Subgraph induced by o: vertices of o (in ascending index order) and exactly
// the edges with both endpoints in o.
Dmg induced_subgraph(const Dmg& g, const VertexSet& o);

// True iff g2's edges are a subset of g1's.  Requires identical label tables.
bool is_supergraph(const Dmg& g1, const Dmg& g2);

// Value-semantic single-edge mutations.  add_edge rejects duplicates,
// remove_edge rejects absent edges.
Dmg add_edge(const Dmg& g, const Edge& e);
Dmg remove_edge(const Dmg& g, const Edge& e);

// True iff every bidirected edge a<->b comes with both bidirected loops
// a<->a and b<->b.  This is the property characterizing DMGs that are latent
// projections of directed graphs.
bool satisfies_self_sibling_property(const Dmg& g);

// The canonical directed graph of g: one fresh auxiliary vertex m per
// bidirected edge {a,b}, with edges m->a and m->b, and all bidirected edges
// dropped.  Auxiliary labels are "m<a>_<b>" with a numeric suffix on
// collision.
Dmg canonical_dg(const Dmg& g);

// Appends "_2", "_3", ... to base until it differs from every existing
// label.  Shared by canonical_dg and the history-version construction.
std::string unique_label(const std::vector<std::string>& existing,
                         const std::string& base);

// A plain undirected graph (used for the augmented-graph separation
// criterion).  No loops.
struct UndirectedGraph {
  std::vector<std::string> labels;
  std::set<EdgePair> edges;  // canonical pairs, first < second

  int size() const { return static_cast<int>(labels.size()); }
  bool adjacent(VertexId x, VertexId y) const;
};

// True iff every path from a to b passes through c (plain BFS avoiding c).
// a, b, c must be pairwise disjoint.
bool undirected_separated(const UndirectedGraph& g, const VertexSet& a,
                          const VertexSet& b, const VertexSet& c);

}  // namespace musep

#endif  // MUSEP_GRAPH_HPP
