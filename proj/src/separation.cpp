#include "musep/separation.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace musep {

namespace {

void check_query(const Dmg& g, const SeparationQuery& q) {
  size_t n = static_cast<size_t>(g.size());
  if (q.a.size() != n || q.b.size() != n || q.c.size() != n)
    throw std::invalid_argument("separation query: vertex set size does not match graph");
}

void check_set(const Dmg& g, const VertexSet& s, const char* who) {
  if (s.size() != static_cast<size_t>(g.size()))
    throw std::invalid_argument(std::string(who) + ": vertex set size does not match graph");
}

// State encoding for the gated walk search: (vertex, arrival mark).
inline size_t state_of(VertexId v, Mark arrival) {
  return static_cast<size_t>(v) * 2 + (arrival == Mark::head ? 0 : 1);
}

// The junction gate: may a walk arriving at v with mark `arrival` continue
// with a step departing with mark `departure`?  Colliders must be ancestors
// of c, noncolliders must avoid c.
inline bool gate(VertexId v, Mark arrival, Mark departure, const VertexSet& c,
                 const VertexSet& anc_c) {
  if (arrival == Mark::head && departure == Mark::head)
    return anc_c.test(static_cast<size_t>(v));
  return !c.test(static_cast<size_t>(v));
}

}  // namespace

VertexSet mu_reachable_heads(const Dmg& g,
                             const std::vector<std::vector<Traversal>>& trav,
                             const VertexSet& a, const VertexSet& c,
                             const VertexSet& anc_c) {
  size_t n = static_cast<size_t>(g.size());
  std::vector<bool> seen(2 * n, false);
  std::deque<size_t> queue;
  VertexSet sources = a & ~c;
  for (size_t v = sources.find_first(); v != VertexSet::npos;
       v = sources.find_next(v)) {
    // The first step leaves an endpoint, so no junction gate applies.
    for (const Traversal& t : trav[v]) {
      size_t s = state_of(t.to, t.arrival);
      if (!seen[s]) {
        seen[s] = true;
        queue.push_back(s);
      }
    }
  }
  while (!queue.empty()) {
    size_t s = queue.front();
    queue.pop_front();
    VertexId v = static_cast<VertexId>(s / 2);
    Mark arrival = s % 2 == 0 ? Mark::head : Mark::tail;
    for (const Traversal& t : trav[static_cast<size_t>(v)]) {
      if (!gate(v, arrival, t.departure, c, anc_c)) continue;
      size_t s2 = state_of(t.to, t.arrival);
      if (!seen[s2]) {
        seen[s2] = true;
        queue.push_back(s2);
      }
    }
  }
  VertexSet heads = empty_set(g.size());
  for (VertexId v = 0; v < g.size(); ++v)
    if (seen[state_of(v, Mark::head)]) heads.set(static_cast<size_t>(v));
  return heads;
}

bool mu_separated(const Dmg& g, const SeparationQuery& q) {
  check_query(g, q);
  if ((q.a & ~q.c).none() || q.b.none()) return true;
  auto trav = build_traversals(g);
  VertexSet anc_c = ancestors(g, q.c);
  VertexSet heads = mu_reachable_heads(g, trav, q.a, q.c, anc_c);
  return (heads & q.b).none();
}

namespace {

// Tracked variant of the gated search: remembers, for every discovered
// state, the step that first reached it and the state it came from (-1 for
// states seeded directly from a source vertex).
struct TrackedSearch {
  std::vector<int> prev;         // previous state id, -1 for seeds, -2 unvisited
  std::vector<WalkStep> in_step; // the step that discovered the state
  std::vector<VertexId> seed;    // for seeds, the source vertex alpha
};

std::optional<size_t> run_tracked_search(const Dmg& g, const SeparationQuery& q,
                                         TrackedSearch& out) {
  size_t n = static_cast<size_t>(g.size());
  auto trav = build_traversals(g);
  VertexSet anc_c = ancestors(g, q.c);
  out.prev.assign(2 * n, -2);
  out.in_step.assign(2 * n, WalkStep{});
  out.seed.assign(2 * n, -1);
  std::deque<size_t> queue;
  auto accept = [&](size_t s) {
    return s % 2 == 0 && q.b.test(s / 2);
  };
  VertexSet sources = q.a & ~q.c;
  for (size_t v = sources.find_first(); v != VertexSet::npos;
       v = sources.find_next(v)) {
    for (const Traversal& t : trav[v]) {
      size_t s = state_of(t.to, t.arrival);
      if (out.prev[s] != -2) continue;
      out.prev[s] = -1;
      out.in_step[s] = {t.edge, t.departure, t.arrival, t.to};
      out.seed[s] = static_cast<VertexId>(v);
      if (accept(s)) return s;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    size_t s = queue.front();
    queue.pop_front();
    VertexId v = static_cast<VertexId>(s / 2);
    Mark arrival = s % 2 == 0 ? Mark::head : Mark::tail;
    for (const Traversal& t : trav[static_cast<size_t>(v)]) {
      if (!gate(v, arrival, t.departure, q.c, anc_c)) continue;
      size_t s2 = state_of(t.to, t.arrival);
      if (out.prev[s2] != -2) continue;
      out.prev[s2] = static_cast<int>(s);
      out.in_step[s2] = {t.edge, t.departure, t.arrival, t.to};
      if (accept(s2)) return s2;
      queue.push_back(s2);
    }
  }
  return std::nullopt;
}

Walk reconstruct_walk(const TrackedSearch& ts, size_t accept_state) {
  std::vector<WalkStep> rev;
  int s = static_cast<int>(accept_state);
  while (true) {
    rev.push_back(ts.in_step[static_cast<size_t>(s)]);
    int p = ts.prev[static_cast<size_t>(s)];
    if (p == -1) {
      Walk w;
      w.start = ts.seed[static_cast<size_t>(s)];
      w.steps.assign(rev.rbegin(), rev.rend());
      return w;
    }
    s = p;
  }
}

// Removes the steps between two occurrences of the same vertex, merging the
// occurrence at vertex-position i with the one at vertex-position j.
void splice_out(Walk& w, size_t i, size_t j) {
  w.steps.erase(w.steps.begin() + static_cast<std::ptrdiff_t>(i),
                w.steps.begin() + static_cast<std::ptrdiff_t>(j));
}

// Reduces a mu-connecting walk to a mu-connecting route by excising cycles.
// Junction soundness for each splice follows the route-reduction argument:
// splicing the earliest occurrence of the first vertex to repeat (and, for
// the final vertex, the first with the second-to-last occurrence) leaves a
// junction that is either a noncollider already known to avoid c or a
// collider with a directed path into An(c) along the removed prefix.
Walk reduce_to_route(Walk w, VertexId final_vertex) {
  // Phase 1: no vertex other than the final one may repeat.
  for (;;) {
    std::vector<VertexId> vs = w.vertices();
    std::vector<size_t> first_at;
    bool spliced = false;
    for (size_t j = 0; j < vs.size() && !spliced; ++j) {
      if (vs[j] == final_vertex) continue;
      for (size_t i = 0; i < j; ++i) {
        if (vs[i] == vs[j]) {
          splice_out(w, i, j);
          spliced = true;
          break;
        }
      }
    }
    if (!spliced) break;
  }
  // Phase 2: the final vertex may occur at most twice.
  for (;;) {
    std::vector<VertexId> vs = w.vertices();
    std::vector<size_t> occ;
    for (size_t k = 0; k < vs.size(); ++k)
      if (vs[k] == final_vertex) occ.push_back(k);
    if (occ.size() <= 2) break;
    splice_out(w, occ.front(), occ[occ.size() - 2]);
  }
  return w;
}

}  // namespace

std::optional<Route> find_mu_connecting_route(const Dmg& g, const SeparationQuery& q) {
  check_query(g, q);
  if ((q.a & ~q.c).none() || q.b.none()) return std::nullopt;
  TrackedSearch ts;
  auto hit = run_tracked_search(g, q, ts);
  if (!hit) return std::nullopt;
  Walk w = reconstruct_walk(ts, *hit);
  Route r = reduce_to_route(std::move(w), static_cast<VertexId>(*hit / 2));
  if (!is_route(g, r) || !is_mu_connecting(g, r, q.c))
    throw std::logic_error("find_mu_connecting_route: witness failed validation");
  return r;
}

std::optional<Walk> find_mu_connecting_walk_colliders_in_c(const Dmg& g,
                                                           const SeparationQuery& q) {
  auto route = find_mu_connecting_route(g, q);
  if (!route) return std::nullopt;
  Walk w = *route;
  // Detour every collider outside c down a shortest directed path into c and
  // straight back.  The detour's own junctions are noncolliders off c
  // (shortest path) except the turning point, a collider inside c.
  for (size_t i = 0; i + 1 < w.steps.size(); ++i) {
    VertexId v = w.steps[i].next;
    bool collider =
        w.steps[i].arrival == Mark::head && w.steps[i + 1].departure == Mark::head;
    if (!collider || q.c.test(static_cast<size_t>(v))) continue;
    // Shortest directed path v -> ... -> delta with delta in c.
    std::vector<VertexId> par(static_cast<size_t>(g.size()), -1);
    std::deque<VertexId> queue{v};
    par[static_cast<size_t>(v)] = v;
    VertexId delta = -1;
    while (!queue.empty() && delta < 0) {
      VertexId u = queue.front();
      queue.pop_front();
      for (const auto& [s, t] : g.directed()) {
        if (s != u || par[static_cast<size_t>(t)] >= 0) continue;
        par[static_cast<size_t>(t)] = u;
        if (q.c.test(static_cast<size_t>(t))) {
          delta = t;
          break;
        }
        queue.push_back(t);
      }
    }
    if (delta < 0)
      throw std::logic_error(
          "find_mu_connecting_walk_colliders_in_c: collider is not an ancestor of c");
    std::vector<VertexId> path;  // v, ..., delta
    for (VertexId u = delta;; u = par[static_cast<size_t>(u)]) {
      path.push_back(u);
      if (u == v) break;
    }
    std::reverse(path.begin(), path.end());
    std::vector<WalkStep> detour;
    for (size_t k = 0; k + 1 < path.size(); ++k)
      detour.push_back({Edge::dir(path[k], path[k + 1]), Mark::tail, Mark::head,
                        path[k + 1]});
    for (size_t k = path.size() - 1; k > 0; --k)
      detour.push_back({Edge::dir(path[k - 1], path[k]), Mark::head, Mark::tail,
                        path[k - 1]});
    w.steps.insert(w.steps.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                   detour.begin(), detour.end());
    i += detour.size();
  }
  if (!is_mu_connecting(g, w, q.c) || !walk_colliders_within(w, q.c))
    throw std::logic_error(
        "find_mu_connecting_walk_colliders_in_c: witness failed validation");
  return w;
}

bool mu_separated_sets_decomposes(const Dmg& g, const SeparationQuery& q) {
  check_query(g, q);
  for (size_t alpha = q.a.find_first(); alpha != VertexSet::npos;
       alpha = q.a.find_next(alpha)) {
    for (size_t beta = q.b.find_first(); beta != VertexSet::npos;
         beta = q.b.find_next(beta)) {
      SeparationQuery single{empty_set(g.size()), empty_set(g.size()), q.c};
      single.a.set(alpha);
      single.b.set(beta);
      if (!mu_separated(g, single)) return false;
    }
  }
  return true;
}

Dmg bereaved_graph(const Dmg& g, const VertexSet& b) {
  check_set(g, b, "bereaved_graph");
  if (!g.is_dg())
    throw std::invalid_argument("bereaved_graph: input graph has bidirected edges");
  std::set<EdgePair> directed;
  for (const auto& [s, t] : g.directed())
    if (s == t || !b.test(static_cast<size_t>(s))) directed.insert({s, t});
  return Dmg::from_parts(g.labels(), directed, {});
}

bool delta_separated(const Dmg& g, const VertexSet& a, const VertexSet& b,
                     const VertexSet& c) {
  check_set(g, a, "delta_separated");
  check_set(g, b, "delta_separated");
  check_set(g, c, "delta_separated");
  if (!g.is_dg())
    throw std::invalid_argument("delta_separated: input graph has bidirected edges");
  if ((a & b).any() || (a & c).any() || (b & c).any())
    throw std::invalid_argument("delta_separated: vertex sets must be pairwise disjoint");
  if (a.none() || b.none())
    throw std::invalid_argument("delta_separated: a and b must be nonempty");
  return mu_separated(bereaved_graph(g, b), {a, b, c});
}

bool m_separated(const Dmg& g, const VertexSet& a, const VertexSet& b,
                 const VertexSet& c) {
  check_set(g, a, "m_separated");
  check_set(g, b, "m_separated");
  check_set(g, c, "m_separated");
  if ((a & b).any() || (a & c).any() || (b & c).any())
    throw std::invalid_argument("m_separated: vertex sets must be pairwise disjoint");
  size_t n = static_cast<size_t>(g.size());
  auto trav = build_traversals(g);
  VertexSet anc_c = ancestors(g, c);
  std::vector<bool> seen(2 * n, false);
  std::deque<size_t> queue;
  for (size_t v = a.find_first(); v != VertexSet::npos; v = a.find_next(v)) {
    for (const Traversal& t : trav[v]) {
      size_t s = state_of(t.to, t.arrival);
      if (!seen[s]) {
        seen[s] = true;
        queue.push_back(s);
      }
    }
  }
  while (!queue.empty()) {
    size_t s = queue.front();
    queue.pop_front();
    VertexId v = static_cast<VertexId>(s / 2);
    if (b.test(static_cast<size_t>(v))) return false;  // any arrival mark connects
    Mark arrival = s % 2 == 0 ? Mark::head : Mark::tail;
    for (const Traversal& t : trav[static_cast<size_t>(v)]) {
      if (!gate(v, arrival, t.departure, c, anc_c)) continue;
      size_t s2 = state_of(t.to, t.arrival);
      if (!seen[s2]) {
        seen[s2] = true;
        queue.push_back(s2);
      }
    }
  }
  return true;
}

HistoryVersion history_version(const Dmg& g, const VertexSet& b) {
  check_set(g, b, "history_version");
  std::vector<std::string> labels = g.labels();
  std::vector<VertexId> past_of(static_cast<size_t>(g.size()), -1);
  for (size_t v = b.find_first(); v != VertexSet::npos; v = b.find_next(v)) {
    past_of[v] = static_cast<VertexId>(labels.size());
    labels.push_back(unique_label(labels, g.label(static_cast<VertexId>(v)) + "^p"));
  }
  std::set<EdgePair> directed = g.directed();
  std::set<EdgePair> bidirected = g.bidirected();
  for (const auto& [s, t] : g.directed())
    if (b.test(static_cast<size_t>(t))) directed.insert({s, past_of[static_cast<size_t>(t)]});
  for (const auto& [x, y] : g.bidirected()) {
    if (b.test(static_cast<size_t>(y))) bidirected.insert({x, past_of[static_cast<size_t>(y)]});
    if (b.test(static_cast<size_t>(x))) bidirected.insert({y, past_of[static_cast<size_t>(x)]});
  }
  return {Dmg::from_parts(labels, directed, bidirected), std::move(past_of)};
}

UndirectedGraph augmented_graph(const Dmg& g) {
  size_t n = static_cast<size_t>(g.size());
  auto trav = build_traversals(g);
  UndirectedGraph ug;
  ug.labels = g.labels();
  for (VertexId gamma = 0; gamma < g.size(); ++gamma) {
    // Walks whose every non-endpoint is a collider: after the first step,
    // only head-arrivals may continue, and only via head departures.
    std::vector<bool> seen(2 * n, false);
    std::deque<size_t> queue;
    for (const Traversal& t : trav[static_cast<size_t>(gamma)]) {
      size_t s = state_of(t.to, t.arrival);
      if (!seen[s]) {
        seen[s] = true;
        queue.push_back(s);
      }
    }
    while (!queue.empty()) {
      size_t s = queue.front();
      queue.pop_front();
      if (s % 2 != 0) continue;  // a tail arrival can only end the walk
      VertexId v = static_cast<VertexId>(s / 2);
      for (const Traversal& t : trav[static_cast<size_t>(v)]) {
        if (t.departure != Mark::head) continue;
        size_t s2 = state_of(t.to, t.arrival);
        if (!seen[s2]) {
          seen[s2] = true;
          queue.push_back(s2);
        }
      }
    }
    for (VertexId v = 0; v < g.size(); ++v) {
      if (v == gamma) continue;
      if (seen[state_of(v, Mark::head)] || seen[state_of(v, Mark::tail)]) {
        ug.edges.insert({std::min(gamma, v), std::max(gamma, v)});
      }
    }
  }
  return ug;
}

namespace {

// Re-indexes a vertex set through induced_subgraph's rank remapping.
VertexSet remap_into(const VertexSet& s, const VertexSet& kept) {
  VertexSet out(kept.count());
  size_t rank = 0;
  for (size_t v = kept.find_first(); v != VertexSet::npos; v = kept.find_next(v), ++rank)
    if (s.test(v)) out.set(rank);
  return out;
}

}  // namespace

bool mu_separated_via_augmentation(const Dmg& g, const SeparationQuery& q) {
  check_query(g, q);
  HistoryVersion h = history_version(g, q.b);
  size_t hn = static_cast<size_t>(h.graph.size());
  auto widen = [&](const VertexSet& s) {
    VertexSet out(hn);
    for (size_t v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) out.set(v);
    return out;
  };
  VertexSet a = widen(q.a), c = widen(q.c);
  VertexSet bp(hn);
  for (size_t v = q.b.find_first(); v != VertexSet::npos; v = q.b.find_next(v))
    bp.set(static_cast<size_t>(h.past_of[v]));
  VertexSet kept = ancestors(h.graph, a | bp | c);
  Dmg sub = induced_subgraph(h.graph, kept);
  UndirectedGraph ug = augmented_graph(sub);
  return undirected_separated(ug, remap_into(a & ~c, kept), remap_into(bp, kept),
                              remap_into(c, kept));
}

}  // namespace musep
