#include "musep/walk.hpp"

#include <string>

namespace musep {

std::vector<VertexId> Walk::vertices() const {
  std::vector<VertexId> out;
  out.reserve(steps.size() + 1);
  out.push_back(start);
  for (const WalkStep& s : steps) out.push_back(s.next);
  return out;
}

std::vector<std::vector<Traversal>> build_traversals(const Dmg& g) {
  std::vector<std::vector<Traversal>> t(static_cast<size_t>(g.size()));
  for (const auto& [s, d] : g.directed()) {
    Edge e = Edge::dir(s, d);
    if (s == d) {
      // A directed loop can be walked with the tail first or the head first.
      t[static_cast<size_t>(s)].push_back({e, Mark::tail, Mark::head, s});
      t[static_cast<size_t>(s)].push_back({e, Mark::head, Mark::tail, s});
    } else {
      t[static_cast<size_t>(s)].push_back({e, Mark::tail, Mark::head, d});
      t[static_cast<size_t>(d)].push_back({e, Mark::head, Mark::tail, s});
    }
  }
  for (const auto& [x, y] : g.bidirected()) {
    Edge e = Edge::bidir(x, y);
    t[static_cast<size_t>(x)].push_back({e, Mark::head, Mark::head, y});
    if (x != y) t[static_cast<size_t>(y)].push_back({e, Mark::head, Mark::head, x});
  }
  return t;
}

namespace {

// Checks one step leaving `from`: the edge must exist in g, connect `from`
// with step.next, and carry the marks its kind and orientation dictate.
bool step_is_valid(const Dmg& g, VertexId from, const WalkStep& step) {
  const Edge& e = step.edge;
  if (e.kind == EdgeKind::directed) {
    if (!g.has_directed(e.a, e.b)) return false;
    bool forward = from == e.a && step.next == e.b &&
                   step.departure == Mark::tail && step.arrival == Mark::head;
    bool backward = from == e.b && step.next == e.a &&
                    step.departure == Mark::head && step.arrival == Mark::tail;
    return forward || backward;
  }
  if (!g.has_bidirected(e.a, e.b)) return false;
  if (step.departure != Mark::head || step.arrival != Mark::head) return false;
  return (from == e.a && step.next == e.b) || (from == e.b && step.next == e.a);
}

}  // namespace

bool is_valid_walk(const Dmg& g, const Walk& w) {
  if (w.start < 0 || w.start >= g.size()) return false;
  VertexId at = w.start;
  for (const WalkStep& s : w.steps) {
    if (!step_is_valid(g, at, s)) return false;
    at = s.next;
  }
  return true;
}

bool is_route(const Dmg& g, const Walk& w) {
  if (!is_valid_walk(g, w)) return false;
  std::vector<int> count(static_cast<size_t>(g.size()), 0);
  for (VertexId v : w.vertices()) ++count[static_cast<size_t>(v)];
  VertexId fin = w.end();
  for (VertexId v = 0; v < g.size(); ++v) {
    int limit = v == fin ? 2 : 1;
    if (count[static_cast<size_t>(v)] > limit) return false;
  }
  return true;
}

bool is_mu_connecting(const Dmg& g, const Walk& w, const VertexSet& c) {
  if (!is_valid_walk(g, w) || !w.nontrivial()) return false;
  if (c.test(static_cast<size_t>(w.start))) return false;
  if (w.steps.back().arrival != Mark::head) return false;
  VertexSet anc = ancestors(g, c);
  for (size_t i = 0; i + 1 < w.steps.size(); ++i) {
    VertexId v = w.steps[i].next;
    bool collider =
        w.steps[i].arrival == Mark::head && w.steps[i + 1].departure == Mark::head;
    if (collider) {
      if (!anc.test(static_cast<size_t>(v))) return false;
    } else {
      if (c.test(static_cast<size_t>(v))) return false;
    }
  }
  return true;
}

bool walk_colliders_within(const Walk& w, const VertexSet& c) {
  for (size_t i = 0; i + 1 < w.steps.size(); ++i) {
    bool collider =
        w.steps[i].arrival == Mark::head && w.steps[i + 1].departure == Mark::head;
    if (collider && !c.test(static_cast<size_t>(w.steps[i].next))) return false;
  }
  return true;
}

std::string format_walk(const Dmg& g, const Walk& w) {
  std::string out = g.label(w.start);
  for (const WalkStep& s : w.steps) {
    if (s.edge.kind == EdgeKind::bidirected) {
      out += " <-> ";
    } else if (s.departure == Mark::tail) {
      out += " -> ";
    } else {
      out += " <- ";
    }
    out += g.label(s.next);
  }
  return out;
}

}  // namespace musep

