#include "musep/marginalize.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "musep/separation.hpp"
#include "musep/walk.hpp"

namespace musep {

namespace {

// Ways of stepping out of m under the current (mutating) edge sets.  Each
// departing traversal doubles as an arriving one with the marks swapped,
// so scanning ordered pairs of these covers every triroute with middle m.
std::vector<Traversal> traversals_at(VertexId m, const std::set<EdgePair>& dir,
                                     const std::set<EdgePair>& bidir) {
  std::vector<Traversal> out;
  for (const auto& [s, t] : dir) {
    if (s == m) {
      out.push_back({Edge::dir(s, t), Mark::tail, Mark::head, t});
      if (t == m) out.push_back({Edge::dir(s, t), Mark::head, Mark::tail, s});
    } else if (t == m) {
      out.push_back({Edge::dir(s, t), Mark::head, Mark::tail, s});
    }
  }
  for (const auto& [x, y] : bidir) {
    if (x == m) {
      out.push_back({Edge::bidir(x, y), Mark::head, Mark::head, y});
    } else if (y == m) {
      out.push_back({Edge::bidir(x, y), Mark::head, Mark::head, x});
    }
  }
  return out;
}

// Runs the triroute saturation over the full vertex set and returns the
// saturated graph (not yet restricted to o).  Appends each addition to
// trace when one is supplied.
Dmg saturate(const Dmg& g, const VertexSet& o, SaturationOrder order,
             std::vector<std::pair<TriRoute, Edge>>* trace) {
  std::set<EdgePair> dir = g.directed();
  std::set<EdgePair> bidir = g.bidirected();
  VertexSet middle = ~o;

  std::deque<VertexId> work;
  std::vector<bool> queued(static_cast<size_t>(g.size()), false);
  std::vector<VertexId> mids = members(middle);
  if (order == SaturationOrder::reversed) std::reverse(mids.begin(), mids.end());
  for (VertexId m : mids) {
    work.push_back(m);
    queued[static_cast<size_t>(m)] = true;
  }

  auto has = [&](const Edge& e) {
    return e.kind == EdgeKind::directed ? dir.count({e.a, e.b}) > 0
                                        : bidir.count({e.a, e.b}) > 0;
  };
  auto enqueue = [&](VertexId v) {
    if (middle.test(static_cast<size_t>(v)) && !queued[static_cast<size_t>(v)]) {
      queued[static_cast<size_t>(v)] = true;
      work.push_back(v);
    }
  };

  while (!work.empty()) {
    VertexId m = work.front();
    work.pop_front();
    queued[static_cast<size_t>(m)] = false;
    std::vector<Traversal> legs = traversals_at(m, dir, bidir);
    if (order == SaturationOrder::reversed) std::reverse(legs.begin(), legs.end());
    // Edges added below never touch m itself, so this snapshot stays valid.
    for (const Traversal& in : legs) {
      if (in.to == m) continue;  // triroute middles differ from both endpoints
      for (const Traversal& out : legs) {
        if (out.to == m) continue;
        // `in` is read reversed: it arrives at m with mark in.departure and
        // leaves mark in.arrival at the far endpoint.
        if (in.departure == Mark::head && out.departure == Mark::head) continue;
        VertexId x = in.to, y = out.to;
        Mark mx = in.arrival, my = out.arrival;
        Edge shortcut{};
        if (mx == Mark::tail && my == Mark::head) {
          shortcut = Edge::dir(x, y);
        } else if (mx == Mark::head && my == Mark::tail) {
          shortcut = Edge::dir(y, x);
        } else if (mx == Mark::head && my == Mark::head) {
          shortcut = Edge::bidir(x, y);
        } else {
          // Two tails would force two heads at m, a colliding triroute.
          throw std::logic_error("latent_projection: tail-tail triroute");
        }
        if (has(shortcut)) continue;
        if (shortcut.kind == EdgeKind::directed) {
          dir.insert({shortcut.a, shortcut.b});
        } else {
          bidir.insert({shortcut.a, shortcut.b});
        }
        if (trace) {
          trace->push_back({TriRoute{x, m, y, in.edge, out.edge, false}, shortcut});
        }
        enqueue(x);
        enqueue(y);
      }
    }
  }
  return Dmg::from_parts(g.labels(), std::move(dir), std::move(bidir));
}

}  // namespace

Dmg latent_projection(const Dmg& g, const VertexSet& o, SaturationOrder order) {
  if (o.size() != static_cast<size_t>(g.size()))
    throw std::invalid_argument("latent_projection: vertex set size does not match graph");
  return induced_subgraph(saturate(g, o, order, nullptr), o);
}

std::vector<std::pair<TriRoute, Edge>> projection_fixpoint_trace(const Dmg& g,
                                                                 const VertexSet& o) {
  if (o.size() != static_cast<size_t>(g.size()))
    throw std::invalid_argument(
        "projection_fixpoint_trace: vertex set size does not match graph");
  std::vector<std::pair<TriRoute, Edge>> trace;
  saturate(g, o, SaturationOrder::forward, &trace);
  return trace;
}

InvarianceReport verify_marginalization_invariance(const Dmg& g, const VertexSet& o,
                                                   int cap) {
  if (o.size() != static_cast<size_t>(g.size()))
    throw std::invalid_argument(
        "verify_marginalization_invariance: vertex set size does not match graph");
  const int k = static_cast<int>(o.count());
  if (k > cap) throw CapExceededError("verify_marginalization_invariance", k, cap);

  Dmg p = latent_projection(g, o);
  std::vector<VertexId> kept = members(o);  // projection index -> g index
  auto trav_g = build_traversals(g);
  auto trav_p = build_traversals(p);

  InvarianceReport report;
  for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
    VertexSet c_p = empty_set(k);
    VertexSet c_g = empty_set(g.size());
    for (int r = 0; r < k; ++r) {
      if (mask >> r & 1) {
        c_p.set(static_cast<size_t>(r));
        c_g.set(static_cast<size_t>(kept[static_cast<size_t>(r)]));
      }
    }
    VertexSet anc_p = ancestors(p, c_p);
    VertexSet anc_g = ancestors(g, c_g);
    for (int a = 0; a < k; ++a) {
      VertexSet src_p = empty_set(k);
      src_p.set(static_cast<size_t>(a));
      VertexSet src_g = empty_set(g.size());
      src_g.set(static_cast<size_t>(kept[static_cast<size_t>(a)]));
      VertexSet reach_p = mu_reachable_heads(p, trav_p, src_p, c_p, anc_p);
      VertexSet reach_g = mu_reachable_heads(g, trav_g, src_g, c_g, anc_g);
      for (int b = 0; b < k; ++b) {
        ++report.queries;
        bool sep_p = !reach_p.test(static_cast<size_t>(b));
        bool sep_g = !reach_g.test(static_cast<size_t>(kept[static_cast<size_t>(b)]));
        if (sep_p != sep_g) {
          report.violations.push_back(
              {static_cast<VertexId>(a), static_cast<VertexId>(b), c_p, sep_g, sep_p});
        }
      }
    }
  }
  return report;
}

}  // namespace musep
