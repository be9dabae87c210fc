#include "musep/equivalence.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>

#include "musep/separation.hpp"
#include "musep/walk.hpp"

namespace musep {

namespace {

void check_vertex(const Dmg& g, VertexId v, const char* who) {
  if (v < 0 || v >= g.size())
    throw std::invalid_argument(std::string(who) + ": vertex out of range");
}

}  // namespace

bool inducing_path_exists(const Dmg& g, VertexId alpha, VertexId beta,
                          InducingPathKind kind, int min_length) {
  check_vertex(g, alpha, "inducing_path_exists");
  check_vertex(g, beta, "inducing_path_exists");
  if (min_length < 1 || min_length > 2)
    throw std::invalid_argument("inducing_path_exists: min_length must be 1 or 2");

  const bool first_directed_ok = kind != InducingPathKind::bidirected;
  const bool first_bidirected_ok =
      kind == InducingPathKind::any || kind == InducingPathKind::bidirected;

  if (min_length <= 1) {
    if (first_directed_ok && g.has_directed(alpha, beta)) return true;
    if (first_bidirected_ok && g.has_bidirected(alpha, beta)) return true;
  }

  // Longer paths: the head-at-beta and no-noncollider requirements force
  // every edge after the first to be bidirected, so the search is a
  // reachability question over bidirected edges inside the allowed
  // non-endpoint set.
  VertexSet endpoint_set = empty_set(g.size());
  endpoint_set.set(static_cast<size_t>(alpha));
  endpoint_set.set(static_cast<size_t>(beta));
  VertexSet allowed = kind == InducingPathKind::directed
                          ? ancestors(g, make_set(g.size(), {beta}))
                          : ancestors(g, endpoint_set);
  allowed.reset(static_cast<size_t>(alpha));
  allowed.reset(static_cast<size_t>(beta));

  std::vector<std::vector<VertexId>> adj(static_cast<size_t>(g.size()));
  for (const auto& [x, y] : g.bidirected()) {
    adj[static_cast<size_t>(x)].push_back(y);
    if (x != y) adj[static_cast<size_t>(y)].push_back(x);
  }

  VertexSet seen = empty_set(g.size());
  std::deque<VertexId> work;
  for (size_t v = allowed.find_first(); v != VertexSet::npos;
       v = allowed.find_next(v)) {
    VertexId gamma = static_cast<VertexId>(v);
    bool entered = (first_directed_ok && g.has_directed(alpha, gamma)) ||
                   (first_bidirected_ok && g.has_bidirected(alpha, gamma));
    if (entered) {
      seen.set(v);
      work.push_back(gamma);
    }
  }
  while (!work.empty()) {
    VertexId v = work.front();
    work.pop_front();
    if (g.has_bidirected(v, beta)) return true;
    for (VertexId w : adj[static_cast<size_t>(v)]) {
      if (allowed.test(static_cast<size_t>(w)) && !seen.test(static_cast<size_t>(w))) {
        seen.set(static_cast<size_t>(w));
        work.push_back(w);
      }
    }
  }
  return false;
}

VertexSet d_set(const Dmg& g, VertexId alpha, VertexId beta) {
  check_vertex(g, alpha, "d_set");
  check_vertex(g, beta, "d_set");
  size_t n = static_cast<size_t>(g.size());
  auto trav = build_traversals(g);

  // Reverse search from beta: a walk into beta with a head at beta and all
  // non-endpoints colliders is, read backwards, a walk leaving beta on a
  // head that keeps departing on heads from head-arrivals.
  std::vector<bool> seen(2 * n, false);
  std::deque<size_t> work;
  for (const Traversal& t : trav[static_cast<size_t>(beta)]) {
    if (t.departure != Mark::head) continue;
    size_t s = static_cast<size_t>(t.to) * 2 + (t.arrival == Mark::head ? 0 : 1);
    if (!seen[s]) {
      seen[s] = true;
      work.push_back(s);
    }
  }
  while (!work.empty()) {
    size_t s = work.front();
    work.pop_front();
    if (s % 2 != 0) continue;  // tail arrivals terminate the (reversed) walk
    VertexId v = static_cast<VertexId>(s / 2);
    for (const Traversal& t : trav[static_cast<size_t>(v)]) {
      if (t.departure != Mark::head) continue;
      size_t s2 = static_cast<size_t>(t.to) * 2 + (t.arrival == Mark::head ? 0 : 1);
      if (!seen[s2]) {
        seen[s2] = true;
        work.push_back(s2);
      }
    }
  }
  VertexSet connected = empty_set(g.size());
  for (VertexId v = 0; v < g.size(); ++v) {
    if (seen[static_cast<size_t>(v) * 2] || seen[static_cast<size_t>(v) * 2 + 1])
      connected.set(static_cast<size_t>(v));
  }

  VertexSet endpoint_set = empty_set(g.size());
  endpoint_set.set(static_cast<size_t>(alpha));
  endpoint_set.set(static_cast<size_t>(beta));
  VertexSet result = connected & ancestors(g, endpoint_set);
  result.reset(static_cast<size_t>(alpha));
  return result;
}

std::optional<VertexSet> separable(const Dmg& g, VertexId alpha, VertexId beta) {
  if (inducing_path_exists(g, alpha, beta, InducingPathKind::any)) return std::nullopt;
  return d_set(g, alpha, beta);
}

int default_model_cap() {
  if (const char* env = std::getenv("MUSEP_CAP")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 25) return static_cast<int>(v);
  }
  return 12;
}

void IndependenceModel::init(int n) {
  n_ = n;
  words_ = n >= 6 ? (std::size_t{1} << n) >> 6 : 1;
  bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * words_, 0);
}

void IndependenceModel::set_separated(VertexId a, VertexId b, std::uint64_t c_mask) {
  std::size_t pair = (static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(b)) *
                     words_;
  bits_[pair + (c_mask >> 6)] |= std::uint64_t{1} << (c_mask & 63);
}

bool IndependenceModel::separated(VertexId a, VertexId b, std::uint64_t c_mask) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_)
    throw std::invalid_argument("IndependenceModel::separated: vertex out of range");
  std::size_t pair = (static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(b)) *
                     words_;
  return (bits_[pair + (c_mask >> 6)] >> (c_mask & 63)) & 1;
}

bool IndependenceModel::separated(VertexId a, VertexId b, const VertexSet& c) const {
  if (c.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("IndependenceModel::separated: vertex set size mismatch");
  std::uint64_t mask = 0;
  for (size_t v = c.find_first(); v != VertexSet::npos; v = c.find_next(v))
    mask |= std::uint64_t{1} << v;
  return separated(a, b, mask);
}

IndependenceModel IndependenceModel::restricted(const VertexSet& o) const {
  if (o.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("IndependenceModel::restricted: vertex set size mismatch");
  std::vector<VertexId> kept = members(o);
  const int k = static_cast<int>(kept.size());
  IndependenceModel out;
  out.init(k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::uint64_t lifted = 0;
        for (int r = 0; r < k; ++r) {
          if (mask >> r & 1)
            lifted |= std::uint64_t{1} << kept[static_cast<std::size_t>(r)];
        }
        if (separated(kept[static_cast<std::size_t>(a)],
                      kept[static_cast<std::size_t>(b)], lifted)) {
          out.set_separated(a, b, mask);
        }
      }
    }
  }
  return out;
}

IndependenceModel independence_model(const Dmg& g, int cap) {
  const int n = g.size();
  if (n > cap) throw CapExceededError("independence_model", n, cap);
  if (n > 25) throw CapExceededError("independence_model", n, 25);
  IndependenceModel m;
  m.init(n);
  auto trav = build_traversals(g);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    std::uint64_t c_mask = i ^ (i >> 1);  // Gray-code subset order
    VertexSet c = empty_set(n);
    for (int v = 0; v < n; ++v)
      if (c_mask >> v & 1) c.set(static_cast<size_t>(v));
    VertexSet anc = ancestors(g, c);
    for (VertexId alpha = 0; alpha < n; ++alpha) {
      if (c_mask >> alpha & 1) {
        for (VertexId beta = 0; beta < n; ++beta)
          m.set_separated(alpha, beta, c_mask);
        continue;
      }
      VertexSet src = empty_set(n);
      src.set(static_cast<size_t>(alpha));
      VertexSet reach = mu_reachable_heads(g, trav, src, c, anc);
      for (VertexId beta = 0; beta < n; ++beta) {
        if (!reach.test(static_cast<size_t>(beta)))
          m.set_separated(alpha, beta, c_mask);
      }
    }
  }
  return m;
}

bool in_u_set(const IndependenceModel& m, VertexId alpha, VertexId beta) {
  const std::uint64_t lim = std::uint64_t{1} << m.n();
  for (std::uint64_t c = 0; c < lim; ++c) {
    if (c >> alpha & 1) continue;  // only C avoiding alpha count
    if (m.separated(alpha, beta, c)) return false;
  }
  return true;
}

bool agree_on_loop_restricted_triples(const IndependenceModel& m1,
                                      const IndependenceModel& m2) {
  if (m1.n() != m2.n())
    throw std::invalid_argument(
        "agree_on_loop_restricted_triples: models over different vertex counts");
  const int n = m1.n();
  const std::uint64_t lim = std::uint64_t{1} << n;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      for (std::uint64_t c = 0; c < lim; ++c) {
        if (!(c >> b & 1) || (c >> a & 1)) continue;  // need b in C, a outside
        if (m1.separated(a, b, c) != m2.separated(a, b, c)) return false;
      }
    }
  }
  return true;
}

bool markov_equivalent(const Dmg& g1, const Dmg& g2, int cap) {
  if (g1.labels() != g2.labels())
    throw std::invalid_argument("markov_equivalent: mismatched vertex sets");
  return independence_model(g1, cap) == independence_model(g2, cap);
}

bool potential_sibling(const IndependenceModel& m, VertexId alpha, VertexId beta) {
  const int n = m.n();
  // (s1)
  if (!in_u_set(m, alpha, beta) || !in_u_set(m, beta, alpha)) return false;
  const std::uint64_t lim = std::uint64_t{1} << n;
  for (VertexId gamma = 0; gamma < n; ++gamma) {
    for (std::uint64_t c = 0; c < lim; ++c) {
      // (s2): beta in C, gamma _||_ alpha | C implies gamma _||_ beta | C
      if ((c >> beta & 1) && m.separated(gamma, alpha, c) &&
          !m.separated(gamma, beta, c))
        return false;
      // (s3): alpha in C, gamma _||_ beta | C implies gamma _||_ alpha | C
      if ((c >> alpha & 1) && m.separated(gamma, beta, c) &&
          !m.separated(gamma, alpha, c))
        return false;
    }
  }
  return true;
}

bool potential_parent(const IndependenceModel& m, VertexId alpha, VertexId beta) {
  const int n = m.n();
  // (p1)
  if (!in_u_set(m, alpha, beta)) return false;
  const std::uint64_t lim = std::uint64_t{1} << n;
  for (std::uint64_t c = 0; c < lim; ++c) {
    if (c >> alpha & 1) continue;  // every condition below requires alpha outside C
    for (VertexId gamma = 0; gamma < n; ++gamma) {
      // (p2): gamma _||_ beta | C implies gamma _||_ alpha | C
      if (m.separated(gamma, beta, c) && !m.separated(gamma, alpha, c)) return false;
      // (p4): beta _||_ gamma | C implies beta _||_ gamma | C u {alpha}
      if (m.separated(beta, gamma, c) &&
          !m.separated(beta, gamma, c | (std::uint64_t{1} << alpha)))
        return false;
    }
    // (p3): additionally beta in C
    if (c >> beta & 1) {
      for (VertexId gamma = 0; gamma < n; ++gamma) {
        for (VertexId delta = 0; delta < n; ++delta) {
          if (m.separated(gamma, delta, c) && !m.separated(gamma, beta, c) &&
              !m.separated(alpha, delta, c))
            return false;
        }
      }
    }
  }
  return true;
}

Dmg maximal_dmg(const Dmg& g, int cap, bool cross_validate) {
  IndependenceModel m = independence_model(g, cap);
  const int n = g.size();
  std::set<EdgePair> dir, bidir;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      if (potential_parent(m, a, b)) dir.insert({a, b});
      if (a <= b && potential_sibling(m, a, b)) bidir.insert({a, b});
    }
  }
  Dmg result = Dmg::from_parts(g.labels(), std::move(dir), std::move(bidir));
  if (!is_supergraph(result, g))
    throw std::logic_error("maximal_dmg: result is not a supergraph of the input");
  if (cross_validate) {
    for (const Edge& e : result.edges()) {
      if (g.has_edge(e)) continue;
      if (!markov_equivalent(g, add_edge(g, e), cap))
        throw std::logic_error("maximal_dmg: added edge changed the independence model");
    }
  }
  return result;
}

bool is_maximal(const Dmg& g, int cap) { return maximal_dmg(g, cap) == g; }

bool Dmeg::is_dashed(const Edge& e) const {
  if (e.kind == EdgeKind::directed) return dashed_directed.count({e.a, e.b}) > 0;
  EdgePair p = e.a <= e.b ? EdgePair{e.a, e.b} : EdgePair{e.b, e.a};
  return dashed_bidirected.count(p) > 0;
}

Dmeg dmeg(const Dmg& n, int cap) {
  if (!is_maximal(n, cap))
    throw std::invalid_argument("dmeg: input graph is not maximal");
  Dmeg out{n, {}, {}};
  for (const auto& [s, t] : n.directed()) {
    if (s == t) continue;  // loops are rendered solid by convention
    Dmg rem = remove_edge(n, Edge::dir(s, t));
    if (inducing_path_exists(rem, s, t, InducingPathKind::any))
      out.dashed_directed.insert({s, t});
  }
  for (const auto& [x, y] : n.bidirected()) {
    if (x == y) continue;
    Dmg rem = remove_edge(n, Edge::bidir(x, y));
    if (inducing_path_exists(rem, x, y, InducingPathKind::any) &&
        inducing_path_exists(rem, y, x, InducingPathKind::any))
      out.dashed_bidirected.insert({x, y});
  }
  return out;
}

std::vector<Dmg> equivalence_class(const Dmg& n, int cap, int edge_cap) {
  IndependenceModel target = independence_model(n, cap);
  if (!is_maximal(n, cap))
    throw std::invalid_argument("equivalence_class: input graph is not maximal");
  std::vector<Edge> nonloops = n.nonloop_edges();
  if (static_cast<int>(nonloops.size()) > edge_cap)
    throw CapExceededError("equivalence_class", static_cast<int>(nonloops.size()),
                           edge_cap);
  std::set<EdgePair> base_dir, base_bidir;
  for (const auto& [s, t] : n.directed())
    if (s == t) base_dir.insert({s, t});
  for (const auto& [x, y] : n.bidirected())
    if (x == y) base_bidir.insert({x, y});

  std::vector<Dmg> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nonloops.size()); ++mask) {
    std::set<EdgePair> dir = base_dir;
    std::set<EdgePair> bidir = base_bidir;
    for (std::size_t i = 0; i < nonloops.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      const Edge& e = nonloops[i];
      (e.kind == EdgeKind::directed ? dir : bidir).insert({e.a, e.b});
    }
    Dmg candidate = Dmg::from_parts(n.labels(), std::move(dir), std::move(bidir));
    if (independence_model(candidate, cap) == target) out.push_back(candidate);
  }
  return out;
}

}  // namespace musep
