#include "musep/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace musep {

CapExceededError::CapExceededError(const std::string& op, int required, int cap)
    : std::runtime_error(op + ": input needs " + std::to_string(required) +
                         " vertices but the cap is " + std::to_string(cap)),
      required_(required),
      cap_(cap) {}

VertexSet empty_set(int n) { return VertexSet(static_cast<size_t>(n)); }

VertexSet full_set(int n) {
  VertexSet s(static_cast<size_t>(n));
  s.set();
  return s;
}

VertexSet make_set(int n, std::initializer_list<VertexId> vs) {
  VertexSet s(static_cast<size_t>(n));
  for (VertexId v : vs) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    s.set(static_cast<size_t>(v));
  }
  return s;
}

VertexSet make_set(int n, const std::vector<VertexId>& vs) {
  VertexSet s(static_cast<size_t>(n));
  for (VertexId v : vs) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    s.set(static_cast<size_t>(v));
  }
  return s;
}

std::vector<VertexId> members(const VertexSet& s) {
  std::vector<VertexId> out;
  for (size_t v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
    out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

namespace {

void check_range(int n, VertexId v) {
  if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
}

void check_set_range(int n, const VertexSet& s, const char* what) {
  if (static_cast<int>(s.size()) != n) {
    throw std::invalid_argument(std::string(what) +
                                ": vertex set sized for a different graph");
  }
}

}  // namespace

Dmg Dmg::from_parts(std::vector<std::string> labels, std::set<EdgePair> directed,
                    std::set<EdgePair> bidirected) {
  const int n = static_cast<int>(labels.size());
  std::set<EdgePair> canon_bidir;
  for (auto [s, t] : directed) {
    check_range(n, s);
    check_range(n, t);
  }
  for (auto [x, y] : bidirected) {
    check_range(n, x);
    check_range(n, y);
    canon_bidir.insert(x <= y ? EdgePair{x, y} : EdgePair{y, x});
  }
  Dmg g;
  g.labels_ = std::move(labels);
  g.directed_ = std::move(directed);
  g.bidirected_ = std::move(canon_bidir);
  return g;
}

const std::string& Dmg::label(VertexId v) const {
  check_range(size(), v);
  return labels_[static_cast<size_t>(v)];
}

std::optional<VertexId> Dmg::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (labels_[static_cast<size_t>(i)] == label) return i;
  }
  return std::nullopt;
}

bool Dmg::has_directed(VertexId s, VertexId t) const {
  return directed_.count({s, t}) > 0;
}

bool Dmg::has_bidirected(VertexId x, VertexId y) const {
  if (x > y) std::swap(x, y);
  return bidirected_.count({x, y}) > 0;
}

bool Dmg::has_edge(const Edge& e) const {
  return e.kind == EdgeKind::directed ? has_directed(e.a, e.b)
                                      : has_bidirected(e.a, e.b);
}

std::vector<Edge> Dmg::edges() const {
  std::vector<Edge> out;
  out.reserve(directed_.size() + bidirected_.size());
  for (auto [s, t] : directed_) out.push_back(Edge::dir(s, t));
  for (auto [x, y] : bidirected_) out.push_back(Edge::bidir(x, y));
  return out;
}

std::vector<Edge> Dmg::nonloop_edges() const {
  std::vector<Edge> out;
  for (const Edge& e : edges()) {
    if (!e.is_loop()) out.push_back(e);
  }
  return out;
}

Dmg make_dmg(const std::vector<std::string>& labels,
             const std::vector<std::pair<std::string, std::string>>& directed,
             const std::vector<std::pair<std::string, std::string>>& bidirected) {
  for (const std::string& l : labels) {
    if (l.empty()) throw std::invalid_argument("empty vertex label");
  }
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) {
    throw std::invalid_argument("duplicate vertex label");
  }

  auto index = [&labels](const std::string& l) -> VertexId {
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) {
      throw std::invalid_argument("unknown vertex label: " + l);
    }
    return static_cast<VertexId>(it - labels.begin());
  };

  std::set<EdgePair> dir;
  for (const auto& [s, t] : directed) {
    EdgePair p{index(s), index(t)};
    if (!dir.insert(p).second) {
      throw std::invalid_argument("duplicate directed edge: " + s + " -> " + t);
    }
  }
  std::set<EdgePair> bidir;
  for (const auto& [x, y] : bidirected) {
    VertexId a = index(x), b = index(y);
    if (a > b) std::swap(a, b);
    if (!bidir.insert({a, b}).second) {
      throw std::invalid_argument("duplicate bidirected edge: " + x + " <-> " + y);
    }
  }
  return Dmg::from_parts(labels, std::move(dir), std::move(bidir));
}

VertexSet ancestors(const Dmg& g, const VertexSet& c) {
  const int n = g.size();
  check_set_range(n, c, "ancestors");
  // Reverse reachability over directed edges, seeded with c.
  std::vector<std::vector<VertexId>> rev(static_cast<size_t>(n));
  for (auto [s, t] : g.directed()) rev[static_cast<size_t>(t)].push_back(s);

  VertexSet an = c;
  std::vector<VertexId> seeds = members(c);
  std::deque<VertexId> work(seeds.begin(), seeds.end());
  while (!work.empty()) {
    VertexId v = work.front();
    work.pop_front();
    for (VertexId p : rev[static_cast<size_t>(v)]) {
      if (!an.test(static_cast<size_t>(p))) {
        an.set(static_cast<size_t>(p));
        work.push_back(p);
      }
    }
  }
  return an;
}

VertexSet parents(const Dmg& g, VertexId b) {
  check_range(g.size(), b);
  VertexSet pa = empty_set(g.size());
  for (auto [s, t] : g.directed()) {
    if (t == b) pa.set(static_cast<size_t>(s));
  }
  return pa;
}

Dmg induced_subgraph(const Dmg& g, const VertexSet& o) {
  check_set_range(g.size(), o, "induced_subgraph");
  std::vector<VertexId> kept = members(o);
  std::vector<VertexId> rank(static_cast<size_t>(g.size()), -1);
  std::vector<std::string> labels;
  labels.reserve(kept.size());
  for (size_t i = 0; i < kept.size(); ++i) {
    rank[static_cast<size_t>(kept[i])] = static_cast<VertexId>(i);
    labels.push_back(g.label(kept[i]));
  }
  std::set<EdgePair> dir, bidir;
  for (auto [s, t] : g.directed()) {
    if (o.test(static_cast<size_t>(s)) && o.test(static_cast<size_t>(t))) {
      dir.insert({rank[static_cast<size_t>(s)], rank[static_cast<size_t>(t)]});
    }
  }
  for (auto [x, y] : g.bidirected()) {
    if (o.test(static_cast<size_t>(x)) && o.test(static_cast<size_t>(y))) {
      bidir.insert({rank[static_cast<size_t>(x)], rank[static_cast<size_t>(y)]});
    }
  }
  return Dmg::from_parts(std::move(labels), std::move(dir), std::move(bidir));
}

bool is_supergraph(const Dmg& g1, const Dmg& g2) {
  if (g1.labels() != g2.labels()) {
    throw std::invalid_argument("is_supergraph: mismatched vertex sets");
  }
  return std::includes(g1.directed().begin(), g1.directed().end(),
                       g2.directed().begin(), g2.directed().end()) &&
         std::includes(g1.bidirected().begin(), g1.bidirected().end(),
                       g2.bidirected().begin(), g2.bidirected().end());
}

Dmg add_edge(const Dmg& g, const Edge& e) {
  check_range(g.size(), e.a);
  check_range(g.size(), e.b);
  if (g.has_edge(e)) throw std::invalid_argument("add_edge: duplicate edge");
  std::set<EdgePair> dir = g.directed();
  std::set<EdgePair> bidir = g.bidirected();
  if (e.kind == EdgeKind::directed) {
    dir.insert({e.a, e.b});
  } else {
    bidir.insert({std::min(e.a, e.b), std::max(e.a, e.b)});
  }
  return Dmg::from_parts(g.labels(), std::move(dir), std::move(bidir));
}

Dmg remove_edge(const Dmg& g, const Edge& e) {
  check_range(g.size(), e.a);
  check_range(g.size(), e.b);
  if (!g.has_edge(e)) throw std::invalid_argument("remove_edge: edge not present");
  std::set<EdgePair> dir = g.directed();
  std::set<EdgePair> bidir = g.bidirected();
  if (e.kind == EdgeKind::directed) {
    dir.erase({e.a, e.b});
  } else {
    bidir.erase({std::min(e.a, e.b), std::max(e.a, e.b)});
  }
  return Dmg::from_parts(g.labels(), std::move(dir), std::move(bidir));
}

bool satisfies_self_sibling_property(const Dmg& g) {
  for (auto [x, y] : g.bidirected()) {
    if (!g.has_bidirected(x, x) || !g.has_bidirected(y, y)) return false;
  }
  return true;
}

std::string unique_label(const std::vector<std::string>& existing,
                         const std::string& base) {
  auto taken = [&existing](const std::string& l) {
    return std::find(existing.begin(), existing.end(), l) != existing.end();
  };
  if (!taken(base)) return base;
  for (int k = 2;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!taken(candidate)) return candidate;
  }
}

Dmg canonical_dg(const Dmg& g) {
  std::vector<std::string> labels = g.labels();
  std::set<EdgePair> dir = g.directed();
  for (auto [x, y] : g.bidirected()) {
    std::string base = "m" + g.label(x) + "_" + g.label(y);
    std::string aux = unique_label(labels, base);
    VertexId m = static_cast<VertexId>(labels.size());
    labels.push_back(aux);
    dir.insert({m, x});
    dir.insert({m, y});  // same edge as above when x == y (bidirected loop)
  }
  return Dmg::from_parts(std::move(labels), std::move(dir), {});
}

bool UndirectedGraph::adjacent(VertexId x, VertexId y) const {
  if (x > y) std::swap(x, y);
  return edges.count({x, y}) > 0;
}

bool undirected_separated(const UndirectedGraph& g, const VertexSet& a,
                          const VertexSet& b, const VertexSet& c) {
  const int n = g.size();
  check_set_range(n, a, "undirected_separated");
  check_set_range(n, b, "undirected_separated");
  check_set_range(n, c, "undirected_separated");
  if ((a & b).any() || (a & c).any() || (b & c).any()) {
    throw std::invalid_argument("undirected_separated: sets must be disjoint");
  }
  std::vector<std::vector<VertexId>> adj(static_cast<size_t>(n));
  for (auto [x, y] : g.edges) {
    adj[static_cast<size_t>(x)].push_back(y);
    adj[static_cast<size_t>(y)].push_back(x);
  }
  VertexSet seen = a;
  std::vector<VertexId> seeds = members(a);
  std::deque<VertexId> work(seeds.begin(), seeds.end());
  while (!work.empty()) {
    VertexId v = work.front();
    work.pop_front();
    if (b.test(static_cast<size_t>(v))) return false;
    for (VertexId w : adj[static_cast<size_t>(v)]) {
      if (c.test(static_cast<size_t>(w))) continue;  // blocked
      if (!seen.test(static_cast<size_t>(w))) {
        seen.set(static_cast<size_t>(w));
        work.push_back(w);
      }
    }
  }
  return true;
}

}  // namespace musep
