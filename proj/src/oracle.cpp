#include "musep/oracle.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace musep {

RouteIterator::RouteIterator(const Dmg& g, VertexId source, VertexId target)
    : g_(g), source_(source), target_(target) {
  if (source < 0 || source >= g.size() || target < 0 || target >= g.size())
    throw std::invalid_argument("enumerate_routes: vertex out of range");
  trav_ = build_traversals(g_);
  count_.assign(static_cast<std::size_t>(g_.size()), 0);
  count_[static_cast<std::size_t>(source_)] = 1;
  cursor_.push_back(0);
}

std::optional<Route> RouteIterator::next() {
  if (!emitted_trivial_) {
    emitted_trivial_ = true;
    if (source_ == target_) return Route{source_, {}};
  }
  while (!cursor_.empty()) {
    VertexId v = at();
    const auto& outs = trav_[static_cast<std::size_t>(v)];
    std::size_t c = cursor_.back()++;
    if (c >= outs.size()) {
      cursor_.pop_back();
      if (!steps_.empty()) {
        --count_[static_cast<std::size_t>(steps_.back().next)];
        steps_.pop_back();
      }
      continue;
    }
    const Traversal& t = outs[c];
    int limit = t.to == target_ ? 2 : 1;
    if (count_[static_cast<std::size_t>(t.to)] + 1 > limit) continue;
    steps_.push_back({t.edge, t.departure, t.arrival, t.to});
    ++count_[static_cast<std::size_t>(t.to)];
    if (t.to == target_) {
      Route r{source_, steps_};
      if (count_[static_cast<std::size_t>(target_)] == 2) {
        // The target is used up: this branch cannot extend into any further
        // route, so retreat immediately instead of pushing a frame.
        --count_[static_cast<std::size_t>(t.to)];
        steps_.pop_back();
      } else {
        cursor_.push_back(0);
      }
      return r;
    }
    cursor_.push_back(0);
  }
  return std::nullopt;
}

RouteIterator enumerate_routes(const Dmg& g, VertexId source, VertexId target) {
  return RouteIterator(g, source, target);
}

bool mu_separated_bruteforce(const Dmg& g, const SeparationQuery& q) {
  if (g.size() > 8) throw CapExceededError("mu_separated_bruteforce", g.size(), 8);
  size_t n = static_cast<size_t>(g.size());
  if (q.a.size() != n || q.b.size() != n || q.c.size() != n)
    throw std::invalid_argument(
        "mu_separated_bruteforce: vertex set size does not match graph");
  VertexSet sources = q.a & ~q.c;
  for (size_t alpha = sources.find_first(); alpha != VertexSet::npos;
       alpha = sources.find_next(alpha)) {
    for (size_t beta = q.b.find_first(); beta != VertexSet::npos;
         beta = q.b.find_next(beta)) {
      RouteIterator routes(g, static_cast<VertexId>(alpha), static_cast<VertexId>(beta));
      while (auto r = routes.next()) {
        if (is_mu_connecting(g, *r, q.c)) return false;
      }
    }
  }
  return true;
}

namespace {

// Depth-first search over collider-free walks from x toward y whose
// non-endpoints are distinct unobserved vertices.  Records the endpoint-mark
// pairs of every witness found; stops early once all three are known.
struct ColliderFreeSearch {
  const Dmg* g;
  const std::vector<std::vector<Traversal>>* trav;
  const VertexSet* middle;  // unobserved vertices
  VertexId y;
  Mark first_mark;                            // mark at x of the current walk
  std::vector<bool> visited;                  // current interior vertices
  std::set<std::pair<Mark, Mark>> found;      // (mark at x, mark at y) pairs

  bool complete() const { return found.size() == 3; }

  void run(VertexId v, Mark arrival) {
    for (const Traversal& t : (*trav)[static_cast<std::size_t>(v)]) {
      if (complete()) return;
      if (arrival == Mark::head && t.departure == Mark::head) continue;  // collider
      if (t.to == y) {
        found.insert({first_mark, t.arrival});
        continue;
      }
      if (!middle->test(static_cast<std::size_t>(t.to))) continue;
      if (visited[static_cast<std::size_t>(t.to)]) continue;
      visited[static_cast<std::size_t>(t.to)] = true;
      run(t.to, t.arrival);
      visited[static_cast<std::size_t>(t.to)] = false;
    }
  }
};

}  // namespace

Dmg latent_projection_bruteforce(const Dmg& g, const VertexSet& o) {
  if (g.size() > 8) throw CapExceededError("latent_projection_bruteforce", g.size(), 8);
  if (o.size() != static_cast<size_t>(g.size()))
    throw std::invalid_argument(
        "latent_projection_bruteforce: vertex set size does not match graph");
  auto trav = build_traversals(g);
  VertexSet middle = ~o;
  std::vector<VertexId> kept = members(o);
  std::vector<VertexId> rank(static_cast<std::size_t>(g.size()), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    rank[static_cast<std::size_t>(kept[i])] = static_cast<VertexId>(i);
    labels.push_back(g.label(kept[i]));
  }

  std::set<EdgePair> dir, bidir;
  for (VertexId x : kept) {
    for (VertexId y : kept) {
      ColliderFreeSearch search{&g, &trav, &middle, y, Mark::tail,
                                std::vector<bool>(static_cast<std::size_t>(g.size())),
                                {}};
      // First steps carry no junction constraint; branch on them here so the
      // walk's mark at x is fixed for the recursion.
      for (const Traversal& t : trav[static_cast<std::size_t>(x)]) {
        if (search.complete()) break;
        search.first_mark = t.departure;
        if (t.to == y) {
          search.found.insert({t.departure, t.arrival});
          continue;
        }
        if (!middle.test(static_cast<std::size_t>(t.to))) continue;
        search.visited[static_cast<std::size_t>(t.to)] = true;
        search.run(t.to, t.arrival);
        search.visited[static_cast<std::size_t>(t.to)] = false;
      }
      VertexId rx = rank[static_cast<std::size_t>(x)];
      VertexId ry = rank[static_cast<std::size_t>(y)];
      for (const auto& [mx, my] : search.found) {
        if (mx == Mark::tail && my == Mark::head) {
          dir.insert({rx, ry});
        } else if (mx == Mark::head && my == Mark::tail) {
          dir.insert({ry, rx});
        } else if (mx == Mark::head && my == Mark::head) {
          bidir.insert({std::min(rx, ry), std::max(rx, ry)});
        } else {
          throw std::logic_error("latent_projection_bruteforce: tail-tail walk");
        }
      }
    }
  }
  return Dmg::from_parts(std::move(labels), std::move(dir), std::move(bidir));
}

std::vector<ModelTriple> model_diff(const IndependenceModel& m1,
                                    const IndependenceModel& m2) {
  if (m1.n() != m2.n())
    throw std::invalid_argument("model_diff: models over different vertex counts");
  std::vector<ModelTriple> out;
  const int n = m1.n();
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
        bool s1 = m1.separated(a, b, c);
        bool s2 = m2.separated(a, b, c);
        if (s1 != s2) out.push_back({a, b, c, s1, s2});
      }
    }
  }
  return out;
}

namespace {

// Platform-independent Bernoulli draw: the top 53 bits of the generator
// output give a uniform double in [0, 1).
bool flip(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

}  // namespace

Dmg random_dmg(int n, double p_directed, double p_bidirected, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("random_dmg: negative vertex count");
  std::mt19937_64 rng(seed);
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
  std::set<EdgePair> dir, bidir;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      if (flip(rng, p_directed)) dir.insert({a, b});
    }
  }
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a; b < n; ++b) {
      if (flip(rng, p_bidirected)) bidir.insert({a, b});
    }
  }
  return Dmg::from_parts(std::move(labels), std::move(dir), std::move(bidir));
}

Dmg random_dg(int n, double p_directed, std::uint64_t seed) {
  return random_dmg(n, p_directed, 0.0, seed);
}

}  // namespace musep
