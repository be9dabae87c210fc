#include "musep/timeseries.hpp"

#include <stdexcept>
#include <string>

namespace musep {

VertexSet SliceSet::materialize(const UnrolledDag& u) const {
  if (base.size() != static_cast<size_t>(u.base_n))
    throw std::invalid_argument("SliceSet: base set size does not match base graph");
  if (t < 0 || t > u.horizon)
    throw std::invalid_argument("SliceSet: time index out of range");
  VertexSet out = empty_set(u.dag.size());
  for (size_t v = base.find_first(); v != VertexSet::npos; v = base.find_next(v)) {
    if (cumulative) {
      for (int s = 0; s <= t; ++s)
        out.set(static_cast<size_t>(u.node(static_cast<VertexId>(v), s)));
    } else {
      out.set(static_cast<size_t>(u.node(static_cast<VertexId>(v), t)));
    }
  }
  return out;
}

UnrolledDag unroll(const Dmg& d, int T) {
  if (!d.is_dg()) throw std::invalid_argument("unroll: graph has bidirected edges");
  if (T < 0) throw std::invalid_argument("unroll: negative horizon");
  const int n = d.size();
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(n) * static_cast<size_t>(T + 1));
  for (int t = 0; t <= T; ++t) {
    for (VertexId v = 0; v < n; ++v) labels.push_back(d.label(v) + "@" + std::to_string(t));
  }
  std::set<EdgePair> dir;
  for (const auto& [u, v] : d.directed()) {
    for (int s = 0; s < T; ++s) {
      for (int t = s + 1; t <= T; ++t) dir.insert({s * n + u, t * n + v});
    }
  }
  UnrolledDag out;
  out.base_n = n;
  out.horizon = T;
  out.dag = Dmg::from_parts(std::move(labels), std::move(dir), {});
  return out;
}

int proof_horizon(const Dmg& d) {
  int edges = static_cast<int>(d.directed().size() + d.bidirected().size());
  return 3 * (edges + 1) + 1;
}

std::pair<bool, bool> check_rolling_correspondence(const Dmg& d, const VertexSet& a,
                                                   const VertexSet& b, const VertexSet& c,
                                                   int T) {
  if (!d.is_dg())
    throw std::invalid_argument("check_rolling_correspondence: graph has bidirected edges");
  if (T < 1) throw std::invalid_argument("check_rolling_correspondence: horizon must be >= 1");
  size_t n = static_cast<size_t>(d.size());
  if (a.size() != n || b.size() != n || c.size() != n)
    throw std::invalid_argument(
        "check_rolling_correspondence: vertex set size does not match graph");
  bool rolled = mu_separated(d, {a, b, c});
  UnrolledDag u = unroll(d, T);
  VertexSet sources = SliceSet::up_to(a & ~c, T - 1).materialize(u);
  VertexSet targets = SliceSet::exactly(b, T).materialize(u);
  VertexSet given = SliceSet::up_to(c, T - 1).materialize(u);
  bool unrolled = m_separated(u.dag, sources, targets, given);
  return {rolled, unrolled};
}

}  // namespace musep
