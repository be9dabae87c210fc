// Acceptance suite: prints one "[PASS] <n> <name>" or "[FAIL] <n> <name>"
// line per criterion and exits nonzero when any criterion fails.  Criteria
// with a time budget fail when they exceed it.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "musep/equivalence.hpp"
#include "musep/graph.hpp"
#include "musep/io.hpp"
#include "musep/marginalize.hpp"
#include "musep/oracle.hpp"
#include "musep/separation.hpp"
#include "musep/timeseries.hpp"

using namespace musep;
namespace fx = musep::fixtures;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool condition, const std::string& note) {
    if (!condition) {
      ok = false;
      notes << "    " << note << "\n";
    }
  }
};

VertexSet single(int n, VertexId v) {
  VertexSet s = empty_set(n);
  s.set(static_cast<size_t>(v));
  return s;
}

// Deterministic pool of random graphs: cycles through 2..max_n vertices and
// two densities.
std::vector<Dmg> random_pool(int count, int max_n, std::uint64_t seed_base,
                             bool dg_only = false) {
  std::vector<Dmg> out;
  for (int i = 0; i < count; ++i) {
    int n = 2 + i % (max_n - 1);
    double p = i % 2 == 0 ? 0.2 : 0.35;
    std::uint64_t seed = seed_base + static_cast<std::uint64_t>(i);
    out.push_back(dg_only ? random_dg(n, p, seed) : random_dmg(n, p, p / 2.0, seed));
  }
  return out;
}

void criterion_invariance(Check& c) {
  std::vector<Dmg> graphs = {fx::projection_demo(), fx::gateway()};
  for (const Dmg& g : random_pool(200, 5, 10000)) graphs.push_back(g);
  long violations = 0, queries = 0;
  for (const Dmg& g : graphs) {
    const int n = g.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      InvarianceReport r = verify_marginalization_invariance(g, fx::mask_set(n, mask));
      queries += r.queries;
      violations += static_cast<long>(r.violations.size());
    }
  }
  c.expect(violations == 0,
           "separation changed under projection in " + std::to_string(violations) +
               " of " + std::to_string(queries) + " queries");
}

void criterion_projection_agreement(Check& c) {
  std::vector<Dmg> graphs = {fx::projection_demo(), fx::gateway()};
  for (const Dmg& g : random_pool(200, 5, 10000)) graphs.push_back(g);
  long mismatches = 0;
  for (const Dmg& g : graphs) {
    const int n = g.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      VertexSet o = fx::mask_set(n, mask);
      if (latent_projection(g, o) != latent_projection_bruteforce(g, o)) ++mismatches;
      if (latent_projection(g, o, SaturationOrder::forward) !=
          latent_projection(g, o, SaturationOrder::reversed))
        ++mismatches;
    }
  }
  c.expect(mismatches == 0,
           std::to_string(mismatches) + " keep-sets with differing projections");
}

void criterion_class_enumeration(Check& c) {
  Dmg m1 = fx::class_member(1);
  std::vector<Dmg> cls = equivalence_class(m1);
  c.expect(cls.size() == 6, "class has " + std::to_string(cls.size()) + " members, not 6");
  for (int k = 1; k <= 6; ++k) {
    bool found = false;
    for (const Dmg& g : cls) found = found || g == fx::class_member(k);
    c.expect(found, "transcribed member " + std::to_string(k) + " missing from the class");
  }
  Dmeg d = dmeg(m1);
  auto idx = [&m1](const char* l) { return *m1.index_of(l); };
  std::set<EdgePair> expect_dashed = {{idx("a"), idx("b")}, {idx("g"), idx("b")},
                                      {idx("d"), idx("b")}};
  c.expect(d.dashed_directed == expect_dashed, "dashed directed edges differ");
  c.expect(d.dashed_bidirected.empty(), "unexpected dashed bidirected edges");
}

void criterion_no_least_element(Check& c) {
  Dmg m1 = fx::class_member(1);
  auto idx = [&m1](const char* l) { return *m1.index_of(l); };
  VertexId g = idx("g"), d = idx("d"), b = idx("b");
  std::vector<Dmg> cls = equivalence_class(m1);
  for (const Dmg& member : cls) {
    c.expect(member.has_directed(g, b) || member.has_directed(d, b),
             "member without either edge into b");
  }
  Dmg both_removed = remove_edge(remove_edge(m1, Edge::dir(g, b)), Edge::dir(d, b));
  c.expect(!markov_equivalent(m1, both_removed),
           "removing both edges into b kept the model");
  for (const Dmg& member : cls)
    c.expect(!(member == both_removed), "both-removed graph listed as a member");
}

void criterion_separability_duality(Check& c) {
  std::vector<Dmg> graphs = fx::all_fixture_graphs();
  for (const Dmg& g : random_pool(500, 5, 20000)) graphs.push_back(g);
  long mismatches = 0, bad_witnesses = 0;
  for (const Dmg& g : graphs) {
    const int n = g.size();
    for (VertexId alpha = 0; alpha < n; ++alpha) {
      for (VertexId beta = 0; beta < n; ++beta) {
        auto witness = separable(g, alpha, beta);
        bool ip = inducing_path_exists(g, alpha, beta, InducingPathKind::any);
        if (witness.has_value() == ip) ++mismatches;
        if (witness) {
          bool valid = !witness->test(static_cast<size_t>(alpha)) &&
                       mu_separated(g, {single(n, alpha), single(n, beta), *witness});
          if (!valid) ++bad_witnesses;
        }
      }
    }
  }
  c.expect(mismatches == 0,
           std::to_string(mismatches) + " pairs where separability and inducing paths disagree");
  c.expect(bad_witnesses == 0,
           std::to_string(bad_witnesses) + " canonical separators failed to separate");
}

void criterion_maximal_laws(Check& c) {
  std::vector<Dmg> graphs = fx::all_fixture_graphs();
  for (const Dmg& g : random_pool(200, 4, 30000)) graphs.push_back(g);
  long failures = 0;
  for (const Dmg& g : graphs) {
    Dmg n = maximal_dmg(g);
    if (!markov_equivalent(g, n)) ++failures;
    if (!is_supergraph(n, g)) ++failures;
    if (maximal_dmg(n) != n) ++failures;
    // Add the missing edges one at a time; every intermediate graph must
    // stay in the class.
    Dmg step = g;
    for (const Edge& e : n.edges()) {
      bool present = e.kind == EdgeKind::directed ? step.has_directed(e.a, e.b)
                                                  : step.has_bidirected(e.a, e.b);
      if (present) continue;
      step = add_edge(step, e);
      if (!markov_equivalent(g, step)) ++failures;
    }
    if (step != n) ++failures;
  }
  c.expect(failures == 0, std::to_string(failures) + " maximal-graph law violations");
}

void criterion_criterion_agreement(Check& c) {
  std::vector<Dmg> graphs;
  for (const Dmg& g : fx::all_fixture_graphs())
    if (g.size() <= 6) graphs.push_back(g);
  for (const Dmg& g : random_pool(1000, 5, 40000)) graphs.push_back(g);
  long disagreements = 0;
  for (const Dmg& g : graphs) {
    const int n = g.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      VertexSet cs = fx::mask_set(n, mask);
      for (VertexId alpha = 0; alpha < n; ++alpha) {
        for (VertexId beta = 0; beta < n; ++beta) {
          SeparationQuery q{single(n, alpha), single(n, beta), cs};
          bool walk = mu_separated(g, q);
          if (walk != mu_separated_via_augmentation(g, q)) ++disagreements;
          if (walk != mu_separated_bruteforce(g, q)) ++disagreements;
        }
      }
    }
  }
  c.expect(disagreements == 0, std::to_string(disagreements) + " method disagreements");
}

void criterion_delta_bridge(Check& c) {
  long mismatches = 0;
  for (const Dmg& g : random_pool(200, 5, 50000, true)) {
    const int n = g.size();
    for (VertexId alpha = 0; alpha < n; ++alpha) {
      for (VertexId beta = 0; beta < n; ++beta) {
        if (alpha == beta) continue;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
          if (mask >> alpha & 1 || mask >> beta & 1) continue;
          VertexSet a = single(n, alpha), b = single(n, beta), cs = fx::mask_set(n, mask);
          if (delta_separated(g, a, b, cs) != mu_separated(g, {a, b, cs | b}))
            ++mismatches;
        }
      }
    }
  }
  c.expect(mismatches == 0, std::to_string(mismatches) + " bridge mismatches");
}

void criterion_rolling(Check& c) {
  long violations = 0;
  int built = 0;
  for (std::uint64_t seed = 60000; built < 100; ++seed) {
    Dmg g = random_dg(4, 0.3, seed);
    if (g.directed().size() > 8) continue;  // keep the proof bound small
    ++built;
    const int n = g.size();
    int bound = proof_horizon(g);
    for (VertexId alpha = 0; alpha < n; ++alpha) {
      for (VertexId beta = 0; beta < n; ++beta) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
          VertexSet a = single(n, alpha), b = single(n, beta), cs = fx::mask_set(n, mask);
          for (int T : {1, 2}) {
            auto [rolled, unrolled] = check_rolling_correspondence(g, a, b, cs, T);
            if (rolled && !unrolled) ++violations;
          }
          auto [rolled, unrolled] = check_rolling_correspondence(g, a, b, cs, bound);
          if (rolled != unrolled) ++violations;
        }
      }
    }
  }
  c.expect(violations == 0, std::to_string(violations) + " correspondence violations");
}

void criterion_gateway(Check& c) {
  Dmg g = fx::gateway();
  auto idx = [&g](const char* l) { return *g.index_of(l); };
  VertexSet keep =
      make_set(g.size(), {idx("A"), idx("T"), idx("M"), idx("H")});
  Dmg projected = latent_projection(g, keep);
  Dmg n = maximal_dmg(projected);
  Dmeg d = dmeg(n);
  VertexId a = *n.index_of("A"), t = *n.index_of("T"), h = *n.index_of("H");
  c.expect(n.has_directed(a, h), "A -> H missing from the maximal graph");
  c.expect(n.has_directed(a, h) && d.is_dashed(Edge::dir(a, h)), "A -> H is not dashed");
  c.expect(!n.has_directed(t, h), "T -> H present in the maximal graph");
}

void criterion_examples(Check& c) {
  Dmg g6 = fx::maximal_nonadjacent();
  auto idx = [&g6](const char* l) { return *g6.index_of(l); };
  VertexId b = idx("b"), d = idx("d");
  c.expect(is_maximal(g6), "fixture graph is not maximal");
  c.expect(!separable(g6, b, d).has_value(), "d is separable from b");
  c.expect(!g6.has_directed(b, d) && !g6.has_directed(d, b) && !g6.has_bidirected(b, d),
           "b and d are adjacent");

  Dmg p = fx::pair_example();
  VertexId a = *p.index_of("a"), cvx = *p.index_of("g");
  auto witness = separable(p, a, a);
  c.expect(witness.has_value() && *witness == make_set(2, {cvx}),
           "canonical self-separator is not {g}");
  c.expect(mu_separated(p, {single(2, a), single(2, a), make_set(2, {cvx})}),
           "separator fails to separate a from itself");
  Dmg p2 = add_edge(p, Edge::bidir(a, cvx));
  c.expect(!separable(p2, a, a).has_value(), "a still separable after adding the edge");
}

struct Criterion {
  int id;
  const char* name;
  void (*run)(Check&);
  double budget_seconds;  // 0 = no budget
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "marginalization-invariance", criterion_invariance, 60.0},
      {2, "projection-algorithm-agreement", criterion_projection_agreement, 0.0},
      {3, "class-enumeration-and-dashed-edges", criterion_class_enumeration, 10.0},
      {4, "no-least-element", criterion_no_least_element, 0.0},
      {5, "separability-inducing-path-duality", criterion_separability_duality, 0.0},
      {6, "maximal-graph-laws", criterion_maximal_laws, 300.0},
      {7, "separation-criterion-agreement", criterion_criterion_agreement, 0.0},
      {8, "delta-mu-bridge", criterion_delta_bridge, 0.0},
      {9, "rolling-correspondence", criterion_rolling, 300.0},
      {10, "gateway-reproduction", criterion_gateway, 0.0},
      {11, "example-fixtures", criterion_examples, 0.0},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.budget_seconds > 0.0 && elapsed > criterion.budget_seconds) {
      check.expect(false, "took " + std::to_string(elapsed) + " s, budget " +
                              std::to_string(criterion.budget_seconds) + " s");
    }
    std::cout << (check.ok ? "[PASS] " : "[FAIL] ") << criterion.id << " "
              << criterion.name << "\n";
    if (!check.ok) {
      std::cout << check.notes.str();
      ++failures;
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
