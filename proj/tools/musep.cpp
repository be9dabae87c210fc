// Command-line front end for the musep library: separation queries, latent
// projection, maximal graphs and their equivalence classes, time-slice
// unrolling, and a randomized self-check against the brute-force oracles.
//
// Exit codes: `sep` and `equiv` answer with 0 (separated / equivalent) or
// 1 (connected / not equivalent); every error, including usage problems and
// cap violations, exits with 2.  Other commands exit 0 on success.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "musep/equivalence.hpp"
#include "musep/graph.hpp"
#include "musep/io.hpp"
#include "musep/marginalize.hpp"
#include "musep/oracle.hpp"
#include "musep/separation.hpp"
#include "musep/timeseries.hpp"
#include "musep/walk.hpp"

namespace {

using namespace musep;

std::vector<std::string> split_labels(const std::string& list) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ',')) {
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

VertexSet resolve_set(const Dmg& g, const std::string& list) {
  VertexSet out = empty_set(g.size());
  for (const std::string& l : split_labels(list)) {
    auto v = g.index_of(l);
    if (!v) throw std::runtime_error("unknown vertex label: " + l);
    out.set(static_cast<size_t>(*v));
  }
  return out;
}

std::string format_edge(const Dmg& g, const Edge& e) {
  const char* arrow = e.kind == EdgeKind::directed ? " -> " : " <-> ";
  return g.label(e.a) + arrow + g.label(e.b);
}

std::string format_set(const Dmg& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : members(s)) {
    if (!first) out += ", ";
    out += g.label(v);
    first = false;
  }
  return out + "}";
}

int run_sep(const std::string& graph_file, const std::string& from, const std::string& to,
            const std::string& given, bool witness, const std::string& method) {
  Dmg g = load_graph(graph_file);
  SeparationQuery q{resolve_set(g, from), resolve_set(g, to), resolve_set(g, given)};
  bool separated;
  if (method == "walk") {
    separated = mu_separated(g, q);
  } else if (method == "augmented") {
    separated = mu_separated_via_augmentation(g, q);
  } else if (method == "brute") {
    separated = mu_separated_bruteforce(g, q);
  } else {
    throw std::runtime_error("unknown method: " + method +
                             " (expected walk, augmented, or brute)");
  }
  std::cout << (separated ? "separated" : "connected") << "\n";
  if (witness && !separated) {
    if (auto route = find_mu_connecting_route(g, q))
      std::cout << "witness: " << format_walk(g, *route) << "\n";
  }
  return separated ? 0 : 1;
}

int run_marg(const std::string& graph_file, const std::string& keep, bool trace, bool dot) {
  Dmg g = load_graph(graph_file);
  VertexSet o = resolve_set(g, keep);
  if (trace) {
    for (const auto& [tri, shortcut] : projection_fixpoint_trace(g, o)) {
      std::cout << "via " << g.label(tri.mid) << ": " << format_edge(g, tri.left_edge)
                << " with " << format_edge(g, tri.right_edge) << " adds "
                << format_edge(g, shortcut) << "\n";
    }
  }
  Dmg p = latent_projection(g, o);
  std::cout << (dot ? export_dot(p) : serialize_graph(p));
  return 0;
}

int run_maximal(const std::string& graph_file, int cap, bool dot) {
  Dmg g = load_graph(graph_file);
  Dmg m = maximal_dmg(g, cap);
  std::cout << (dot ? export_dot(m) : serialize_graph(m));
  return 0;
}

int run_dmeg(const std::string& graph_file, int cap, bool dot) {
  Dmg g = load_graph(graph_file);
  Dmeg m = dmeg(g, cap);
  std::cout << (dot ? export_dot(m) : serialize_dmeg(m));
  return 0;
}

int run_equiv(const std::string& file1, const std::string& file2, bool diff, int cap) {
  Dmg g1 = load_graph(file1);
  Dmg g2 = load_graph(file2);
  bool eq = markov_equivalent(g1, g2, cap);
  std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
  if (diff && !eq) {
    auto triples = model_diff(independence_model(g1, cap), independence_model(g2, cap));
    for (const ModelTriple& t : triples) {
      VertexSet c = empty_set(g1.size());
      for (int v = 0; v < g1.size(); ++v)
        if (t.c_mask >> v & 1) c.set(static_cast<size_t>(v));
      std::cout << g1.label(t.beta) << " from " << g1.label(t.alpha) << " given "
                << format_set(g1, c) << ": " << (t.separated_in_m1 ? "separated" : "connected")
                << " vs " << (t.separated_in_m2 ? "separated" : "connected") << "\n";
    }
  }
  return eq ? 0 : 1;
}

int run_class(const std::string& graph_file, bool enumerate, int cap) {
  Dmg g = load_graph(graph_file);
  std::vector<Dmg> members = equivalence_class(g, cap);
  std::cout << members.size() << " members\n";
  if (enumerate) {
    for (const Dmg& m : members) {
      std::string doc = serialize_graph(m);
      // One member per line: collapse the pretty-printed document.
      std::string line;
      for (char ch : doc) {
        if (ch == '\n') continue;
        if (ch == ' ' && !line.empty() && line.back() == ' ') continue;
        line += ch;
      }
      std::cout << line << "\n";
    }
  }
  return 0;
}

int parse_horizon(const std::string& t_arg, const Dmg& g) {
  if (t_arg == "auto") return proof_horizon(g);
  try {
    size_t used = 0;
    int t = std::stoi(t_arg, &used);
    if (used != t_arg.size()) throw std::invalid_argument(t_arg);
    return t;
  } catch (const std::exception&) {
    throw std::runtime_error("--T expects a non-negative integer or \"auto\", got: " + t_arg);
  }
}

int run_unroll(const std::string& graph_file, const std::string& t_arg, bool dot) {
  Dmg g = load_graph(graph_file);
  UnrolledDag u = unroll(g, parse_horizon(t_arg, g));
  std::cout << (dot ? export_dot(u.dag) : serialize_graph(u.dag));
  return 0;
}

// Sweeps every (alpha, beta, C) triple of a directed graph and checks the
// rolled-vs-unrolled correspondence at the given horizon: rolled separation
// must imply unrolled separation at any horizon, and the two must agree at
// the proof horizon.
int run_roll_check(const std::string& graph_file, const std::string& t_arg) {
  Dmg g = load_graph(graph_file);
  if (!g.is_dg()) throw std::runtime_error("roll-check: graph has bidirected edges");
  if (g.size() > 12)
    throw CapExceededError("roll-check", g.size(), 12);
  int T = parse_horizon(t_arg, g);
  if (T < 1) throw std::runtime_error("roll-check: horizon must be >= 1");
  bool at_bound = T >= proof_horizon(g);
  UnrolledDag u = unroll(g, T);
  const int n = g.size();
  int checked = 0, disagreements = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet c = empty_set(n);
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) c.set(static_cast<size_t>(v));
    VertexSet given = SliceSet::up_to(c, T - 1).materialize(u);
    for (VertexId alpha = 0; alpha < n; ++alpha) {
      VertexSet a = empty_set(n);
      a.set(static_cast<size_t>(alpha));
      VertexSet sources = SliceSet::up_to(a & ~c, T - 1).materialize(u);
      for (VertexId beta = 0; beta < n; ++beta) {
        VertexSet b = empty_set(n);
        b.set(static_cast<size_t>(beta));
        bool rolled = mu_separated(g, {a, b, c});
        bool unrolled =
            m_separated(u.dag, sources, SliceSet::exactly(b, T).materialize(u), given);
        ++checked;
        bool bad = at_bound ? rolled != unrolled : (rolled && !unrolled);
        if (bad) {
          ++disagreements;
          std::cout << "disagree: " << g.label(beta) << " from " << g.label(alpha)
                    << " given " << format_set(g, c) << ": rolled "
                    << (rolled ? "separated" : "connected") << ", unrolled "
                    << (unrolled ? "separated" : "connected") << "\n";
        }
      }
    }
  }
  std::cout << checked << " triples at T=" << T << (at_bound ? " (proof horizon)" : "")
            << ", " << disagreements << " disagreements\n";
  return disagreements == 0 ? 0 : 1;
}

// Cross-validates the fast implementations against the brute-force oracles
// on random graphs: separation methods must agree on every singleton triple,
// and the worklist latent projection must match the walk-enumeration one.
int run_selfcheck(std::uint64_t seed, double density, int count) {
  int failures = 0;
  for (int i = 0; i < count; ++i) {
    std::uint64_t graph_seed = seed + static_cast<std::uint64_t>(i);
    Dmg g = random_dmg(5, density, density / 2.0, graph_seed);
    const int n = g.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      VertexSet c = empty_set(n);
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) c.set(static_cast<size_t>(v));
      for (VertexId alpha = 0; alpha < n; ++alpha) {
        VertexSet a = empty_set(n);
        a.set(static_cast<size_t>(alpha));
        for (VertexId beta = 0; beta < n; ++beta) {
          VertexSet b = empty_set(n);
          b.set(static_cast<size_t>(beta));
          SeparationQuery q{a, b, c};
          bool walk = mu_separated(g, q);
          bool augmented = mu_separated_via_augmentation(g, q);
          bool brute = mu_separated_bruteforce(g, q);
          if (walk != augmented || walk != brute) {
            ++failures;
            std::cout << "seed " << graph_seed << ": methods disagree on "
                      << g.label(beta) << " from " << g.label(alpha) << " given "
                      << format_set(g, c) << " (walk " << walk << ", augmented "
                      << augmented << ", brute " << brute << ")\n";
          }
        }
      }
    }
    // Keep every subset of vertices in turn and compare projections.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      VertexSet o = empty_set(n);
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) o.set(static_cast<size_t>(v));
      if (latent_projection(g, o) != latent_projection_bruteforce(g, o)) {
        ++failures;
        std::cout << "seed " << graph_seed << ": projections disagree on keep = "
                  << format_set(g, o) << "\n";
      }
    }
    Dmg m = maximal_dmg(g);
    if (!markov_equivalent(g, m) || !is_maximal(m)) {
      ++failures;
      std::cout << "seed " << graph_seed << ": maximal graph check failed\n";
    }
  }
  std::cout << "selfcheck: " << count << " graphs, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mu-separation toolkit for directed mixed graphs"};
  app.require_subcommand(1);

  std::string graph_file, from, to, given, method = "walk", keep;
  std::string file1, file2, t_arg = "auto";
  bool witness = false, trace = false, dot = false, diff = false, enumerate = false;
  int cap = default_model_cap();
  std::uint64_t seed = 1;
  double density = 0.25;
  int count = 20;

  CLI::App* sep = app.add_subcommand("sep", "Decide a mu-separation query");
  sep->add_option("--graph", graph_file, "graph file")->required();
  sep->add_option("--from", from, "source labels, comma-separated")->required();
  sep->add_option("--to", to, "target labels, comma-separated")->required();
  sep->add_option("--given", given, "conditioning labels, comma-separated");
  sep->add_flag("--witness", witness, "print a connecting route when connected");
  sep->add_option("--method", method, "walk (default), augmented, or brute");

  CLI::App* marg = app.add_subcommand("marg", "Latent projection onto a vertex subset");
  marg->add_option("--graph", graph_file, "graph file")->required();
  marg->add_option("--keep", keep, "labels to keep, comma-separated")->required();
  marg->add_flag("--trace", trace, "print each shortcut edge as it is added");
  marg->add_flag("--dot", dot, "emit Graphviz instead of the graph document");

  CLI::App* maximal = app.add_subcommand("maximal", "Maximal graph with the same model");
  maximal->add_option("--graph", graph_file, "graph file")->required();
  maximal->add_option("--cap", cap, "vertex cap for model computation");
  maximal->add_flag("--dot", dot, "emit Graphviz instead of the graph document");

  CLI::App* dmeg_cmd = app.add_subcommand("dmeg", "Equivalence-class graph of a maximal graph");
  dmeg_cmd->add_option("--graph", graph_file, "graph file (must be maximal)")->required();
  dmeg_cmd->add_option("--cap", cap, "vertex cap for model computation");
  dmeg_cmd->add_flag("--dot", dot, "emit Graphviz instead of the graph document");

  CLI::App* equiv = app.add_subcommand("equiv", "Test two graphs for Markov equivalence");
  equiv->add_option("first", file1, "graph file")->required();
  equiv->add_option("second", file2, "graph file")->required();
  equiv->add_flag("--diff", diff, "list differing triples when not equivalent");
  equiv->add_option("--cap", cap, "vertex cap for model computation");

  CLI::App* class_cmd = app.add_subcommand("class", "Markov equivalence class of a maximal graph");
  class_cmd->add_option("--graph", graph_file, "graph file (must be maximal)")->required();
  class_cmd->add_flag("--enumerate", enumerate, "print every member");
  class_cmd->add_option("--cap", cap, "vertex cap for model computation");

  CLI::App* unroll_cmd = app.add_subcommand("unroll", "Unroll a directed graph over time slices");
  unroll_cmd->add_option("--graph", graph_file, "graph file (directed edges only)")->required();
  unroll_cmd->add_option("--T", t_arg, "horizon, or \"auto\" for the proof bound");
  unroll_cmd->add_flag("--dot", dot, "emit Graphviz instead of the graph document");

  CLI::App* roll = app.add_subcommand("roll-check",
                                      "Check rolled vs unrolled separation on all triples");
  roll->add_option("--graph", graph_file, "graph file (directed edges only)")->required();
  roll->add_option("--T", t_arg, "horizon, or \"auto\" for the proof bound");

  CLI::App* selfcheck = app.add_subcommand("selfcheck",
                                           "Cross-validate against brute-force oracles");
  selfcheck->add_option("--seed", seed, "base seed for graph generation");
  selfcheck->add_option("--density", density, "edge probability");
  selfcheck->add_option("--count", count, "number of random graphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sep->parsed()) return run_sep(graph_file, from, to, given, witness, method);
    if (marg->parsed()) return run_marg(graph_file, keep, trace, dot);
    if (maximal->parsed()) return run_maximal(graph_file, cap, dot);
    if (dmeg_cmd->parsed()) return run_dmeg(graph_file, cap, dot);
    if (equiv->parsed()) return run_equiv(file1, file2, diff, cap);
    if (class_cmd->parsed()) return run_class(graph_file, enumerate, cap);
    if (unroll_cmd->parsed()) return run_unroll(graph_file, t_arg, dot);
    if (roll->parsed()) return run_roll_check(graph_file, t_arg);
    if (selfcheck->parsed()) return run_selfcheck(seed, density, count);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
