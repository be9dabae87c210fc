#ifndef MUSEP_TESTS_FIXTURES_HPP
#define MUSEP_TESTS_FIXTURES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "musep/graph.hpp"
#include "musep/io.hpp"

namespace musep::fixtures {

inline std::string fixture_path(const std::string& name) {
  return std::string(MUSEP_FIXTURE_DIR) + "/" + name;
}

inline Dmg load(const std::string& name) { return load_graph(fixture_path(name)); }

// In-code mirrors of the fixture files; test_io checks that the files parse
// to exactly these graphs.

// Six-vertex gateway DG with a self-loop at every vertex.
inline Dmg gateway() {
  return make_dmg({"A", "T", "M", "H", "L", "I"},
                  {{"A", "A"}, {"A", "T"}, {"A", "M"}, {"A", "L"},
                   {"T", "T"}, {"T", "M"},
                   {"M", "T"}, {"M", "M"}, {"M", "H"}, {"M", "L"},
                   {"H", "H"}, {"H", "L"},
                   {"L", "A"}, {"L", "H"}, {"L", "L"},
                   {"I", "T"}, {"I", "I"}},
                  {});
}

// Five-vertex DG whose projection onto {a, b, g, d} needs bidirected edges.
inline Dmg projection_demo() {
  return make_dmg({"a", "b", "g", "d", "e"},
                  {{"a", "b"}, {"d", "g"}, {"d", "d"}, {"e", "b"}, {"e", "g"}}, {});
}

// Graph with unidirected-but-not-directed and directed inducing paths.
inline Dmg inducing_paths_graph() {
  return make_dmg({"a", "b", "g", "d"},
                  {{"a", "b"}, {"b", "a"}, {"g", "b"}, {"d", "g"}},
                  {{"b", "g"}, {"g", "d"}});
}

// Maximal graph with an inseparable yet non-adjacent vertex pair (b, d).
inline Dmg maximal_nonadjacent() {
  return make_dmg({"a", "b", "g", "d"},
                  {{"a", "b"}, {"b", "g"}, {"g", "b"}, {"g", "g"}, {"d", "g"}, {"d", "d"}},
                  {{"g", "g"}, {"g", "d"}, {"d", "d"}});
}

// Members of a six-element Markov equivalence class; member 1 is maximal.
inline Dmg class_member(int k) {
  std::vector<std::pair<std::string, std::string>> dir = {
      {"a", "a"}, {"a", "b"}, {"b", "b"}, {"g", "b"}, {"g", "d"}, {"d", "b"}, {"d", "d"}};
  auto drop = [&dir](const std::string& s, const std::string& t) {
    std::erase(dir, std::pair<std::string, std::string>{s, t});
  };
  switch (k) {
    case 1: break;
    case 2: drop("g", "b"); break;
    case 3: drop("d", "b"); break;
    case 4: drop("a", "b"); break;
    case 5: drop("a", "b"); drop("g", "b"); break;
    case 6: drop("a", "b"); drop("d", "b"); break;
    default: throw std::invalid_argument("class_member: k must be 1..6");
  }
  return make_dmg({"a", "b", "g", "d"}, dir,
                  {{"a", "a"}, {"a", "b"}, {"b", "b"}, {"b", "d"}, {"d", "d"}});
}

// Three-vertex DG used for the unrolling walkthrough.
inline Dmg supp_unroll_demo() {
  return make_dmg({"a", "b", "g"}, {{"a", "a"}, {"b", "a"}, {"b", "b"}, {"g", "b"}}, {});
}

// Two vertices, single edge g -> a: the self-separation example.
inline Dmg pair_example() {
  return make_dmg({"a", "g"}, {{"g", "a"}}, {});
}

inline std::vector<std::string> fixture_names() {
  return {"gateway.json",        "projection_demo.json", "inducing_paths.json",
          "maximal_nonadjacent.json", "class_maximal.json",   "class_member2.json",
          "class_member3.json",  "class_member4.json",   "class_member5.json",
          "class_member6.json",  "supp_unroll_demo.json", "pair_example.json"};
}

// Every fixture graph, loaded from disk.
inline std::vector<Dmg> all_fixture_graphs() {
  std::vector<Dmg> out;
  for (const std::string& name : fixture_names()) out.push_back(load(name));
  return out;
}

// Builds a vertex set over n vertices from a bitmask.
inline VertexSet mask_set(int n, std::uint64_t mask) {
  VertexSet out = empty_set(n);
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) out.set(static_cast<size_t>(v));
  return out;
}

}  // namespace musep::fixtures

#endif  // MUSEP_TESTS_FIXTURES_HPP
