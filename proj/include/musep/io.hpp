#ifndef MUSEP_IO_HPP
#define MUSEP_IO_HPP

#include <stdexcept>
#include <string>

#include "musep/equivalence.hpp"
#include "musep/graph.hpp"

namespace musep {

// Syntax error in a graph document, with a 1-based position in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Graph documents are JSON objects:
//
//   {
//     "nodes": ["a", "b", ...],
//     "directed": [["a", "b"], ...],     // source, target; loops allowed
//     "bidirected": [["a", "b"], ...]    // unordered; loops allowed
//   }
//
// DMEG documents additionally carry the dashed edges:
//
//   {
//     ...,
//     "dashed_directed": [["a", "b"], ...],
//     "dashed_bidirected": [["a", "b"], ...]
//   }
//
// Unknown keys are rejected.  "directed", "bidirected", and the dashed lists
// may be omitted and default to empty.  Serialization is canonical: nodes in
// vertex order, edges sorted, bidirected pairs with the lower-ranked
// endpoint first.
Dmg parse_graph(const std::string& text);
std::string serialize_graph(const Dmg& g);

Dmeg parse_dmeg(const std::string& text);
std::string serialize_dmeg(const Dmeg& m);

// Reads and parses a graph file; errors are prefixed with the path.
Dmg load_graph(const std::string& path);

// Graphviz output.  Bidirected edges are drawn with dir=both, dashed edges
// with style=dashed; ordering is deterministic.
std::string export_dot(const Dmg& g);
std::string export_dot(const Dmeg& m);

}  // namespace musep

#endif  // MUSEP_IO_HPP
