#include "musep/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"

namespace musep {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::pair<int, int> line_col_of(const std::string& text, std::size_t byte) {
  // nlohmann reports the 1-based byte index of the last read character.
  std::size_t pos = byte == 0 ? 0 : std::min(byte - 1, text.size());
  int line = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < pos; ++i) {
    if (text[i] == '\n') {
      ++line;
      line_start = i + 1;
    }
  }
  return {line, static_cast<int>(pos - line_start) + 1};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col_of(text, e.byte);
    std::string what = e.what();
    // Drop nlohmann's "[json.exception...]" prefix; position is ours to report.
    std::size_t cut = what.find("] ");
    if (cut != std::string::npos) what = what.substr(cut + 2);
    throw ParseError(what, line, col);
  }
}

void check_keys(const json& j, const std::vector<std::string>& allowed) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const std::string& k : allowed) ok = ok || k == item.key();
    if (!ok) throw std::invalid_argument("unknown key: \"" + item.key() + "\"");
  }
}

std::vector<std::string> read_labels(const json& j) {
  if (!j.contains("nodes")) throw std::invalid_argument("missing \"nodes\"");
  const json& arr = j.at("nodes");
  if (!arr.is_array()) throw std::invalid_argument("\"nodes\" must be an array of strings");
  std::vector<std::string> labels;
  for (const json& e : arr) {
    if (!e.is_string()) throw std::invalid_argument("\"nodes\" must be an array of strings");
    labels.push_back(e.get<std::string>());
  }
  return labels;
}

std::vector<std::pair<std::string, std::string>> read_edge_list(const json& j,
                                                                const std::string& key) {
  std::vector<std::pair<std::string, std::string>> out;
  if (!j.contains(key)) return out;
  const json& arr = j.at(key);
  if (!arr.is_array())
    throw std::invalid_argument("\"" + key + "\" must be an array of label pairs");
  for (const json& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw std::invalid_argument("\"" + key + "\" entries must be [label, label] pairs");
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

ordered_json edge_array(const Dmg& g, const std::set<EdgePair>& edges) {
  ordered_json arr = ordered_json::array();
  for (const auto& [a, b] : edges) arr.push_back({g.label(a), g.label(b)});
  return arr;
}

// Resolves a dashed-edge list against the parsed graph: every entry must
// name an existing non-loop edge of the given kind.
std::set<EdgePair> resolve_dashed(const Dmg& g,
                                  const std::vector<std::pair<std::string, std::string>>& pairs,
                                  EdgeKind kind, const std::string& key) {
  std::set<EdgePair> out;
  for (const auto& [s, t] : pairs) {
    auto a = g.index_of(s);
    auto b = g.index_of(t);
    if (!a) throw std::invalid_argument("unknown vertex label: " + s);
    if (!b) throw std::invalid_argument("unknown vertex label: " + t);
    EdgePair p = kind == EdgeKind::directed
                     ? EdgePair{*a, *b}
                     : EdgePair{std::min(*a, *b), std::max(*a, *b)};
    bool present = kind == EdgeKind::directed ? g.has_directed(*a, *b)
                                              : g.has_bidirected(*a, *b);
    if (!present)
      throw std::invalid_argument("\"" + key + "\" entry " + s + ", " + t +
                                  " is not an edge of the graph");
    if (p.first == p.second)
      throw std::invalid_argument("\"" + key + "\" entry " + s + ", " + t +
                                  " is a loop; loops are never dashed");
    if (!out.insert(p).second)
      throw std::invalid_argument("duplicate \"" + key + "\" entry: " + s + ", " + t);
  }
  return out;
}

std::string dot_body(const Dmg& g, const std::set<EdgePair>* dashed_dir,
                     const std::set<EdgePair>* dashed_bidir) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (VertexId v = 0; v < g.size(); ++v) out << "  \"" << g.label(v) << "\";\n";
  for (const auto& [a, b] : g.directed()) {
    out << "  \"" << g.label(a) << "\" -> \"" << g.label(b) << "\"";
    if (dashed_dir && dashed_dir->count({a, b})) out << " [style=dashed]";
    out << ";\n";
  }
  for (const auto& [a, b] : g.bidirected()) {
    out << "  \"" << g.label(a) << "\" -> \"" << g.label(b) << "\" [dir=both";
    if (dashed_bidir && dashed_bidir->count({a, b})) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

Dmg parse_graph(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw std::invalid_argument("graph document must be a JSON object");
  check_keys(j, {"nodes", "directed", "bidirected"});
  return make_dmg(read_labels(j), read_edge_list(j, "directed"),
                  read_edge_list(j, "bidirected"));
}

std::string serialize_graph(const Dmg& g) {
  ordered_json doc;
  doc["nodes"] = g.labels();
  doc["directed"] = edge_array(g, g.directed());
  doc["bidirected"] = edge_array(g, g.bidirected());
  return doc.dump(2) + "\n";
}

Dmeg parse_dmeg(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object()) throw std::invalid_argument("graph document must be a JSON object");
  check_keys(j, {"nodes", "directed", "bidirected", "dashed_directed", "dashed_bidirected"});
  Dmg g = make_dmg(read_labels(j), read_edge_list(j, "directed"),
                   read_edge_list(j, "bidirected"));
  Dmeg out;
  out.dashed_directed =
      resolve_dashed(g, read_edge_list(j, "dashed_directed"), EdgeKind::directed,
                     "dashed_directed");
  out.dashed_bidirected =
      resolve_dashed(g, read_edge_list(j, "dashed_bidirected"), EdgeKind::bidirected,
                     "dashed_bidirected");
  out.maximal = std::move(g);
  return out;
}

std::string serialize_dmeg(const Dmeg& m) {
  ordered_json doc;
  doc["nodes"] = m.maximal.labels();
  doc["directed"] = edge_array(m.maximal, m.maximal.directed());
  doc["bidirected"] = edge_array(m.maximal, m.maximal.bidirected());
  doc["dashed_directed"] = edge_array(m.maximal, m.dashed_directed);
  doc["dashed_bidirected"] = edge_array(m.maximal, m.dashed_bidirected);
  return doc.dump(2) + "\n";
}

Dmg load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::string export_dot(const Dmg& g) { return dot_body(g, nullptr, nullptr); }

std::string export_dot(const Dmeg& m) {
  return dot_body(m.maximal, &m.dashed_directed, &m.dashed_bidirected);
}

}  // namespace musep
