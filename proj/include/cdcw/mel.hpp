#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cdcw/multigraph.hpp"

namespace cdcw {

// MEL (multigraph edge list), UTF-8 text, line oriented:
//   # comment
//   v <id>            optional isolated-vertex line
//   e <id> <u> <v>    edge line; loops written as  e <id> <u> <u>
// Vertices referenced by edge lines are declared implicitly. Parallel edges
// are distinct e lines with distinct edge ids.
inline MultiGraph parse_mel(const std::string& text) {
  std::vector<VertexId> vertices;
  std::vector<EdgeSpec> edges;
  std::set<VertexId> seen_v;
  std::set<VertexId> explicit_v;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto add_vertex = [&](VertexId v) {
    if (seen_v.insert(v).second) vertices.push_back(v);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag[0] == '#') continue;
    auto bad = [&](const std::string& why) {
      fail_input("MEL line " + std::to_string(lineno) + ": " + why);
    };
    if (tag == "v") {
      VertexId v;
      if (!(ls >> v)) bad("expected 'v <id>'");
      std::string extra;
      if (ls >> extra) bad("trailing tokens");
      if (!explicit_v.insert(v).second) bad("duplicate vertex line");
      add_vertex(v);
    } else if (tag == "e") {
      EdgeId id;
      VertexId u, v;
      if (!(ls >> id >> u >> v)) bad("expected 'e <id> <u> <v>'");
      std::string extra;
      if (ls >> extra) bad("trailing tokens");
      add_vertex(u);
      add_vertex(v);
      edges.push_back({id, {u, v}});
    } else {
      bad("unknown line tag '" + tag + "'");
    }
  }
  return MultiGraph::build(std::move(vertices), std::move(edges));
}

// Canonical form: isolated vertices first (sorted), then edges sorted by id.
// parse_mel(write_mel(g)) == g, and write_mel is a fixed point on its output.
inline std::string write_mel(const MultiGraph& g) {
  std::ostringstream out;
  for (VertexId v : g.vertices())
    if (g.incident(v).empty()) out << "v " << v << "\n";
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.endpoints(e);
    out << "e " << e << " " << u << " " << v << "\n";
  }
  return out.str();
}

inline MultiGraph load_mel_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail_input("cannot open file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_mel(ss.str());
}

}  // namespace cdcw
