#pragma once

#include <set>
#include <vector>

#include "cdcw/multigraph.hpp"

namespace cdcw {

// Alternating sequence v0, e1, v1, ..., ek, vk stored flat; length k may be
// zero (single-vertex walk).
struct Walk {
  std::vector<int> seq;

  std::size_t length() const { return seq.size() / 2; }
  VertexId front() const { return seq.front(); }
  VertexId back() const { return seq.back(); }
  bool is_closed() const { return front() == back(); }

  VertexId vertex_at(std::size_t i) const { return seq[2 * i]; }
  EdgeId edge_at(std::size_t i) const { return seq[2 * i + 1]; }

  std::vector<EdgeId> edge_list() const {
    std::vector<EdgeId> es;
    for (std::size_t i = 0; i < length(); ++i) es.push_back(edge_at(i));
    return es;
  }
  std::vector<VertexId> vertex_list() const {
    std::vector<VertexId> vs;
    for (std::size_t i = 0; i <= length(); ++i) vs.push_back(vertex_at(i));
    return vs;
  }
};

inline Walk single_vertex_walk(VertexId v) { return Walk{{v}}; }

inline void validate_walk(const Walk& w, const MultiGraph& g) {
  if (w.seq.empty() || w.seq.size() % 2 == 0)
    fail_input("walk sequence must have odd length");
  for (std::size_t i = 0; i <= w.length(); ++i)
    if (!g.has_vertex(w.vertex_at(i))) fail_input("walk vertex not in graph");
  for (std::size_t i = 0; i < w.length(); ++i) {
    EdgeId e = w.edge_at(i);
    if (!g.has_edge(e)) fail_input("walk edge not in graph");
    VertexId a = w.vertex_at(i), b = w.vertex_at(i + 1);
    auto [u, v] = g.endpoints(e);
    bool ok = g.is_loop(e) ? (a == u && b == u)
                           : ((a == u && b == v) || (a == v && b == u));
    if (!ok) fail_input("walk edge endpoints do not match sequence");
  }
}

inline Walk concat(const Walk& w, const Walk& x) {
  if (w.back() != x.front())
    fail_input("walk concatenation: endpoint mismatch");
  Walk out = w;
  out.seq.insert(out.seq.end(), x.seq.begin() + 1, x.seq.end());
  return out;
}

inline Walk inverse(const Walk& w) {
  Walk out = w;
  std::reverse(out.seq.begin(), out.seq.end());
  return out;
}

inline bool is_trail(const Walk& w) {
  std::set<EdgeId> seen;
  for (std::size_t i = 0; i < w.length(); ++i)
    if (!seen.insert(w.edge_at(i)).second) return false;
  return true;
}

inline bool is_path(const Walk& w) {
  if (!is_trail(w)) return false;
  std::set<VertexId> seen;
  for (std::size_t i = 0; i <= w.length(); ++i)
    if (!seen.insert(w.vertex_at(i)).second) return false;
  return true;
}

// Closed trail, no repeated vertex except the endpoints, at least one edge.
inline bool is_cycle(const Walk& w) {
  if (w.length() < 1 || !w.is_closed() || !is_trail(w)) return false;
  std::set<VertexId> seen;
  for (std::size_t i = 0; i < w.length(); ++i)
    if (!seen.insert(w.vertex_at(i)).second) return false;
  return true;
}

// Body G(w): the subgraph traced by the walk.
struct WalkBody {
  std::vector<VertexId> vertices;  // sorted unique
  std::vector<EdgeId> edges;       // sorted unique
};

inline WalkBody body_of(const Walk& w) {
  auto vl = w.vertex_list();
  auto el = w.edge_list();
  std::set<VertexId> vs(vl.begin(), vl.end());
  std::set<EdgeId> es(el.begin(), el.end());
  return WalkBody{{vs.begin(), vs.end()}, {es.begin(), es.end()}};
}

inline MultiGraph body_subgraph(const MultiGraph& host, const Walk& w) {
  WalkBody b = body_of(w);
  return subgraph(host, b.vertices, b.edges);
}

}  // namespace cdcw
