#pragma once

#include <set>
#include <vector>

#include "cdcw/multigraph.hpp"
#include "cdcw/walk.hpp"

namespace cdcw {

// A cycle body: the subgraph traced by a cycle. Loops are cycles of length 1,
// parallel pairs cycles of length 2. Two bodies are equal iff their edge sets
// are equal (a cycle's edges determine its vertices).
struct CycleBody {
  std::vector<VertexId> vertices;  // sorted
  std::vector<EdgeId> edges;       // sorted

  bool operator==(const CycleBody& o) const { return edges == o.edges; }
  bool operator!=(const CycleBody& o) const { return edges != o.edges; }
  bool operator<(const CycleBody& o) const {
    if (edges.size() != o.edges.size()) return edges.size() < o.edges.size();
    return edges < o.edges;
  }
  bool contains_edge(EdgeId e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
  }
  bool contains_vertex(VertexId v) const {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  }
};

inline CycleBody cycle_body_from_edges(const MultiGraph& host,
                                       const std::vector<EdgeId>& edge_ids) {
  std::set<VertexId> vs;
  std::set<EdgeId> es(edge_ids.begin(), edge_ids.end());
  for (EdgeId e : es) {
    auto [u, v] = host.endpoints(e);
    vs.insert(u);
    vs.insert(v);
  }
  return CycleBody{{vs.begin(), vs.end()}, {es.begin(), es.end()}};
}

inline MultiGraph cycle_subgraph(const MultiGraph& host, const CycleBody& c) {
  return subgraph(host, c.vertices, c.edges);
}

// Validates the degree-2 connected condition for a candidate edge set.
inline bool is_cycle_edge_set(const MultiGraph& host,
                              const std::vector<EdgeId>& edge_ids) {
  if (edge_ids.empty()) return false;
  std::map<VertexId, int> deg;
  for (EdgeId e : edge_ids) {
    if (!host.has_edge(e)) return false;
    auto [u, v] = host.endpoints(e);
    deg[u] += (u == v) ? 2 : 1;
    if (u != v) deg[v] += 1;
  }
  for (auto& [v, d] : deg)
    if (d != 2) return false;
  MultiGraph sub = edge_subgraph(host, edge_ids);
  return connected_components(sub).n_total == 1;
}

struct EnumOptions {
  std::size_t max_cycles = 100000;  // hard cap; exceeding it fails loudly
};

// All distinct cycle bodies of g, deduplicated by edge set and returned in
// canonical order (size, then edge id list). Backtracking over rooted trails:
// the root is the smallest vertex of the cycle and interior vertices stay
// above it, so each body is produced at most twice (two orientations) before
// dedup.
inline std::vector<CycleBody> enumerate_cycles(const MultiGraph& g,
                                               const EnumOptions& opt = {}) {
  std::set<std::vector<EdgeId>> bodies;
  auto record = [&](std::vector<EdgeId> edges) {
    std::sort(edges.begin(), edges.end());
    bodies.insert(std::move(edges));
    if (bodies.size() > opt.max_cycles)
      fail_resource("cycle enumeration exceeded cap of " +
                    std::to_string(opt.max_cycles));
  };

  std::vector<EdgeId> trail;
  std::set<VertexId> on_path;
  std::set<EdgeId> used;

  // Iterative DFS written recursively; depth is bounded by |V|.
  auto dfs = [&](auto&& self, VertexId root, VertexId cur) -> void {
    for (EdgeId e : g.incident(cur)) {
      if (used.count(e)) continue;
      VertexId w = g.other_end(e, cur);
      if (g.is_loop(e)) {
        if (cur == root && trail.empty()) {
          trail.push_back(e);
          record(trail);
          trail.pop_back();
        }
        continue;
      }
      if (w == root) {
        if (!trail.empty()) {
          trail.push_back(e);
          record(trail);
          trail.pop_back();
        }
        continue;
      }
      if (w < root || on_path.count(w)) continue;
      trail.push_back(e);
      used.insert(e);
      on_path.insert(w);
      self(self, root, w);
      on_path.erase(w);
      used.erase(e);
      trail.pop_back();
    }
  };

  for (VertexId root : g.vertices()) {
    on_path = {root};
    used.clear();
    trail.clear();
    dfs(dfs, root, root);
  }

  std::vector<CycleBody> out;
  out.reserve(bodies.size());
  for (const auto& es : bodies) out.push_back(cycle_body_from_edges(g, es));
  std::sort(out.begin(), out.end());
  return out;
}

// Reconstructs a canonical traversal walk for a cycle body: start at the
// smallest vertex, leave along the smallest incident body edge.
inline Walk cycle_walk(const MultiGraph& host, const CycleBody& c) {
  if (c.edges.empty()) fail_internal("cycle_walk: empty body");
  VertexId start = c.vertices.front();
  if (c.edges.size() == 1 && host.is_loop(c.edges.front()))
    return Walk{{start, c.edges.front(), start}};
  std::set<EdgeId> remaining(c.edges.begin(), c.edges.end());
  Walk w{{start}};
  VertexId cur = start;
  while (!remaining.empty()) {
    EdgeId next = -1;
    for (EdgeId e : host.incident(cur))
      if (remaining.count(e)) {
        next = e;
        break;
      }
    if (next == -1) fail_internal("cycle_walk: body is not a cycle");
    remaining.erase(next);
    cur = host.other_end(next, cur);
    w.seq.push_back(next);
    w.seq.push_back(cur);
  }
  if (cur != start) fail_internal("cycle_walk: traversal did not close");
  return w;
}

}  // namespace cdcw
