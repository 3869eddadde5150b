#pragma once

#include <map>
#include <set>
#include <vector>

#include "cdcw/cycles.hpp"

namespace cdcw {

struct CyclicCore {
  MultiGraph core;                 // G^c, the union of all cycle bodies
  std::map<VertexId, int> degc;    // degree inside G^c, 0 off-core
};

inline CyclicCore cyclic_core(const MultiGraph& g,
                              const std::vector<CycleBody>& cycles) {
  std::set<VertexId> vs;
  std::set<EdgeId> es;
  for (const CycleBody& c : cycles) {
    vs.insert(c.vertices.begin(), c.vertices.end());
    es.insert(c.edges.begin(), c.edges.end());
  }
  CyclicCore cc;
  cc.core = subgraph(g, {vs.begin(), vs.end()}, {es.begin(), es.end()});
  for (VertexId v : g.vertices())
    cc.degc[v] = cc.core.has_vertex(v) ? cc.core.degree(v) : 0;
  return cc;
}

inline CyclicCore cyclic_core(const MultiGraph& g, const EnumOptions& opt = {}) {
  return cyclic_core(g, enumerate_cycles(g, opt));
}

// cycle(v) for every vertex, as index sets into the cycles list.
inline std::map<VertexId, std::set<int>> cycles_through(
    const MultiGraph& g, const std::vector<CycleBody>& cycles) {
  std::map<VertexId, std::set<int>> m;
  for (VertexId v : g.vertices()) m[v] = {};
  for (int i = 0; i < static_cast<int>(cycles.size()); ++i)
    for (VertexId v : cycles[i].vertices) m[v].insert(i);
  return m;
}

// v1 <=* v2  iff  cycle(v1) is a subset of cycle(v2).
inline bool le_star(const std::set<int>& a, const std::set<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Cycle generic: degc(v) >= 3, or v maximal under <=* (no vertex with a
// strictly larger cycle set).
inline std::set<VertexId> cycle_generic_vertices(
    const MultiGraph& g, const std::vector<CycleBody>& cycles,
    const CyclicCore& core) {
  auto through = cycles_through(g, cycles);
  std::set<VertexId> out;
  for (VertexId v : g.vertices()) {
    if (core.degc.at(v) >= 3) {
      out.insert(v);
      continue;
    }
    bool maximal = true;
    for (VertexId u : g.vertices()) {
      if (u == v) continue;
      if (le_star(through[v], through[u]) && through[u] != through[v]) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.insert(v);
  }
  return out;
}

inline std::set<VertexId> cycle_generic_vertices(const MultiGraph& g,
                                                 const EnumOptions& opt = {}) {
  auto cycles = enumerate_cycles(g, opt);
  return cycle_generic_vertices(g, cycles, cyclic_core(g, cycles));
}

// A piece: a path of length < 2, or one where every interior vertex admits a
// cycle meeting both the left and right sides of the walk in an edge.
inline bool is_piece(const Walk& w, const std::vector<CycleBody>& cycles) {
  std::size_t k = w.length();
  if (k < 2) return true;
  for (std::size_t j = 1; j < k; ++j) {
    bool witnessed = false;
    for (const CycleBody& c : cycles) {
      bool left = false, right = false;
      for (std::size_t i = 0; i < j && !left; ++i)
        left = c.contains_edge(w.edge_at(i));
      for (std::size_t i = j; i < k && !right; ++i)
        right = c.contains_edge(w.edge_at(i));
      if (left && right) {
        witnessed = true;
        break;
      }
    }
    if (!witnessed) return false;
  }
  return true;
}

// Maximal pieces of a path: pieces among the contiguous subwalks that are not
// strictly contained in a longer piece. For a path they are exactly the
// claimed edge-disjoint decomposition; the claim itself is audited elsewhere.
inline std::vector<Walk> decompose_maximal_pieces(
    const Walk& w, const MultiGraph& g,
    const std::vector<CycleBody>& cycles) {
  validate_walk(w, g);
  if (!is_path(w)) fail_input("decompose_maximal_pieces: walk is not a path");
  std::size_t k = w.length();
  if (k == 0) return {w};
  // piece[a][b]: subwalk from vertex position a to b is a piece
  std::vector<std::vector<bool>> piece(k + 1, std::vector<bool>(k + 1, false));
  auto subwalk = [&](std::size_t a, std::size_t b) {
    Walk s;
    s.seq.assign(w.seq.begin() + 2 * a, w.seq.begin() + 2 * b + 1);
    return s;
  };
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b <= k; ++b)
      piece[a][b] = is_piece(subwalk(a, b), cycles);
  std::vector<Walk> out;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b <= k; ++b) {
      if (!piece[a][b]) continue;
      bool maximal = true;
      for (std::size_t a2 = 0; a2 <= a && maximal; ++a2)
        for (std::size_t b2 = b; b2 <= k && maximal; ++b2)
          if ((a2 < a || b2 > b) && piece[a2][b2]) maximal = false;
      if (maximal) out.push_back(subwalk(a, b));
    }
  return out;
}

}  // namespace cdcw
