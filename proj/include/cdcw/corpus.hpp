#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cdcw/canonical.hpp"
#include "cdcw/multigraph.hpp"

namespace cdcw {

struct CorpusEntry {
  std::string name;
  MultiGraph graph;
  std::string provenance;  // "generated" | "named"
};

struct Corpus {
  std::vector<CorpusEntry> graphs;
  int max_edges = 0;
  bool include_named = false;
};

namespace named_graphs {

inline MultiGraph cycle_graph(int n) {
  std::vector<VertexId> vs;
  std::vector<EdgeSpec> es;
  for (int i = 1; i <= n; ++i) vs.push_back(i);
  for (int i = 1; i <= n; ++i) es.push_back({i, {i, i % n + 1}});
  return MultiGraph::build(vs, es);
}

inline MultiGraph loop_graph() { return MultiGraph::build({1}, {{1, {1, 1}}}); }

inline MultiGraph digon() {
  return MultiGraph::build({1, 2}, {{1, {1, 2}}, {2, {1, 2}}});
}

inline MultiGraph theta() {
  return MultiGraph::build({1, 2}, {{1, {1, 2}}, {2, {1, 2}}, {3, {1, 2}}});
}

inline MultiGraph subdivided_theta() {
  return MultiGraph::build({1, 2, 3, 4, 5},
                           {{1, {1, 3}},
                            {2, {3, 2}},
                            {3, {1, 4}},
                            {4, {4, 2}},
                            {5, {1, 5}},
                            {6, {5, 2}}});
}

inline MultiGraph complete_graph(int n) {
  std::vector<VertexId> vs;
  std::vector<EdgeSpec> es;
  for (int i = 1; i <= n; ++i) vs.push_back(i);
  int id = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) es.push_back({++id, {i, j}});
  return MultiGraph::build(vs, es);
}

inline MultiGraph k33() {
  std::vector<EdgeSpec> es;
  int id = 0;
  for (int i = 1; i <= 3; ++i)
    for (int j = 4; j <= 6; ++j) es.push_back({++id, {i, j}});
  return MultiGraph::build({1, 2, 3, 4, 5, 6}, es);
}

inline MultiGraph bowtie() {
  return MultiGraph::build(
      {1, 2, 3, 4, 5},
      {{1, {1, 2}}, {2, {2, 3}}, {3, {1, 3}}, {4, {3, 4}}, {5, {4, 5}}, {6, {3, 5}}});
}

inline MultiGraph dumbbell() {
  return MultiGraph::build({1, 2, 3, 4, 5, 6},
                           {{1, {1, 2}},
                            {2, {2, 3}},
                            {3, {1, 3}},
                            {4, {3, 4}},
                            {5, {4, 5}},
                            {6, {5, 6}},
                            {7, {4, 6}}});
}

inline MultiGraph prism() {
  return MultiGraph::build({1, 2, 3, 4, 5, 6},
                           {{1, {1, 2}},
                            {2, {2, 3}},
                            {3, {1, 3}},
                            {4, {4, 5}},
                            {5, {5, 6}},
                            {6, {4, 6}},
                            {7, {1, 4}},
                            {8, {2, 5}},
                            {9, {3, 6}}});
}

inline MultiGraph cube() {
  std::vector<EdgeSpec> es;
  int id = 0;
  // vertices 1..8 as 3-bit masks + 1
  for (int u = 0; u < 8; ++u)
    for (int b = 0; b < 3; ++b) {
      int v = u ^ (1 << b);
      if (u < v) es.push_back({++id, {u + 1, v + 1}});
    }
  return MultiGraph::build({1, 2, 3, 4, 5, 6, 7, 8}, es);
}

inline MultiGraph petersen() {
  std::vector<EdgeSpec> es;
  int id = 0;
  for (int i = 0; i < 5; ++i) es.push_back({++id, {i + 1, (i + 1) % 5 + 1}});
  for (int i = 0; i < 5; ++i) es.push_back({++id, {i + 1, i + 6}});
  for (int i = 0; i < 5; ++i) es.push_back({++id, {i + 6, (i + 2) % 5 + 6}});
  return MultiGraph::build({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, es);
}

// C4 with two opposite sides doubled; its four 4-cycles share the two
// undoubled sides, which therefore form a disconnected cycle segment.
inline MultiGraph doubled_c4() {
  return MultiGraph::build(
      {1, 2, 3, 4},
      {{1, {1, 2}}, {2, {1, 2}}, {3, {2, 3}}, {4, {3, 4}}, {5, {3, 4}}, {6, {4, 1}}});
}

inline std::vector<CorpusEntry> all() {
  std::vector<CorpusEntry> out;
  auto add = [&](const std::string& name, MultiGraph g) {
    out.push_back({name, std::move(g), "named"});
  };
  add("loop", loop_graph());
  add("digon", digon());
  add("triangle", cycle_graph(3));
  add("c4", cycle_graph(4));
  add("c5", cycle_graph(5));
  add("c6", cycle_graph(6));
  add("c7", cycle_graph(7));
  add("c8", cycle_graph(8));
  add("theta", theta());
  add("subdivided_theta", subdivided_theta());
  add("doubled_c4", doubled_c4());
  add("k4", complete_graph(4));
  add("k5", complete_graph(5));
  add("k33", k33());
  add("bowtie", bowtie());
  add("dumbbell", dumbbell());
  add("prism", prism());
  add("cube", cube());
  add("petersen", petersen());
  return out;
}

}  // namespace named_graphs

namespace detail {

// Connected simple graphs with up to max_edges edges, one per isomorphism
// class, grown edge by edge (new edge between existing vertices, or a pendant
// vertex) with canonical-form dedup.
inline std::vector<MultiGraph> connected_simple_bases(int max_edges) {
  std::map<std::vector<int>, MultiGraph> seen;
  MultiGraph k1 = MultiGraph::build({1}, {});
  seen[canonical_form(k1).key] = k1;
  std::vector<MultiGraph> frontier{k1};
  std::vector<MultiGraph> all{k1};
  for (int m = 1; m <= max_edges; ++m) {
    std::vector<MultiGraph> next;
    for (const MultiGraph& g : frontier) {
      std::size_t n = g.vertex_count();
      auto grow = [&](VertexId u, VertexId v, VertexId new_vertex) {
        std::vector<VertexId> vs = g.vertices();
        if (new_vertex) vs.push_back(new_vertex);
        std::vector<EdgeSpec> es;
        for (EdgeId e : g.edges()) {
          auto [a, b] = g.endpoints(e);
          es.push_back({e, {a, b}});
        }
        es.push_back({static_cast<EdgeId>(m), {u, v}});
        MultiGraph cand = MultiGraph::build(vs, es);
        auto key = canonical_form(cand).key;
        if (seen.emplace(key, cand).second) {
          next.push_back(cand);
          all.push_back(cand);
        }
      };
      const auto& verts = g.vertices();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          VertexId u = verts[i], v = verts[j];
          bool adjacent = false;
          for (EdgeId e : g.incident(u))
            if (g.other_end(e, u) == v) adjacent = true;
          if (!adjacent) grow(u, v, 0);
        }
      VertexId fresh = verts.empty() ? 1 : verts.back() + 1;
      for (VertexId u : verts) grow(u, fresh, fresh);
    }
    frontier = std::move(next);
  }
  return all;
}

}  // namespace detail

// Exhaustive tier: all pairwise non-isomorphic connected bridgeless
// multigraphs with at most max_edges edges. Every such multigraph is a
// connected simple base whose bridges carry multiplicity >= 2, plus optional
// extra parallel copies and loops; distributions are deduplicated under the
// base's automorphism group.
inline std::vector<MultiGraph> generate_bridgeless_multigraphs(int max_edges) {
  std::vector<MultiGraph> out;
  for (const MultiGraph& base : detail::connected_simple_bases(max_edges)) {
    int mb = static_cast<int>(base.edge_count());
    std::vector<EdgeId> bridge_edges = bridges(base);
    int forced = static_cast<int>(bridge_edges.size());
    if (mb + forced > max_edges) continue;
    std::size_t n = base.vertex_count();
    const auto& verts = base.vertices();
    const auto& edges = base.edges();

    // Edge slot -> (endpoint indices); automorphisms permute slots via these.
    std::vector<std::pair<std::size_t, std::size_t>> edge_ends;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot_of;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = base.endpoints(edges[i]);
      std::size_t iu = base.vertex_index(u), iv = base.vertex_index(v);
      if (iu > iv) std::swap(iu, iv);
      edge_ends.emplace_back(iu, iv);
      slot_of[{iu, iv}] = i;
    }
    std::vector<bool> is_bridge(edges.size(), false);
    for (EdgeId e : bridge_edges) is_bridge[base.edge_index(e)] = true;

    auto auts = automorphisms(base);

    // distribution: extras per edge slot, loops per vertex slot
    std::vector<int> extras(edges.size(), 0), loops(n, 0);
    std::set<std::vector<int>> reps;

    auto canonical_distribution = [&]() {
      std::vector<int> best;
      for (const auto& pi : auts) {
        std::vector<int> v;
        v.reserve(edges.size() + n);
        for (std::size_t s = 0; s < edges.size(); ++s) {
          auto [a, b] = edge_ends[s];
          std::size_t pa = pi[a], pb = pi[b];
          if (pa > pb) std::swap(pa, pb);
          v.push_back(extras[slot_of.at({pa, pb})]);
        }
        for (std::size_t i = 0; i < n; ++i) v.push_back(loops[pi[i]]);
        if (best.empty() || v < best) best = std::move(v);
      }
      return best;
    };

    auto materialize = [&]() {
      std::vector<EdgeSpec> specs;
      int id = 0;
      for (std::size_t s = 0; s < edges.size(); ++s) {
        auto [a, b] = edge_ends[s];
        for (int k = 0; k <= extras[s]; ++k)
          specs.push_back({++id, {verts[a], verts[b]}});
      }
      for (std::size_t i = 0; i < n; ++i)
        for (int k = 0; k < loops[i]; ++k) specs.push_back({++id, {verts[i], verts[i]}});
      out.push_back(MultiGraph::build(verts, specs));
    };

    // Enumerate all budgeted distributions; keep one per automorphism orbit.
    auto rec = [&](auto&& self, std::size_t slot, int budget) -> void {
      if (slot == edges.size() + n) {
        if (reps.insert(canonical_distribution()).second) materialize();
        return;
      }
      if (slot < edges.size()) {
        int lo = is_bridge[slot] ? 1 : 0;  // bridges must be doubled
        for (int x = lo; x <= budget; ++x) {
          extras[slot] = x;
          self(self, slot + 1, budget - x);
        }
      } else {
        std::size_t vi = slot - edges.size();
        for (int x = 0; x <= budget; ++x) {
          loops[vi] = x;
          self(self, slot + 1, budget - x);
        }
      }
    };
    rec(rec, 0, max_edges - mb);
  }
  return out;
}

inline Corpus corpus_generate(int max_edges, bool include_named,
                              int hard_cap = 12) {
  if (max_edges > hard_cap)
    fail_resource("corpus bound " + std::to_string(max_edges) +
                  " exceeds the exhaustive-tier cap " + std::to_string(hard_cap));
  Corpus corpus;
  corpus.max_edges = max_edges;
  corpus.include_named = include_named;
  if (max_edges >= 0) {
    std::vector<std::pair<std::vector<int>, MultiGraph>> keyed;
    for (MultiGraph& g : generate_bridgeless_multigraphs(max_edges))
      keyed.emplace_back(canonical_form(g).key, std::move(g));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) {
                if (a.second.edge_count() != b.second.edge_count())
                  return a.second.edge_count() < b.second.edge_count();
                return a.first < b.first;
              });
    int idx = 0;
    for (auto& [key, g] : keyed) {
      corpus.graphs.push_back({"gen_" + std::to_string(g.edge_count()) + "e_" +
                                   std::to_string(idx++),
                               std::move(g), "generated"});
    }
  }
  if (include_named)
    for (CorpusEntry& e : named_graphs::all()) corpus.graphs.push_back(std::move(e));
  return corpus;
}

}  // namespace cdcw
