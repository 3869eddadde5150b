#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cdcw/sign_labeling.hpp"

namespace cdcw {

struct PathSegment {
  Walk walk;      // canonical traversal; endpoints are cycle generic
  WalkBody body;  // sorted vertex/edge sets
  bool closed = false;  // both endpoints coincide (lone generic vertex)
};

// A maximal member of S = { K : every cycle sharing an edge with K contains
// K }, restricted to edge-bearing subgraphs of the cyclic core. The edge set
// is one class of "identical containing-cycle set"; the vertex set is the
// common vertex set of those cycles, so isolated vertices can occur.
struct CycleSegment {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  bool connected = false;
};

struct ReducedGraph {
  MultiGraph graph;  // G_c: generic vertices, one edge per path segment
  std::map<EdgeId, std::vector<EdgeId>> edge_to_segment;  // G_c id -> host edges
  std::vector<std::pair<CycleBody, CycleBody>> eta;  // host cycle -> G_c cycle
  bool eta_bijective = false;
};

struct CycleComponent {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

struct SegmentAtlas {
  MultiGraph host;
  std::vector<CycleBody> cycles;
  CyclicCore core;
  std::set<VertexId> generic;
  std::vector<PathSegment> path_segments;
  std::vector<CycleSegment> cycle_segments;
  ReducedGraph reduced;

  std::vector<CycleComponent> components;
  bool components_applicable = false;  // false iff ~ failed transitivity
  std::vector<EdgeId> off_core_edges;  // bridges and other acyclic edges

  bool strong_cyclic = false;
  bool cycle_separable = false;
  bool cactus_free = false;
  std::vector<CycleBody> leaf_cycles;

  int segments_in(const CycleBody& c) const {
    int n = 0;
    for (const PathSegment& p : path_segments)
      if (std::includes(c.edges.begin(), c.edges.end(), p.body.edges.begin(),
                        p.body.edges.end()))
        ++n;
    return n;
  }
};

namespace detail {

inline Walk rotate_cycle_walk(const Walk& w, std::size_t pos) {
  // w is closed; produce the same cyclic traversal starting at vertex slot pos
  std::size_t k = w.length();
  Walk out;
  out.seq.reserve(2 * k + 1);
  out.seq.push_back(w.vertex_at(pos));
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = (pos + i) % k;
    out.seq.push_back(w.edge_at(j));
    out.seq.push_back(w.vertex_at(j + 1 == k ? 0 : j + 1));
  }
  out.seq.back() = w.vertex_at(pos);
  return out;
}

inline Walk cycle_arc(const Walk& w, std::size_t from, std::size_t to) {
  // subwalk of the closed walk from vertex slot `from` forward to slot `to`
  std::size_t k = w.length();
  Walk out;
  out.seq.push_back(w.vertex_at(from));
  std::size_t i = from;
  do {
    out.seq.push_back(w.edge_at(i));
    i = (i + 1) % k;
    out.seq.push_back(w.vertex_at(i));
  } while (i != to);
  return out;
}

}  // namespace detail

// All path segments: per-cycle arcs between consecutive generic vertices
// (the whole cycle as a closed walk when it meets only one), deduplicated by
// edge set.
inline std::vector<PathSegment> compute_path_segments(
    const MultiGraph& g, const std::vector<CycleBody>& cycles,
    const std::set<VertexId>& generic) {
  std::map<std::vector<EdgeId>, PathSegment> by_edges;
  for (const CycleBody& c : cycles) {
    Walk w = cycle_walk(g, c);
    std::size_t k = w.length();
    std::vector<std::size_t> gpos;
    for (std::size_t i = 0; i < k; ++i)
      if (generic.count(w.vertex_at(i))) gpos.push_back(i);
    if (gpos.empty())
      fail_internal("path segments: cycle without a generic vertex");
    std::vector<Walk> arcs;
    if (gpos.size() == 1) {
      arcs.push_back(detail::rotate_cycle_walk(w, gpos[0]));
    } else {
      for (std::size_t i = 0; i < gpos.size(); ++i)
        arcs.push_back(detail::cycle_arc(w, gpos[i],
                                         gpos[(i + 1) % gpos.size()]));
    }
    for (Walk& arc : arcs) {
      PathSegment seg;
      seg.body = body_of(arc);
      seg.closed = arc.front() == arc.back();
      seg.walk = std::move(arc);
      by_edges.emplace(seg.body.edges, std::move(seg));
    }
  }
  std::vector<PathSegment> out;
  for (auto& [k, v] : by_edges) out.push_back(std::move(v));
  std::sort(out.begin(), out.end(), [](const PathSegment& a, const PathSegment& b) {
    if (a.body.edges.size() != b.body.edges.size())
      return a.body.edges.size() < b.body.edges.size();
    return a.body.edges < b.body.edges;
  });
  return out;
}

inline std::vector<CycleSegment> compute_cycle_segments(
    const MultiGraph& g, const std::vector<CycleBody>& cycles) {
  // Group core edges by their exact set of containing cycles.
  std::map<EdgeId, std::set<int>> cyc_set;
  for (int i = 0; i < static_cast<int>(cycles.size()); ++i)
    for (EdgeId e : cycles[i].edges) cyc_set[e].insert(i);
  std::map<std::set<int>, std::vector<EdgeId>> classes;
  for (auto& [e, s] : cyc_set) classes[s].push_back(e);

  std::vector<CycleSegment> out;
  for (auto& [s, edges] : classes) {
    CycleSegment seg;
    seg.edges = edges;
    std::sort(seg.edges.begin(), seg.edges.end());
    // Vertex set: vertices common to every cycle containing the class.
    std::set<VertexId> common(cycles[*s.begin()].vertices.begin(),
                              cycles[*s.begin()].vertices.end());
    for (int ci : s) {
      std::set<VertexId> keep;
      for (VertexId v : cycles[ci].vertices)
        if (common.count(v)) keep.insert(v);
      common = std::move(keep);
    }
    seg.vertices.assign(common.begin(), common.end());
    MultiGraph sub = subgraph(g, seg.vertices, seg.edges);
    seg.connected = connected_components(sub).n_total == 1;
    out.push_back(std::move(seg));
  }
  std::sort(out.begin(), out.end(), [](const CycleSegment& a, const CycleSegment& b) {
    if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
    return a.edges < b.edges;
  });

  // Guard the class shortcut: each result must be a member of S and must not
  // extend by any core edge.
  for (const CycleSegment& seg : out) {
    for (const CycleBody& c : cycles) {
      bool shares = false;
      for (EdgeId e : seg.edges)
        if (c.contains_edge(e)) {
          shares = true;
          break;
        }
      if (!shares) continue;
      for (EdgeId e : seg.edges)
        if (!c.contains_edge(e))
          fail_internal("cycle segment class not a member of S");
      for (VertexId v : seg.vertices)
        if (!c.contains_vertex(v))
          fail_internal("cycle segment vertices exceed containing cycle");
    }
  }
  return out;
}

// G_c plus the cycle(G) <-> cycle(G_c) correspondence. Reduced edge ids are
// 1-based positions in the canonical path-segment order.
inline ReducedGraph compute_reduced_graph(
    const MultiGraph&, const std::vector<CycleBody>& cycles,
    const std::set<VertexId>& generic,
    const std::vector<PathSegment>& segments, const EnumOptions& opt = {}) {
  ReducedGraph rg;
  std::vector<EdgeSpec> specs;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    EdgeId id = static_cast<EdgeId>(i + 1);
    const Walk& w = segments[i].walk;
    specs.push_back({id, {w.front(), w.back()}});
    rg.edge_to_segment[id] = segments[i].body.edges;
  }
  rg.graph = MultiGraph::build({generic.begin(), generic.end()}, specs);

  // eta: a host cycle maps to the set of reduced edges whose segments it
  // contains. Bijectivity onto cycle(G_c) is the audited claim.
  std::set<CycleBody> images;
  bool ok = true;
  for (const CycleBody& c : cycles) {
    std::vector<EdgeId> reduced_edges;
    for (std::size_t i = 0; i < segments.size(); ++i)
      if (std::includes(c.edges.begin(), c.edges.end(),
                        segments[i].body.edges.begin(),
                        segments[i].body.edges.end()))
        reduced_edges.push_back(static_cast<EdgeId>(i + 1));
    CycleBody image = cycle_body_from_edges(rg.graph, reduced_edges);
    if (!is_cycle_edge_set(rg.graph, image.edges)) ok = false;
    if (!images.insert(image).second) ok = false;  // not injective
    rg.eta.emplace_back(c, image);
  }
  if (ok) {
    auto reduced_cycles = enumerate_cycles(rg.graph, opt);
    ok = reduced_cycles.size() == images.size();  // surjective
  }
  rg.eta_bijective = ok;
  return rg;
}

inline SegmentAtlas build_atlas(const MultiGraph& g, const EnumOptions& opt = {}) {
  SegmentAtlas a;
  a.host = g;
  a.cycles = enumerate_cycles(g, opt);
  a.core = cyclic_core(g, a.cycles);
  a.generic = cycle_generic_vertices(g, a.cycles, a.core);
  a.path_segments = compute_path_segments(g, a.cycles, a.generic);
  a.cycle_segments = compute_cycle_segments(g, a.cycles);
  a.reduced = compute_reduced_graph(g, a.cycles, a.generic, a.path_segments, opt);

  for (EdgeId e : g.edges())
    if (!a.core.core.has_edge(e)) a.off_core_edges.push_back(e);

  // Cycle components: transitive closure of "some cycle contains both",
  // computed on core edges. The pairwise relation is then re-verified; if it
  // is not transitive the partition is reported as not applicable.
  {
    const auto& core_edges = a.core.core.edges();
    std::map<EdgeId, std::size_t> idx;
    for (std::size_t i = 0; i < core_edges.size(); ++i) idx[core_edges[i]] = i;
    std::vector<std::size_t> parent(core_edges.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const CycleBody& c : a.cycles)
      for (std::size_t i = 1; i < c.edges.size(); ++i) {
        std::size_t ra = find(idx[c.edges[0]]), rb = find(idx[c.edges[i]]);
        if (ra != rb) parent[rb] = ra;
      }
    std::map<std::size_t, std::vector<EdgeId>> groups;
    for (std::size_t i = 0; i < core_edges.size(); ++i)
      groups[find(i)].push_back(core_edges[i]);
    bool transitive = true;
    for (auto& [root, edges] : groups) {
      for (std::size_t i = 0; i < edges.size() && transitive; ++i)
        for (std::size_t j = i + 1; j < edges.size() && transitive; ++j) {
          bool related = false;
          for (const CycleBody& c : a.cycles)
            if (c.contains_edge(edges[i]) && c.contains_edge(edges[j])) {
              related = true;
              break;
            }
          if (!related) transitive = false;
        }
      CycleComponent comp;
      comp.edges = edges;
      std::set<VertexId> vs;
      for (EdgeId e : edges) {
        auto [u, v] = g.endpoints(e);
        vs.insert(u);
        vs.insert(v);
      }
      comp.vertices.assign(vs.begin(), vs.end());
      a.components.push_back(std::move(comp));
    }
    a.components_applicable = transitive;
    std::sort(a.components.begin(), a.components.end(),
              [](const CycleComponent& x, const CycleComponent& y) {
                return x.edges < y.edges;
              });
  }

  // Classification flags.
  bool core_is_whole =
      a.core.core.edges() == g.edges() && a.core.core.vertices() == g.vertices();
  a.strong_cyclic = g.edge_count() >= 1 && a.components.size() == 1 &&
                    a.components_applicable && core_is_whole;
  a.cycle_separable =
      g.edge_count() >= 2 &&
      (a.components.size() >= 2 || a.core.core.edges() != g.edges());
  a.cactus_free = a.cycles.size() == 1;
  if (!a.cactus_free) {
    bool all_multi = true;
    for (const CycleBody& c : a.cycles)
      if (a.segments_in(c) <= 1) {
        all_multi = false;
        break;
      }
    a.cactus_free = all_multi;
  }

  // Leaf cycles: cycles that no other cycle shares an edge with; exactly the
  // cycles forced to appear twice in any cycle double cover. This also covers
  // the one-path-segment case.
  for (const CycleBody& c : a.cycles) {
    bool lonely = true;
    for (const CycleBody& d : a.cycles) {
      if (d == c) continue;
      for (EdgeId e : c.edges)
        if (d.contains_edge(e)) {
          lonely = false;
          break;
        }
      if (!lonely) break;
    }
    if (lonely) a.leaf_cycles.push_back(c);
  }
  return a;
}

// All simple paths with at least one edge, deduplicated across orientation,
// canonical order. Used by piece decomposition audits and removal searches.
inline std::vector<Walk> enumerate_paths(const MultiGraph& g,
                                         std::size_t cap = 200000) {
  std::vector<Walk> out;
  std::vector<int> seq;
  std::set<VertexId> used;
  auto dfs = [&](auto&& self, VertexId cur) -> void {
    for (EdgeId e : g.incident(cur)) {
      if (g.is_loop(e)) continue;
      VertexId w = g.other_end(e, cur);
      if (used.count(w)) continue;
      seq.push_back(e);
      seq.push_back(w);
      Walk cand{seq};
      Walk rev = inverse(cand);
      if (cand.seq <= rev.seq) {
        out.push_back(cand);
        if (out.size() > cap) fail_resource("path enumeration exceeded cap");
      }
      used.insert(w);
      self(self, w);
      used.erase(w);
      seq.pop_back();
      seq.pop_back();
    }
  };
  for (VertexId v : g.vertices()) {
    seq = {v};
    used = {v};
    dfs(dfs, v);
  }
  std::sort(out.begin(), out.end(),
            [](const Walk& a, const Walk& b) { return a.seq < b.seq; });
  return out;
}

struct Removal {
  WalkBody removed;
  MultiGraph remainder;
  int tier = 0;  // 1: connected cycle segment, 2: path segment, 3: plain path
};

// Search for a removable piece: G - P must stay strong cyclic. Candidates are
// tried in canonical order per tier; every hit is verified before returning.
inline std::optional<Removal> removable_path_segment(const MultiGraph& g,
                                                     const SegmentAtlas& atlas,
                                                     const EnumOptions& opt = {}) {
  if (!atlas.strong_cyclic)
    fail_input("removable_path_segment: graph is not strong cyclic");
  auto try_candidate = [&](const std::vector<VertexId>& vs,
                           const std::vector<EdgeId>& es,
                           int tier) -> std::optional<Removal> {
    MultiGraph part = subgraph(g, vs, es);
    MultiGraph rest = graph_subtract(g, part);
    if (rest.edge_count() == 0) return std::nullopt;
    SegmentAtlas rest_atlas = build_atlas(rest, opt);
    if (!rest_atlas.strong_cyclic) return std::nullopt;
    return Removal{WalkBody{vs, es}, rest, tier};
  };
  for (const CycleSegment& seg : atlas.cycle_segments) {
    if (!seg.connected) continue;
    if (auto r = try_candidate(seg.vertices, seg.edges, 1)) return r;
  }
  for (const PathSegment& seg : atlas.path_segments)
    if (auto r = try_candidate(seg.body.vertices, seg.body.edges, 2)) return r;
  for (const Walk& p : enumerate_paths(g)) {
    WalkBody b = body_of(p);
    if (auto r = try_candidate(b.vertices, b.edges, 3)) return r;
  }
  return std::nullopt;
}

struct NestedResult {
  std::optional<MultiGraph> result;
  std::vector<WalkBody> removed;
  std::string failure;  // empty on success
};

// Strong cyclic G_m subseteq G with cdim m, by repeated removal.
inline NestedResult nested_subgraphs(const MultiGraph& g, int m,
                                     const EnumOptions& opt = {}) {
  NestedResult res;
  MultiGraph cur = g;
  SegmentAtlas atlas = build_atlas(cur, opt);
  if (!atlas.strong_cyclic) fail_input("nested_subgraphs: not strong cyclic");
  int dim = cdim_value(cur, opt);
  if (m < 1 || m > dim) fail_input("nested_subgraphs: m out of range");
  while (dim > m) {
    auto rem = removable_path_segment(cur, atlas, opt);
    if (!rem) {
      res.failure = "no removable segment at cdim " + std::to_string(dim);
      return res;
    }
    cur = rem->remainder;
    res.removed.push_back(rem->removed);
    atlas = build_atlas(cur, opt);
    if (!atlas.strong_cyclic) {
      res.failure = "removal lost strong cyclicity";
      return res;
    }
    int next = cdim_value(cur, opt);
    if (next < m) {
      res.failure = "cdim dropped below target: " + std::to_string(next);
      return res;
    }
    dim = next;
  }
  res.result = cur;
  return res;
}

}  // namespace cdcw
