#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdcw {

// Error kinds map onto process exit codes: input -> 1, internal -> 2.
// Resource errors are inputs that exceed a configured cap; the audit layer
// turns them into not-applicable records instead of aborting.
struct Error : std::runtime_error {
  enum class Kind { input, resource, internal };
  Kind kind;
  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail_input(const std::string& msg) {
  throw Error(Error::Kind::input, msg);
}
[[noreturn]] inline void fail_resource(const std::string& msg) {
  throw Error(Error::Kind::resource, msg);
}
[[noreturn]] inline void fail_internal(const std::string& msg) {
  throw Error(Error::Kind::internal, msg);
}

using VertexId = int;
using EdgeId = int;

struct EdgeSpec {
  EdgeId id;
  std::vector<VertexId> ends;  // one entry for a loop, two otherwise
};

// Finite multigraph (V, E, r): r maps each edge to one (loop) or two
// endpoints. Immutable after construction; all id lists are kept sorted so
// every downstream computation is deterministic.
class MultiGraph {
 public:
  MultiGraph() = default;

  static MultiGraph build(std::vector<VertexId> vertex_ids,
                          std::vector<EdgeSpec> edge_specs) {
    MultiGraph g;
    std::sort(vertex_ids.begin(), vertex_ids.end());
    if (std::adjacent_find(vertex_ids.begin(), vertex_ids.end()) !=
        vertex_ids.end())
      fail_input("duplicate vertex id");
    g.vertices_ = std::move(vertex_ids);

    std::sort(edge_specs.begin(), edge_specs.end(),
              [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });
    for (std::size_t i = 0; i + 1 < edge_specs.size(); ++i)
      if (edge_specs[i].id == edge_specs[i + 1].id)
        fail_input("duplicate edge id " + std::to_string(edge_specs[i].id));
    g.edges_.reserve(edge_specs.size());
    g.ends_.reserve(edge_specs.size());
    for (const EdgeSpec& s : edge_specs) {
      std::set<VertexId> uniq(s.ends.begin(), s.ends.end());
      if (uniq.empty() || uniq.size() > 2)
        fail_input("edge " + std::to_string(s.id) +
                   ": endpoint set must have one or two vertices");
      for (VertexId v : uniq)
        if (!g.has_vertex(v))
          fail_input("edge " + std::to_string(s.id) +
                     " references unknown vertex " + std::to_string(v));
      VertexId u = *uniq.begin();
      VertexId v = *uniq.rbegin();
      g.edges_.push_back(s.id);
      g.ends_.emplace_back(u, v);
    }
    g.build_incidence();
    return g;
  }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool is_null() const { return vertices_.empty() && edges_.empty(); }

  bool has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }
  bool has_edge(EdgeId e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  std::size_t edge_index(EdgeId e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
      fail_internal("edge_index: unknown edge " + std::to_string(e));
    return static_cast<std::size_t>(it - edges_.begin());
  }
  std::size_t vertex_index(VertexId v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
      fail_internal("vertex_index: unknown vertex " + std::to_string(v));
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  // Endpoints as an ordered pair (u <= v); u == v for loops.
  std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
    return ends_[edge_index(e)];
  }
  bool is_loop(EdgeId e) const {
    auto [u, v] = endpoints(e);
    return u == v;
  }
  VertexId other_end(EdgeId e, VertexId v) const {
    auto [a, b] = endpoints(e);
    if (a == v) return b;
    if (b == v) return a;
    fail_internal("other_end: vertex not an endpoint");
  }

  // Incident edge ids, sorted; a loop appears once but adds 2 to the degree.
  const std::vector<EdgeId>& incident(VertexId v) const {
    return incident_[vertex_index(v)];
  }
  int degree(VertexId v) const {
    int d = 0;
    for (EdgeId e : incident(v)) d += is_loop(e) ? 2 : 1;
    return d;
  }

  bool operator==(const MultiGraph& o) const {
    return vertices_ == o.vertices_ && edges_ == o.edges_ && ends_ == o.ends_;
  }
  bool operator!=(const MultiGraph& o) const { return !(*this == o); }

 private:
  void build_incidence() {
    incident_.assign(vertices_.size(), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      auto [u, v] = ends_[i];
      incident_[vertex_index(u)].push_back(edges_[i]);
      if (v != u) incident_[vertex_index(v)].push_back(edges_[i]);
    }
  }

  std::vector<VertexId> vertices_;
  std::vector<EdgeId> edges_;
  std::vector<std::pair<VertexId, VertexId>> ends_;
  std::vector<std::vector<EdgeId>> incident_;
};

inline MultiGraph build_graph(std::vector<VertexId> vertex_ids,
                              std::vector<EdgeSpec> edge_specs) {
  return MultiGraph::build(std::move(vertex_ids), std::move(edge_specs));
}

// Subgraph with the given vertex and edge id sets; endpoints come from the
// host and must be covered by the vertex set.
inline MultiGraph subgraph(const MultiGraph& host,
                           const std::vector<VertexId>& vertex_ids,
                           const std::vector<EdgeId>& edge_ids) {
  std::vector<EdgeSpec> specs;
  specs.reserve(edge_ids.size());
  for (EdgeId e : edge_ids) {
    if (!host.has_edge(e)) fail_input("subgraph: unknown edge id");
    auto [u, v] = host.endpoints(e);
    specs.push_back({e, {u, v}});
  }
  return MultiGraph::build(vertex_ids, std::move(specs));
}

// Edge-induced subgraph: vertices are exactly the endpoints of the edges.
inline MultiGraph edge_subgraph(const MultiGraph& host,
                                const std::vector<EdgeId>& edge_ids) {
  std::set<VertexId> vs;
  for (EdgeId e : edge_ids) {
    auto [u, v] = host.endpoints(e);
    vs.insert(u);
    vs.insert(v);
  }
  return subgraph(host, {vs.begin(), vs.end()}, edge_ids);
}

namespace detail {
inline void check_endpoint_agreement(const MultiGraph& a, const MultiGraph& b) {
  for (EdgeId e : a.edges())
    if (b.has_edge(e) && a.endpoints(e) != b.endpoints(e))
      fail_input("graphs disagree on endpoints of shared edge " +
                 std::to_string(e));
}
}  // namespace detail

inline MultiGraph graph_union(const MultiGraph& a, const MultiGraph& b) {
  detail::check_endpoint_agreement(a, b);
  std::set<VertexId> vs(a.vertices().begin(), a.vertices().end());
  vs.insert(b.vertices().begin(), b.vertices().end());
  std::vector<EdgeSpec> specs;
  std::set<EdgeId> seen;
  for (const MultiGraph* g : {&a, &b})
    for (EdgeId e : g->edges())
      if (seen.insert(e).second) {
        auto [u, v] = g->endpoints(e);
        specs.push_back({e, {u, v}});
      }
  return MultiGraph::build({vs.begin(), vs.end()}, std::move(specs));
}

inline MultiGraph graph_intersection(const MultiGraph& a, const MultiGraph& b) {
  detail::check_endpoint_agreement(a, b);
  std::vector<VertexId> vs;
  for (VertexId v : a.vertices())
    if (b.has_vertex(v)) vs.push_back(v);
  std::vector<EdgeSpec> specs;
  for (EdgeId e : a.edges())
    if (b.has_edge(e)) {
      auto [u, v] = a.endpoints(e);
      specs.push_back({e, {u, v}});
    }
  return MultiGraph::build(std::move(vs), std::move(specs));
}

// G - H keeps the edges E - E_H; a vertex survives iff it is outside V_H or
// still has an incident kept edge.
inline MultiGraph graph_subtract(const MultiGraph& g, const MultiGraph& h) {
  std::vector<EdgeSpec> specs;
  std::set<VertexId> kept;
  for (EdgeId e : g.edges())
    if (!h.has_edge(e)) {
      auto [u, v] = g.endpoints(e);
      specs.push_back({e, {u, v}});
      kept.insert(u);
      kept.insert(v);
    }
  for (VertexId v : g.vertices())
    if (!h.has_vertex(v)) kept.insert(v);
  return MultiGraph::build({kept.begin(), kept.end()}, std::move(specs));
}

struct ComponentReport {
  std::vector<std::vector<VertexId>> partition;  // sorted blocks, sorted order
  int n_total = 0;      // number of connected components
  int n_with_edge = 0;  // components containing at least one edge
};

inline ComponentReport connected_components(const MultiGraph& g) {
  ComponentReport rep;
  std::map<VertexId, int> comp;
  for (VertexId v : g.vertices()) comp[v] = -1;
  int next = 0;
  for (VertexId root : g.vertices()) {
    if (comp[root] != -1) continue;
    std::vector<VertexId> stack{root};
    comp[root] = next;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.other_end(e, v);
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  rep.partition.assign(next, {});
  for (VertexId v : g.vertices()) rep.partition[comp[v]].push_back(v);
  rep.n_total = next;
  std::vector<bool> has_edge(next, false);
  for (EdgeId e : g.edges()) has_edge[comp[g.endpoints(e).first]] = true;
  for (bool b : has_edge) rep.n_with_edge += b ? 1 : 0;
  return rep;
}

inline bool is_connected(const MultiGraph& g) {
  return connected_components(g).n_total == 1;
}

// An edge is a bridge iff deleting it (edges only, vertices stay) increases
// the number of connected components. Loops and parallel pairs never qualify.
inline std::vector<EdgeId> bridges(const MultiGraph& g) {
  std::vector<EdgeId> out;
  int base = connected_components(g).n_total;
  for (EdgeId e : g.edges()) {
    if (g.is_loop(e)) continue;
    std::vector<EdgeSpec> specs;
    for (EdgeId f : g.edges())
      if (f != e) {
        auto [u, v] = g.endpoints(f);
        specs.push_back({f, {u, v}});
      }
    MultiGraph gm = MultiGraph::build(g.vertices(), std::move(specs));
    if (connected_components(gm).n_total > base) out.push_back(e);
  }
  return out;
}

inline bool is_bridgeless(const MultiGraph& g) { return bridges(g).empty(); }

}  // namespace cdcw
