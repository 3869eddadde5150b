#pragma once

#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "cdcw/corpus.hpp"
#include "cdcw/json_io.hpp"

namespace cdcw {

struct AuditOptions {
  int jobs = 1;
  std::size_t oracle_cycle_cap = 60;
  std::size_t incidence_cap = 24;
  std::size_t subgraph_claim_edge_cap = 7;  // P3.1.viii exhaustive tier
  std::size_t path_claim_edge_cap = 8;      // P3.1.ii exhaustive tier
  std::size_t builder_cycle_cap = 40;       // P3.2.11 / THM.goddyn per-graph cap
  bool run_oracle_cross_check = true;
  std::set<std::string> only_claims;  // empty = full registry
  EnumOptions enum_opts;
};

struct ClaimRecord {
  std::string graph;
  std::string claim;
  std::string status;  // "pass" | "fail" | "not-applicable"
  std::string note;
  Json payload;  // counterexample/witness details; fails carry "mel"
};

struct AuditReport {
  Json meta;
  std::vector<ClaimRecord> records;
  std::vector<Json> discrepancies;  // builder failed, oracle found a cover

  bool has_fail() const {
    for (const ClaimRecord& r : records)
      if (r.status == "fail") return true;
    return false;
  }

  Json to_json() const {
    Json j;
    j["kind"] = "audit";
    j["meta"] = meta;
    Json recs = Json::array();
    for (const ClaimRecord& r : records) {
      Json jr;
      jr["graph"] = r.graph;
      jr["claim"] = r.claim;
      jr["status"] = r.status;
      if (!r.note.empty()) jr["note"] = r.note;
      if (!r.payload.is_null()) jr["payload"] = r.payload;
      recs.push_back(jr);
    }
    j["records"] = recs;
    j["discrepancy_table"] = discrepancies;
    Json summary;
    std::map<std::string, std::array<int, 3>> counts;
    for (const ClaimRecord& r : records) {
      auto& c = counts[r.claim];
      if (r.status == "pass") ++c[0];
      else if (r.status == "fail") ++c[1];
      else ++c[2];
    }
    for (auto& [claim, c] : counts) {
      Json s;
      s["pass"] = c[0];
      s["fail"] = c[1];
      s["not_applicable"] = c[2];
      s["applicable"] = c[0] + c[1];
      summary[claim] = s;
    }
    j["summary"] = summary;
    return j;
  }
};

inline const std::vector<std::string>& claim_registry() {
  static const std::vector<std::string> reg = {
      "P3.1.i",  "P3.1.ii",  "P3.1.iii", "P3.1.iv", "P3.1.v",  "P3.1.vi",
      "P3.1.viii", "P3.1.ix", "P3.2.1",  "P3.2.2",  "P3.2.3",  "P3.2.4",
      "P3.2.5",  "P3.2.6",   "P3.2.7",   "P3.2.8",  "P3.2.9",  "P3.2.10",
      "P3.2.11", "COR.degc", "COR.segcomp", "THM.goddyn"};
  return reg;
}

namespace audit_detail {

struct GraphCtx {
  std::string name;
  const MultiGraph* g;
  SegmentAtlas atlas;
  CdimCertificate cert;
  bool connected = false;
  bool bridgeless = false;
  std::string mel;

  bool f_optimal() const { return cert.complete && cert.witness.has_value(); }
  const SignLabeling& f() const { return *cert.witness; }
  int dim() const { return cert.value; }
};

inline GraphCtx make_ctx(const std::string& name, const MultiGraph& g,
                         const AuditOptions& opt) {
  GraphCtx ctx;
  ctx.name = name;
  ctx.g = &g;
  ctx.atlas = build_atlas(g, opt.enum_opts);
  ctx.cert = cdim(g, ctx.atlas.cycles, false, opt.incidence_cap);
  ctx.connected = is_connected(g);
  ctx.bridgeless = is_bridgeless(g);
  ctx.mel = write_mel(g);
  return ctx;
}

using Emit = std::function<void(const std::string& claim,
                                const std::string& status,
                                const std::string& note, Json payload)>;

inline Json base_payload(const GraphCtx& ctx) {
  Json p;
  p["mel"] = ctx.mel;
  return p;
}

inline MultiGraph part_subgraph(const MultiGraph& g,
                                const std::vector<VertexId>& vs,
                                const std::vector<EdgeId>& es) {
  return subgraph(g, vs, es);
}

// ---- P3.1 claims ----

inline void claim_p31_i(const GraphCtx& ctx, const AuditOptions& opt, Emit emit) {
  if (ctx.atlas.path_segments.empty()) {
    emit("P3.1.i", "not-applicable", "no path segments", {});
    return;
  }
  if (!ctx.cert.complete) {
    emit("P3.1.i", "not-applicable", "cdim not certified", {});
    return;
  }
  for (const PathSegment& seg : ctx.atlas.path_segments) {
    MultiGraph rest = graph_subtract(
        *ctx.g, part_subgraph(*ctx.g, seg.body.vertices, seg.body.edges));
    int sub = cdim_value(rest, opt.enum_opts);
    if (!(sub < ctx.dim())) {
      Json p = base_payload(ctx);
      p["segment"] = seg.body.edges;
      p["cdim"] = ctx.dim();
      p["cdim_after_removal"] = sub;
      emit("P3.1.i", "fail", "cdim did not strictly drop", p);
      return;
    }
  }
  emit("P3.1.i", "pass",
       std::to_string(ctx.atlas.path_segments.size()) + " segments", {});
}

inline void claim_p31_ii(const GraphCtx& ctx, const AuditOptions& opt, Emit emit) {
  if (ctx.g->edge_count() > opt.path_claim_edge_cap) {
    emit("P3.1.ii", "not-applicable", "resource: edge count above path tier", {});
    return;
  }
  auto paths = enumerate_paths(*ctx.g);
  if (paths.empty()) {
    emit("P3.1.ii", "not-applicable", "no paths with an edge", {});
    return;
  }
  for (const Walk& w : paths) {
    auto pieces = decompose_maximal_pieces(w, *ctx.g, ctx.atlas.cycles);
    std::set<EdgeId> covered;
    std::size_t total = 0;
    bool disjoint = true;
    for (const Walk& piece : pieces) {
      auto body = body_of(piece);
      total += body.edges.size();
      for (EdgeId e : body.edges)
        if (!covered.insert(e).second) disjoint = false;
    }
    auto wbody = body_of(w);
    bool covers = covered == std::set<EdgeId>(wbody.edges.begin(), wbody.edges.end());
    if (!disjoint || !covers) {
      Json p = base_payload(ctx);
      p["path"] = w.seq;
      Json ps = Json::array();
      for (const Walk& piece : pieces) ps.push_back(body_of(piece).edges);
      p["maximal_pieces"] = ps;
      emit("P3.1.ii", "fail",
           disjoint ? "pieces do not cover the path" : "pieces share an edge", p);
      return;
    }
  }
  emit("P3.1.ii", "pass", std::to_string(paths.size()) + " paths", {});
}

inline void claim_p31_iii(const GraphCtx& ctx, const AuditOptions&, Emit emit) {
  if (ctx.atlas.cycles.empty()) {
    emit("P3.1.iii", "not-applicable", "no cycles", {});
    return;
  }
  // Closure of the cycle vertex sets under intersection = all common-vertex
  // sets of cycle families.
  std::set<std::vector<VertexId>> family;
  for (const CycleBody& c : ctx.atlas.cycles) family.insert(c.vertices);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<VertexId>> items(family.begin(), family.end());
    for (const auto& a : items)
      for (const CycleBody& c : ctx.atlas.cycles) {
        std::vector<VertexId> inter;
        std::set_intersection(a.begin(), a.end(), c.vertices.begin(),
                              c.vertices.end(), std::back_inserter(inter));
        if (!inter.empty() && family.insert(inter).second) grew = true;
      }
  }
  for (const auto& common : family) {
    bool has_generic = false;
    for (VertexId v : common)
      if (ctx.atlas.generic.count(v)) has_generic = true;
    if (!has_generic) {
      Json p = base_payload(ctx);
      p["common_vertices"] = common;
      emit("P3.1.iii", "fail", "common vertex set without a generic vertex", p);
      return;
    }
  }
  emit("P3.1.iii", "pass",
       std::to_string(family.size()) + " intersection sets", {});
}

inline void claim_p31_iv(const GraphCtx& ctx, const AuditOptions&, Emit emit) {
  const auto& segs = ctx.atlas.path_segments;
  if (segs.empty()) {
    emit("P3.1.iv", "not-applicable", "no path segments", {});
    return;
  }
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      std::vector<EdgeId> shared_e;
      std::set_intersection(segs[i].body.edges.begin(), segs[i].body.edges.end(),
                            segs[j].body.edges.begin(), segs[j].body.edges.end(),
                            std::back_inserter(shared_e));
      std::vector<VertexId> shared_v;
      std::set_intersection(segs[i].body.vertices.begin(),
                            segs[i].body.vertices.end(),
                            segs[j].body.vertices.begin(),
                            segs[j].body.vertices.end(),
                            std::back_inserter(shared_v));
      bool bad_vertex = false;
      for (VertexId v : shared_v)
        if (!ctx.atlas.generic.count(v)) bad_vertex = true;
      if (!shared_e.empty() || bad_vertex) {
        Json p = base_payload(ctx);
        p["segment_a"] = segs[i].body.edges;
        p["segment_b"] = segs[j].body.edges;
        emit("P3.1.iv", "fail",
             shared_e.empty() ? "non-generic shared vertex" : "shared edge", p);
        return;
      }
    }
  // Consequence: a path segment sharing an edge with a cycle lies inside it.
  for (const PathSegment& seg : segs)
    for (const CycleBody& c : ctx.atlas.cycles) {
      bool shares = false;
      for (EdgeId e : seg.body.edges)
        if (c.contains_edge(e)) shares = true;
      if (!shares) continue;
      if (!std::includes(c.edges.begin(), c.edges.end(), seg.body.edges.begin(),
                         seg.body.edges.end())) {
        Json p = base_payload(ctx);
        p["segment"] = seg.body.edges;
        p["cycle"] = c.edges;
        emit("P3.1.iv", "fail", "segment partially crosses a cycle", p);
        return;
      }
    }
  emit("P3.1.iv", "pass", std::to_string(segs.size()) + " segments", {});
}

inline void claim_p31_v(const GraphCtx& ctx, const AuditOptions& opt, Emit emit) {
  if (!ctx.cert.complete) {
    emit("P3.1.v", "not-applicable", "cdim not certified", {});
    return;
  }
  int d_g = ctx.dim();
  int d_core = cdim_value(ctx.atlas.core.core, opt.enum_opts);
  int d_reduced = cdim_value(ctx.atlas.reduced.graph, opt.enum_opts);
  bool ok = d_g == d_core && d_core == d_reduced && ctx.atlas.reduced.eta_bijective;
  if (!ok) {
    Json p = base_payload(ctx);
    p["cdim"] = d_g;
    p["cdim_core"] = d_core;
    p["cdim_reduced"] = d_reduced;
    p["eta_bijective"] = ctx.atlas.reduced.eta_bijective;
    emit("P3.1.v", "fail", "reduction does not preserve cdim", p);
    return;
  }
  emit("P3.1.v", "pass", "cdim " + std::to_string(d_g), {});
}

inline void claim_p31_vi(const GraphCtx& ctx, const AuditOptions&, Emit emit) {
  if (!ctx.f_optimal()) {
    emit("P3.1.vi", "not-applicable", "no certified optimal labeling", {});
    return;
  }
  const auto& cycles = ctx.atlas.cycles;
  int overlapping_pairs = 0;
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      std::vector<EdgeId> shared;
      std::set_intersection(cycles[i].edges.begin(), cycles[i].edges.end(),
                            cycles[j].edges.begin(), cycles[j].edges.end(),
                            std::back_inserter(shared));
      if (shared.empty()) continue;
      ++overlapping_pairs;
      if (!parallel_restriction_check(*ctx.g, ctx.f(), cycles[i], cycles[j])) {
        Json p = base_payload(ctx);
        p["cycle_a"] = cycles[i].edges;
        p["cycle_b"] = cycles[j].edges;
        emit("P3.1.vi", "fail", "restrictions not parallel", p);
        return;
      }
    }
  if (overlapping_pairs == 0) {
    emit("P3.1.vi", "not-applicable", "no edge-overlapping cycle pairs", {});
    return;
  }
  emit("P3.1.vi", "pass", std::to_string(overlapping_pairs) + " pairs", {});
}

inline void claim_p31_viii(const GraphCtx& ctx, const AuditOptions& opt, Emit emit) {
  if (ctx.g->edge_count() > opt.subgraph_claim_edge_cap) {
    emit("P3.1.viii", "not-applicable", "resource: edge count above subgraph tier", {});
    return;
  }
  if (!ctx.f_optimal()) {
    emit("P3.1.viii", "not-applicable", "no certified optimal labeling", {});
    return;
  }
  const auto& edges = ctx.g->edges();
  std::size_t m = edges.size();
  if (m == 0) {
    emit("P3.1.viii", "not-applicable", "no edges", {});
    return;
  }
  int checked = 0;
  for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
    std::vector<EdgeId> sub_edges;
    for (std::size_t b = 0; b < m; ++b)
      if (mask & (std::size_t(1) << b)) sub_edges.push_back(edges[b]);
    MultiGraph h = edge_subgraph(*ctx.g, sub_edges);
    if (connected_components(h).n_total != 1) continue;
    ++checked;
    auto h_cycles = enumerate_cycles(h, opt.enum_opts);
    int d_h = cdim_value(h, opt.enum_opts);
    std::vector<Vec> restricted;
    for (const CycleBody& c : h_cycles) restricted.push_back(ctx.f().vector_for(c));
    int span = bareiss_rank(restricted);
    if (span != d_h) {
      Json p = base_payload(ctx);
      p["subgraph_edges"] = sub_edges;
      p["restriction_span"] = span;
      p["cdim_subgraph"] = d_h;
      emit("P3.1.viii", "fail", "restriction is not optimal", p);
      return;
    }
  }
  emit("P3.1.viii", "pass",
       std::to_string(checked) + " connected edge subgraphs", {});
}

inline void claim_p31_ix(const GraphCtx& ctx, const AuditOptions& opt, Emit emit) {
  if (ctx.atlas.path_segments.empty() || !ctx.cert.complete) {
    emit("P3.1.ix", "not-applicable",
         ctx.atlas.path_segments.empty() ? "no path segments" : "cdim not certified",
         {});
    return;
  }
  for (const PathSegment& seg : ctx.atlas.path_segments) {
    MultiGraph rest = graph_subtract(
        *ctx.g, part_subgraph(*ctx.g, seg.body.vertices, seg.body.edges));
    int sub = cdim_value(rest, opt.enum_opts);
    if (ctx.dim() != 1 + sub) {
      Json p = base_payload(ctx);
      p["segment"] = seg.body.edges;
      p["cdim"] = ctx.dim();
      p["cdim_after_removal"] = sub;
      emit("P3.1.ix", "fail", "cdim(G) != 1 + cdim(G - P)", p);
      return;
    }
  }
  emit("P3.1.ix", "pass",
       std::to_string(ctx.atlas.path_segments.size()) + " segments", {});
}

// ---- P3.2 claims (standing hypothesis: connected bridgeless, cdim >= 2) ----

inline bool p32_gate(const GraphCtx& ctx, const std::string& claim, Emit emit) {
  if (!ctx.connected || !ctx.bridgeless) {
    emit(claim, "not-applicable", "not connected bridgeless", {});
    return false;
  }
  if (!ctx.cert.complete) {
    emit(claim, "not-applicable", "cdim not certified", {});
    return false;
  }
  if (ctx.dim() < 2) {
    emit(claim, "not-applicable", "cdim < 2", {});
    return false;
  }
  return true;
}

inline void claim_p32_1(const GraphCtx& ctx, const AuditOptions&, Emit emit) {
  if (!p32_gate(ctx, "P3.2.1", emit)) return;
  int instances = 0;
  for (const PathSegment& p : ctx.atlas.path_segments)
    for (const CycleSegment& h : ctx.atlas.cycle_segments) {
      std::vector<EdgeId> shared;
      std::set_intersection(p.body.edges.begin(), p.body.edges.end(),
                            h.edges.begin(), h.edges.end(),
                            std::back_inserter(shared));
      if (!shared.empty()) continue;  // reading: P and H must be edge disjoint
      ++instances;
      bool found = false;
      for (const CycleBody& c : ctx.atlas.cycles) {
        bool p_in = std::includes(c.edges.begin(), c.edges.end(),
                                  p.body.edges.begin(), p.body.edges.end());
        if (!p_in) continue;
        bool h_in = std::includes(c.edges.begin(), c.edges.end(),
                                  h.edges.begin(), h.edges.end()) &&
                    std::includes(c.vertices.begin(), c.vertices.end(),
                                  h.vertices.begin(), h.vertices.end());
        if (!h_in) {
          found = true;
          break;
        }
      }
      if (!found) {
        Json pl = base_payload(ctx);
        pl["path_segment"] = p.body.edges;
        pl["cycle_segment"] = h.edges;
        emit("P3.2.1", "fail", "no cycle contains P and avoids H", pl);
        return;
      }
    }
  if (instances == 0)
    emit("P3.2.1", "not-applicable", "no edge-disjoint (P, H) pairs", {});
  else
    emit("P3.2.1", "pass", std::to_string(instances) + " pairs", {});
}

inline void claim_p32_2(const GraphCtx& ctx, const AuditOptions&, Emit emit) {
  if (!p32_gate(ctx, "P3.2.2", emit)) return;
  for (const CycleSegment& h : ctx.atlas.cycle_segments) {
    MultiGraph rest =
        graph_subtract(*ctx.g, part_subgraph(*ctx.g, h.vertices, h.edges));
    auto b = bridges(rest);
    if (!b.empty()) {
      Json p = base_payload(ctx);
      p["cycle_segment"] = h.edges;
      p["bridges_after_removal"] = b;
      emit("P3.2.2", "fail", "G - H has a bridge", p);
      return;
    }
  }
  emit("P3.2.2", "pass",
       std::to_string(ctx.atlas.cycle_segments.size()) + " segments", {});
}

inline void claim_p32_3(const GraphCtx& ctx, const AuditOptions&, Emit emit) {
  if (!p32_gate(ctx, "P3.2.3", emit)) return;
  int instances = 0;
  for (const CycleSegment& h : ctx.atlas.cycle_segments) {
    if (h.connected) continue;
    MultiGraph h_sub = part_subgraph(*ctx.g, h.vertices, h.edges);
    MultiGraph rest = graph_subtract(*ctx.g, h_sub);
    ComponentReport rest_comps = connected_components(rest);
    for (const CycleBody& c : ctx.atlas.cycles) {
      ++instances;
      MultiGraph c_minus_h = graph_subtract(cycle_subgraph(*ctx.g, c), h_sub);
      ComponentReport c_comps = connected_components(c_minus_h);
      std::map<int, int> hits;  // rest component -> count of C-H components
      for (const auto& block : c_comps.partition) {
        for (std::size_t gi = 0; gi < rest_comps.partition.size(); ++gi)
          if (std::binary_search(rest_comps.partition[gi].begin(),
                                 rest_comps.partition[gi].end(), block.front()))
            ++hits[static_cast<int>(gi)];
      }
      for (auto& [gi, k] : hits)
        if (k > 1) {
          Json p = base_payload(ctx);
          p["cycle_segment"] = h.edges;
          p["cycle"] = c.edges;
          emit("P3.2.3", "fail",
               "a component of G-H holds two components of C-H", p);
          return;
        }
    }
  }
  if (instances == 0)
    emit("P3.2.3", "not-applicable", "no disconnected cycle segments", {});
  else
    emit("P3.2.3", "pass", std::to_string(instances) + " (H, C) checks", {});
}

inline void claim_p32_4(const GraphCtx& ctx, const AuditOptions&, Emit emit) {
  if (!p32_gate(ctx, "P3.2.4", emit)) return;
  if (!ctx.atlas.strong_cyclic) {
    emit("P3.2.4", "not-applicable", "not strong cyclic", {});
    return;
  }
  for (const CycleSegment& h : ctx.atlas.cycle_segments) {
    MultiGraph h_sub = part_subgraph(*ctx.g, h.vertices, h.edges);
    MultiGraph rest = graph_subtract(*ctx.g, h_sub);
    int n0_h = connected_components(h_sub).n_with_edge;
    int n_rest = connected_components(rest).n_total;
    if (n0_h != n_rest) {
      Json p = base_payload(ctx);
      p["cycle_segment"] = h.edges;
      p["n0_of_segment"] = n0_h;
      p["components_of_remainder"] = n_rest;
      emit("P3.2.4", "fail", "N0(H) != N(G - H)", p);
      return;
    }
  }
  emit("P3.2.4", "pass",
       std::to_string(ctx.atlas.cycle_segments.size()) + " segments", {});
}

inline void claim_p32_5(const GraphCtx& ctx, const AuditOptions&, Emit emit) {
  if (!p32_gate(ctx, "P3.2.5", emit)) return;
  if (!ctx.atlas.strong_cyclic) {
    emit("P3.2.5", "not-applicable", "not strong cyclic", {});
    return;
  }
  std::vector<const CycleSegment*> disc;
  for (const CycleSegment& h : ctx.atlas.cycle_segments)
    if (!h.connected) disc.push_back(&h);
  if (disc.size() > 1) {
    Json p = base_payload(ctx);
    Json segs = Json::array();
    for (const CycleSegment* h : disc) segs.push_back(h->edges);
    p["disconnected_segments"] = segs;
    emit("P3.2.5", "fail", "two disconnected cycle segments", p);
    return;
  }
  emit("P3.2.5", "pass", std::to_string(disc.size()) + " disconnected", {});
}

inline void claim_p32_6(const GraphCtx& ctx, const AuditOptions& opt, Emit emit) {
  if (!p32_gate(ctx, "P3.2.6", emit)) return;
  if (!ctx.atlas.strong_cyclic) {
    emit("P3.2.6", "not-applicable", "not strong cyclic", {});
    return;
  }
  auto rem = removable_path_segment(*ctx.g, ctx.atlas, opt.enum_opts);
  if (!rem) {
    Json p = base_payload(ctx);
    emit("P3.2.6", "fail", "no path removal keeps the graph strong cyclic", p);
    return;
  }
  Json p;
  p["removed"] = rem->removed.edges;
  p["tier"] = rem->tier;
  emit("P3.2.6", "pass", "tier " + std::to_string(rem->tier), p);
}

inline void claim_p32_7(const GraphCtx& ctx, const AuditOptions& opt, Emit emit) {
  if (!p32_gate(ctx, "P3.2.7", emit)) return;
  if (!ctx.atlas.strong_cyclic) {
    emit("P3.2.7", "not-applicable", "not strong cyclic", {});
    return;
  }
  for (int m = 1; m <= ctx.dim(); ++m) {
    NestedResult res = nested_subgraphs(*ctx.g, m, opt.enum_opts);
    if (!res.result) {
      Json p = base_payload(ctx);
      p["target_m"] = m;
      p["failure"] = res.failure;
      emit("P3.2.7", "fail", "no strong cyclic subgraph of cdim m", p);
      return;
    }
    if (cdim_value(*res.result, opt.enum_opts) != m) {
      Json p = base_payload(ctx);
      p["target_m"] = m;
      emit("P3.2.7", "fail", "nested subgraph has wrong cdim", p);
      return;
    }
  }
  emit("P3.2.7", "pass", "m = 1.." + std::to_string(ctx.dim()), {});
}

inline void claim_p32_8(const GraphCtx& ctx, const AuditOptions&, Emit emit) {
  if (!ctx.connected || !ctx.bridgeless || !ctx.cert.complete) {
    emit("P3.2.8", "not-applicable", "not connected bridgeless certified", {});
    return;
  }
  if (ctx.dim() < 3) {
    emit("P3.2.8", "not-applicable", "cdim < 3", {});
    return;
  }
  for (const CycleBody& c : ctx.atlas.cycles) {
    bool found = false;
    for (const PathSegment& seg : ctx.atlas.path_segments) {
      std::vector<EdgeId> shared;
      std::set_intersection(seg.body.edges.begin(), seg.body.edges.end(),
                            c.edges.begin(), c.edges.end(),
                            std::back_inserter(shared));
      if (!shared.empty()) continue;
      MultiGraph rest = graph_subtract(
          *ctx.g, part_subgraph(*ctx.g, seg.body.vertices, seg.body.edges));
      if (is_connected(rest) && is_bridgeless(rest)) {
        found = true;
        break;
      }
    }
    if (!found) {
      Json p = base_payload(ctx);
      p["cycle"] = c.edges;
      emit("P3.2.8", "fail", "no segment removal preserves C and 2-edge-connectivity", p);
      return;
    }
  }
  emit("P3.2.8", "pass", std::to_string(ctx.atlas.cycles.size()) + " cycles", {});
}

inline void claim_p32_9(const GraphCtx& ctx, const AuditOptions& opt, Emit emit) {
  if (!p32_gate(ctx, "P3.2.9", emit)) return;
  for (const PathSegment& seg : ctx.atlas.path_segments) {
    int count = 0;
    std::vector<std::vector<EdgeId>> culprits;
    for (const CycleSegment& h : ctx.atlas.cycle_segments) {
      std::vector<EdgeId> shared;
      std::set_intersection(seg.body.edges.begin(), seg.body.edges.end(),
                            h.edges.begin(), h.edges.end(),
                            std::back_inserter(shared));
      if (!shared.empty()) continue;
      MultiGraph rest =
          graph_subtract(*ctx.g, part_subgraph(*ctx.g, h.vertices, h.edges));
      SegmentAtlas rest_atlas = build_atlas(rest, opt.enum_opts);
      bool still_segment = false;
      for (const PathSegment& rs : rest_atlas.path_segments)
        if (rs.body.edges == seg.body.edges) still_segment = true;
      if (!still_segment) {
        ++count;
        culprits.push_back(h.edges);
      }
    }
    if (count > 4) {
      Json p = base_payload(ctx);
      p["path_segment"] = seg.body.edges;
      p["cycle_segments"] = culprits;
      emit("P3.2.9", "fail",
           std::to_string(count) + " cycle segments break the segment", p);
      return;
    }
  }
  emit("P3.2.9", "pass",
       std::to_string(ctx.atlas.path_segments.size()) + " segments", {});
}

inline void claim_p32_10(const GraphCtx& ctx, const AuditOptions&, Emit emit) {
  if (!p32_gate(ctx, "P3.2.10", emit)) return;
  if (!ctx.atlas.cactus_free) {
    emit("P3.2.10", "not-applicable", "not cactus free", {});
    return;
  }
  int instances = 0;
  for (const CycleBody& c : ctx.atlas.cycles)
    for (const CycleSegment& h : ctx.atlas.cycle_segments) {
      bool inside = std::includes(c.edges.begin(), c.edges.end(),
                                  h.edges.begin(), h.edges.end()) &&
                    std::includes(c.vertices.begin(), c.vertices.end(),
                                  h.vertices.begin(), h.vertices.end());
      if (!inside) continue;
      ++instances;
      auto c0 = find_companion_cycle(*ctx.g, ctx.atlas.cycles, c, h.edges);
      if (!c0) {
        Json p = base_payload(ctx);
        p["cycle"] = c.edges;
        p["cycle_segment"] = h.edges;
        emit("P3.2.10", "fail", "no cycle meets C exactly in H", p);
        return;
      }
    }
  if (instances == 0)
    emit("P3.2.10", "not-applicable", "no (C, H) pairs with H inside C", {});
  else
    emit("P3.2.10", "pass", std::to_string(instances) + " pairs", {});
}

inline void claim_p32_11(const GraphCtx& ctx, const AuditOptions& opt, Emit emit) {
  if (!p32_gate(ctx, "P3.2.11", emit)) return;
  if (!ctx.atlas.strong_cyclic) {
    emit("P3.2.11", "not-applicable", "not strong cyclic", {});
    return;
  }
  if (ctx.atlas.cycles.size() > opt.builder_cycle_cap) {
    emit("P3.2.11", "not-applicable", "resource: cycle count above builder cap", {});
    return;
  }
  for (const CycleBody& c : ctx.atlas.cycles) {
    BuildOptions bo;
    bo.enum_opts = opt.enum_opts;
    GeneratorCertificate cert = goddyn_construct(*ctx.g, c, bo);
    if (!cert.success) {
      bo.exhaustive = true;
      cert = goddyn_construct(*ctx.g, c, bo);
    }
    bool ok = cert.success && cert.member_count_matches_cdim &&
              telescoping_check(cert, cert.witness);
    if (!ok) {
      Json p = base_payload(ctx);
      p["cycle"] = c.edges;
      p["certificate"] = json_generator_certificate(cert);
      emit("P3.2.11", "fail",
           cert.success ? "generator post-checks failed" : cert.failure_reason, p);
      return;
    }
  }
  emit("P3.2.11", "pass",
       std::to_string(ctx.atlas.cycles.size()) + " prescribed cycles", {});
}

// ---- Corollaries and the theorem ----

inline void claim_cor_degc(const GraphCtx& ctx, const AuditOptions&, Emit emit) {
  if (!ctx.connected || ctx.atlas.cycles.empty()) {
    emit("COR.degc", "not-applicable",
         ctx.connected ? "no cycles" : "not connected", {});
    return;
  }
  if (!ctx.cert.complete) {
    emit("COR.degc", "not-applicable", "cdim not certified", {});
    return;
  }
  long long lhs = 0;
  for (VertexId v : ctx.atlas.core.core.vertices())
    lhs += ctx.atlas.core.degc.at(v) - 2;
  long long rhs = 2LL * (ctx.dim() - 1);
  if (lhs != rhs) {
    Json p = base_payload(ctx);
    p["sum_degc_minus_2"] = lhs;
    p["two_cdim_minus_1"] = rhs;
    p["cdim"] = ctx.dim();
    emit("COR.degc", "fail", "degree identity violated", p);
    return;
  }
  emit("COR.degc", "pass", "sum " + std::to_string(lhs), {});
}

inline void claim_cor_segcomp(const GraphCtx& ctx, const AuditOptions&, Emit emit) {
  if (!ctx.atlas.strong_cyclic) {
    emit("COR.segcomp", "not-applicable", "not strong cyclic", {});
    return;
  }
  for (const CycleSegment& h : ctx.atlas.cycle_segments) {
    MultiGraph h_sub = part_subgraph(*ctx.g, h.vertices, h.edges);
    ComponentReport comps = connected_components(h_sub);
    for (const auto& block : comps.partition) {
      std::vector<EdgeId> block_edges;
      for (EdgeId e : h_sub.edges())
        if (std::binary_search(block.begin(), block.end(),
                               h_sub.endpoints(e).first))
          block_edges.push_back(e);
      if (block_edges.empty()) continue;  // single vertex component
      bool is_one_segment = false;
      for (const PathSegment& seg : ctx.atlas.path_segments)
        if (seg.body.edges == block_edges) is_one_segment = true;
      if (!is_one_segment) {
        Json p = base_payload(ctx);
        p["cycle_segment"] = h.edges;
        p["component_edges"] = block_edges;
        emit("COR.segcomp", "fail",
             "segment component is neither a vertex nor one path segment", p);
        return;
      }
    }
  }
  emit("COR.segcomp", "pass",
       std::to_string(ctx.atlas.cycle_segments.size()) + " segments", {});
}

inline void claim_thm_goddyn(const GraphCtx& ctx, const AuditOptions& opt,
                             Emit emit, std::vector<Json>* discrepancies) {
  if (!ctx.connected || !ctx.bridgeless || ctx.atlas.cycles.empty()) {
    emit("THM.goddyn", "not-applicable", "not connected bridgeless with a cycle", {});
    return;
  }
  if (ctx.atlas.cycles.size() > opt.builder_cycle_cap) {
    emit("THM.goddyn", "not-applicable", "resource: cycle count above builder cap", {});
    return;
  }
  bool oracle_ok = opt.run_oracle_cross_check &&
                   ctx.atlas.cycles.size() <= opt.oracle_cycle_cap;
  int passes = 0;
  std::vector<Json> failures;
  for (const CycleBody& c : ctx.atlas.cycles) {
    BuildOptions bo;
    bo.enum_opts = opt.enum_opts;
    GeneratorCertificate cert = goddyn_construct(*ctx.g, c, bo);
    if (!cert.success) {
      bo.exhaustive = true;
      cert = goddyn_construct(*ctx.g, c, bo);
    }
    std::optional<CoverCertificate> cover;
    if (cert.success) cover = assemble_cover(*ctx.g, cert);
    bool builder_pass = cert.success && cover && cover->pass;

    std::optional<CoverCertificate> oracle;
    if (oracle_ok)
      oracle = oracle_cdc(*ctx.g, c, {opt.oracle_cycle_cap, opt.enum_opts});

    if (builder_pass && oracle && oracle->exhausted_none)
      fail_internal("builder produced a cover the oracle proves impossible");

    if (builder_pass) {
      ++passes;
      continue;
    }
    Json f;
    f["graph"] = ctx.name;
    f["mel"] = ctx.mel;
    f["cycle"] = c.edges;
    f["builder"] = json_generator_certificate(cert);
    if (cert.success && cover) f["builder_cover"] = json_cover_certificate(*cover);
    if (oracle) {
      f["oracle"] = json_cover_certificate(*oracle);
      if (oracle->pass && discrepancies) discrepancies->push_back(f);
    }
    failures.push_back(std::move(f));
  }
  if (failures.empty()) {
    emit("THM.goddyn", "pass", std::to_string(passes) + " cycles covered", {});
  } else {
    Json p = base_payload(ctx);
    p["failures"] = failures;
    p["passes"] = passes;
    emit("THM.goddyn", "fail",
         std::to_string(failures.size()) + " of " +
             std::to_string(ctx.atlas.cycles.size()) + " cycles not covered by builder",
         p);
  }
}

inline void run_all_claims(const GraphCtx& ctx, const AuditOptions& opt,
                           std::vector<ClaimRecord>& out,
                           std::vector<Json>* discrepancies) {
  auto want = [&](const std::string& claim) {
    return opt.only_claims.empty() || opt.only_claims.count(claim);
  };
  auto emit = [&](const std::string& claim, const std::string& status,
                  const std::string& note, Json payload) {
    out.push_back({ctx.name, claim, status, note, std::move(payload)});
  };
  if (want("P3.1.i")) claim_p31_i(ctx, opt, emit);
  if (want("P3.1.ii")) claim_p31_ii(ctx, opt, emit);
  if (want("P3.1.iii")) claim_p31_iii(ctx, opt, emit);
  if (want("P3.1.iv")) claim_p31_iv(ctx, opt, emit);
  if (want("P3.1.v")) claim_p31_v(ctx, opt, emit);
  if (want("P3.1.vi")) claim_p31_vi(ctx, opt, emit);
  if (want("P3.1.viii")) claim_p31_viii(ctx, opt, emit);
  if (want("P3.1.ix")) claim_p31_ix(ctx, opt, emit);
  if (want("P3.2.1")) claim_p32_1(ctx, opt, emit);
  if (want("P3.2.2")) claim_p32_2(ctx, opt, emit);
  if (want("P3.2.3")) claim_p32_3(ctx, opt, emit);
  if (want("P3.2.4")) claim_p32_4(ctx, opt, emit);
  if (want("P3.2.5")) claim_p32_5(ctx, opt, emit);
  if (want("P3.2.6")) claim_p32_6(ctx, opt, emit);
  if (want("P3.2.7")) claim_p32_7(ctx, opt, emit);
  if (want("P3.2.8")) claim_p32_8(ctx, opt, emit);
  if (want("P3.2.9")) claim_p32_9(ctx, opt, emit);
  if (want("P3.2.10")) claim_p32_10(ctx, opt, emit);
  if (want("P3.2.11")) claim_p32_11(ctx, opt, emit);
  if (want("COR.degc")) claim_cor_degc(ctx, opt, emit);
  if (want("COR.segcomp")) claim_cor_segcomp(ctx, opt, emit);
  if (want("THM.goddyn")) claim_thm_goddyn(ctx, opt, emit, discrepancies);
}

}  // namespace audit_detail

inline AuditReport audit(const Corpus& corpus, const AuditOptions& opt = {}) {
  AuditReport report;
  std::size_t n = corpus.graphs.size();
  std::vector<std::vector<ClaimRecord>> per_graph(n);
  std::vector<std::vector<Json>> per_graph_disc(n);

  auto work = [&](std::size_t i) {
    const CorpusEntry& entry = corpus.graphs[i];
    audit_detail::GraphCtx ctx =
        audit_detail::make_ctx(entry.name, entry.graph, opt);
    audit_detail::run_all_claims(ctx, opt, per_graph[i], &per_graph_disc[i]);
  };

  if (opt.jobs <= 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    for (int t = 0; t < opt.jobs; ++t)
      pool.emplace_back([&] {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= n) return;
          try {
            work(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    for (auto& th : pool) th.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (ClaimRecord& r : per_graph[i]) report.records.push_back(std::move(r));
    for (Json& d : per_graph_disc[i]) report.discrepancies.push_back(std::move(d));
  }

  report.meta["registry"] = claim_registry();
  report.meta["out_of_scope"] =
      "P3.1.vii (existence of compatible labelings) is registered out of "
      "scope: a pure existence argument with no constructive content, "
      "exercised indirectly via the P3.1.vi checks.";
  Json readings;
  readings["P3.2.1"] =
      "P and H are required to be edge disjoint; pairs with H inside P's body "
      "are vacuous and skipped.";
  readings["COR.segcomp"] =
      "Gated exactly as stated (strong cyclic); plain cycles C_n with n >= 2 "
      "are genuine counterexamples since every vertex is cycle generic.";
  readings["leaf_cycles"] =
      "A leaf cycle is one no other cycle shares an edge with; this is the "
      "class forced to appear twice in every cover and subsumes the "
      "one-path-segment reading.";
  report.meta["readings"] = readings;
  Json bounds;
  bounds["max_edges"] = corpus.max_edges;
  bounds["graphs"] = corpus.graphs.size();
  bounds["oracle_cycle_cap"] = opt.oracle_cycle_cap;
  bounds["builder_cycle_cap"] = opt.builder_cycle_cap;
  bounds["incidence_cap"] = opt.incidence_cap;
  bounds["subgraph_claim_edge_cap"] = opt.subgraph_claim_edge_cap;
  bounds["path_claim_edge_cap"] = opt.path_claim_edge_cap;
  report.meta["bounds"] = bounds;
  return report;
}

// Re-runs the originating check for a fail record; true iff the failure
// reproduces (some instance of that claim still fails on the recorded graph).
inline bool replay_record(const Json& record, const AuditOptions& opt = {}) {
  std::string claim = record.at("claim");
  const Json& payload = record.at("payload");
  MultiGraph g = parse_mel(payload.at("mel").get<std::string>());
  audit_detail::GraphCtx ctx = audit_detail::make_ctx("replay", g, opt);
  AuditOptions narrowed = opt;
  narrowed.only_claims = {claim};
  std::vector<ClaimRecord> out;
  audit_detail::run_all_claims(ctx, narrowed, out, nullptr);
  for (const ClaimRecord& r : out)
    if (r.claim == claim && r.status == "fail") return true;
  return false;
}

}  // namespace cdcw
