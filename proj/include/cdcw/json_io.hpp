#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cdcw/goddyn.hpp"
#include "cdcw/mel.hpp"
#include "cdcw/segments.hpp"

namespace cdcw {

using Json = nlohmann::json;  // object keys are kept sorted -> stable dumps

inline Json json_edge_list(const std::vector<EdgeId>& edges) {
  return Json(edges);
}

inline Json json_component_report(const ComponentReport& rep) {
  Json j;
  j["n_total"] = rep.n_total;
  j["n_with_edge"] = rep.n_with_edge;
  j["partition"] = rep.partition;
  return j;
}

inline Json json_rank_certificate(const RankCertificate& rc) {
  Json j;
  j["rank"] = rc.rank;
  j["basis_rows"] = rc.basis_rows;
  Json deps = Json::array();
  for (const auto& [row, coeffs] : rc.dependencies) {
    Json d;
    d["row"] = row;
    Json cs = Json::array();
    for (const Rational& r : coeffs) cs.push_back(r.str());
    d["coefficients"] = cs;
    deps.push_back(d);
  }
  j["dependencies"] = deps;
  return j;
}

inline Json json_cdim_certificate(const CdimCertificate& cert,
                                  bool include_rank_cert = false) {
  Json j;
  j["lower_bound_gf2"] = cert.lower_gf2;
  j["upper_bound_orientation"] = cert.upper_orientation;
  j["complete"] = cert.complete;
  if (cert.complete) j["value"] = cert.value;
  if (cert.brute_force) j["brute_force"] = *cert.brute_force;
  if (include_rank_cert && cert.witness)
    j["rank_certificate"] = json_rank_certificate(rank_exact(cert.witness->vectors));
  return j;
}

inline Json json_cover_certificate(const CoverCertificate& cc) {
  Json j;
  Json cycles = Json::array();
  for (const CycleBody& c : cc.cycles) cycles.push_back(c.edges);
  j["cycles"] = cycles;
  Json mult;
  for (const auto& [e, k] : cc.multiplicity) mult[std::to_string(e)] = k;
  j["multiplicity"] = mult;
  j["verdict"] = cc.exhausted_none ? "exhaustive-none" : (cc.pass ? "pass" : "fail");
  if (!cc.offending.empty()) j["offending_edges"] = cc.offending;
  j["source"] = cc.source;
  if (cc.required_given) j["contains_required"] = cc.contains_required;
  if (cc.source == "oracle") j["nodes_visited"] = cc.nodes_visited;
  return j;
}

inline Json json_trace_step(const TraceStep& st) {
  Json j;
  j["depth"] = st.depth;
  j["action"] = st.action;
  j["prescribed"] = st.prescribed;
  if (!st.segment.empty()) j["segment"] = st.segment;
  if (!st.companion.empty()) j["companion"] = st.companion;
  if (!st.reduced_cycle.empty()) j["reduced_cycle"] = st.reduced_cycle;
  j["graph_edges"] = st.graph_edges;
  if (st.graph_cdim) j["graph_cdim"] = st.graph_cdim;
  if (st.action == "recurse") {
    j["remainder_connected"] = st.remainder_connected;
    j["remainder_bridgeless"] = st.remainder_bridgeless;
    j["remainder_cactus_free"] = st.remainder_cactus_free;
  }
  return j;
}

inline Json json_generator_certificate(const GeneratorCertificate& cert) {
  Json j;
  j["outcome"] = cert.success ? "success" : "failure";
  if (!cert.success) {
    j["failure_reason"] = cert.failure_reason;
    j["failure_step"] = cert.failure_step;
  }
  j["prescribed"] = cert.prescribed.edges;
  Json units = Json::array();
  for (const Generator& u : cert.units) {
    Json ju;
    Json members = Json::array(), targets = Json::array();
    for (const CycleBody& c : u.members) members.push_back(c.edges);
    for (const CycleBody& c : u.targets) targets.push_back(c.edges);
    ju["members"] = members;
    ju["targets"] = targets;
    ju["signs"] = u.signs;
    units.push_back(ju);
  }
  j["units"] = units;
  Json trace = Json::array();
  for (const TraceStep& st : cert.trace) trace.push_back(json_trace_step(st));
  j["trace"] = trace;
  j["branches_tried"] = cert.branches_tried;
  if (cert.success) {
    Json flips = Json::array();
    for (std::size_t i = 0; i < cert.witness.cycles.size(); ++i)
      if (cert.witness_flips[i] == -1)
        flips.push_back(cert.witness.cycles[i].edges);
    j["witness_flipped_cycles"] = flips;
    j["member_count_matches_cdim"] = cert.member_count_matches_cdim;
  }
  return j;
}

inline Json json_atlas(const SegmentAtlas& a) {
  Json j;
  Json segs = Json::array();
  for (const PathSegment& s : a.path_segments) {
    Json js;
    js["edges"] = s.body.edges;
    js["endpoints"] = Json::array({s.walk.front(), s.walk.back()});
    js["closed"] = s.closed;
    segs.push_back(js);
  }
  j["path_segments"] = segs;
  Json csegs = Json::array();
  for (const CycleSegment& s : a.cycle_segments) {
    Json js;
    js["edges"] = s.edges;
    js["vertices"] = s.vertices;
    js["connected"] = s.connected;
    csegs.push_back(js);
  }
  j["cycle_segments"] = csegs;
  Json comps = Json::array();
  for (const CycleComponent& c : a.components) {
    Json jc;
    jc["edges"] = c.edges;
    jc["vertices"] = c.vertices;
    comps.push_back(jc);
  }
  j["cycle_components"] = comps;
  j["cycle_components_applicable"] = a.components_applicable;
  j["off_core_edges"] = a.off_core_edges;
  Json flags;
  flags["strong_cyclic"] = a.strong_cyclic;
  flags["cycle_separable"] = a.cycle_separable;
  flags["cactus_free"] = a.cactus_free;
  j["flags"] = flags;
  Json leafs = Json::array();
  for (const CycleBody& c : a.leaf_cycles) leafs.push_back(c.edges);
  j["leaf_cycles"] = leafs;
  Json red;
  red["mel"] = write_mel(a.reduced.graph);
  Json e2s;
  for (const auto& [id, edges] : a.reduced.edge_to_segment)
    e2s[std::to_string(id)] = edges;
  red["edge_to_segment"] = e2s;
  red["eta_bijective"] = a.reduced.eta_bijective;
  j["reduced"] = red;
  return j;
}

// Plain-text rendering of a JSON report: same information, table-ish layout.
inline void render_text(const Json& j, std::string& out, int indent = 0) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) {
        out += pad + it.key() + ":\n";
        render_text(it.value(), out, indent + 2);
      } else {
        out += pad + it.key() + ": " + it.value().dump() + "\n";
      }
    }
  } else if (j.is_array()) {
    bool scalar = true;
    for (const auto& v : j)
      if (v.is_object() || v.is_array()) scalar = false;
    if (scalar) {
      out += pad + j.dump() + "\n";
    } else {
      int i = 0;
      for (const auto& v : j) {
        out += pad + "- [" + std::to_string(i++) + "]\n";
        render_text(v, out, indent + 2);
      }
    }
  } else {
    out += pad + j.dump() + "\n";
  }
}

inline std::string to_table(const Json& j) {
  std::string out;
  render_text(j, out);
  return out;
}

}  // namespace cdcw
