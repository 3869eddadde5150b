#pragma once

#include <optional>
#include <vector>

#include "cdcw/cyclic_core.hpp"
#include "cdcw/linalg.hpp"

namespace cdcw {

// A sign labeling assigns +-1 to every (cycle, edge) incidence and 0 off the
// cycle. Stored densely: one vector per cycle body, aligned to the host's
// sorted edge list, so f(C) is directly a row for the rank machinery.
struct SignLabeling {
  std::vector<CycleBody> cycles;  // canonical enumeration order
  std::vector<Vec> vectors;       // aligned to cycles; entries in {-1,0,1}

  const Vec& vector_for(const CycleBody& c) const {
    for (std::size_t i = 0; i < cycles.size(); ++i)
      if (cycles[i] == c) return vectors[i];
    fail_input("sign labeling: unknown cycle body");
  }
  int index_of(const CycleBody& c) const {
    for (std::size_t i = 0; i < cycles.size(); ++i)
      if (cycles[i] == c) return static_cast<int>(i);
    return -1;
  }
};

inline void validate_sign_labeling(const MultiGraph& g, const SignLabeling& f) {
  for (std::size_t i = 0; i < f.cycles.size(); ++i) {
    if (f.vectors[i].size() != g.edge_count())
      fail_input("sign labeling: vector length mismatch");
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
      bool on = f.cycles[i].contains_edge(g.edges()[j]);
      int val = f.vectors[i][j];
      if (on && val != 1 && val != -1)
        fail_input("sign labeling: on-cycle entry must be +-1");
      if (!on && val != 0)
        fail_input("sign labeling: off-cycle entry must be 0");
    }
  }
}

// Canonical orientation labeling: every edge gets the reference direction
// (smaller endpoint -> larger), every cycle its canonical traversal; the sign
// records whether the traversal agrees with the reference. Loops are +1. The
// span of these vectors is exactly the rational cycle space of G^c.
inline SignLabeling orientation_labeling(const MultiGraph& g,
                                         const std::vector<CycleBody>& cycles) {
  SignLabeling f;
  f.cycles = cycles;
  for (const CycleBody& c : cycles) {
    Vec row(g.edge_count(), 0);
    Walk w = cycle_walk(g, c);
    for (std::size_t i = 0; i < w.length(); ++i) {
      EdgeId e = w.edge_at(i);
      auto [u, v] = g.endpoints(e);
      int sign = 1;
      if (u != v) sign = (w.vertex_at(i) == u && w.vertex_at(i + 1) == v) ? 1 : -1;
      row[g.edge_index(e)] = sign;
    }
    f.vectors.push_back(std::move(row));
  }
  return f;
}

inline SignLabeling orientation_labeling(const MultiGraph& g,
                                         const EnumOptions& opt = {}) {
  return orientation_labeling(g, enumerate_cycles(g, opt));
}

// Certified cyclic dimension. The lower bound is the GF(2) rank of the 0/1
// cycle-edge incidence matrix (any sign labeling reduces to it mod 2, so its
// rational rank is at least this). The upper bound is the span dimension of
// the orientation labeling. When they agree the value is certified; when they
// do not, brute force settles it if the instance is small enough, otherwise
// only the interval is reported.
struct CdimCertificate {
  int lower_gf2 = 0;
  int upper_orientation = 0;
  std::optional<int> brute_force;
  bool complete = false;
  int value = -1;  // certified value; -1 while interval-only

  std::optional<SignLabeling> witness;  // labeling achieving the upper bound
};

inline int cdim_bruteforce(const MultiGraph& g,
                           const std::vector<CycleBody>& cycles,
                           std::size_t incidence_cap = 24) {
  std::size_t incidences = 0;
  for (const CycleBody& c : cycles) incidences += c.edges.size();
  if (incidences > incidence_cap)
    fail_resource("cdim brute force: " + std::to_string(incidences) +
                  " incidences exceed cap " + std::to_string(incidence_cap));
  if (cycles.empty()) return 0;

  // Global sign flips per cycle leave the span dimension unchanged, so the
  // first edge of every cycle is pinned to +1.
  struct Slot {
    std::size_t row, col;
  };
  std::vector<Slot> free_slots;
  std::vector<Vec> base(cycles.size(), Vec(g.edge_count(), 0));
  for (std::size_t i = 0; i < cycles.size(); ++i)
    for (std::size_t k = 0; k < cycles[i].edges.size(); ++k) {
      std::size_t col = g.edge_index(cycles[i].edges[k]);
      base[i][col] = 1;
      if (k > 0) free_slots.push_back({i, col});
    }
  // Deliberately exhaustive: this is the independent oracle for the GF(2)
  // sandwich, so it must not use the mod-2 bound to prune.
  int best = -1;
  std::uint64_t combos = std::uint64_t(1) << free_slots.size();
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    std::vector<Vec> rows = base;
    for (std::size_t s = 0; s < free_slots.size(); ++s)
      if (mask & (std::uint64_t(1) << s))
        rows[free_slots[s].row][free_slots[s].col] = -1;
    int r = bareiss_rank(rows);
    if (best < 0 || r < best) best = r;
  }
  return best;
}

inline int cdim_bruteforce(const MultiGraph& g, std::size_t incidence_cap = 24,
                           const EnumOptions& opt = {}) {
  return cdim_bruteforce(g, enumerate_cycles(g, opt), incidence_cap);
}

inline CdimCertificate cdim(const MultiGraph& g,
                            const std::vector<CycleBody>& cycles,
                            bool force_brute = false,
                            std::size_t incidence_cap = 24) {
  CdimCertificate cert;
  std::vector<Vec> incidence;
  for (const CycleBody& c : cycles) {
    Vec row(g.edge_count(), 0);
    for (EdgeId e : c.edges) row[g.edge_index(e)] = 1;
    incidence.push_back(std::move(row));
  }
  cert.lower_gf2 = gf2_rank_dense(incidence);
  SignLabeling orient = orientation_labeling(g, cycles);
  cert.upper_orientation = bareiss_rank(orient.vectors);
  if (cert.lower_gf2 == cert.upper_orientation) {
    cert.complete = true;
    cert.value = cert.lower_gf2;
    cert.witness = std::move(orient);
  }
  if (force_brute || !cert.complete) {
    std::size_t incidences = 0;
    for (const CycleBody& c : cycles) incidences += c.edges.size();
    if (incidences <= incidence_cap) {
      cert.brute_force = cdim_bruteforce(g, cycles, incidence_cap);
      if (!cert.complete) {
        cert.complete = true;
        cert.value = *cert.brute_force;
      } else if (*cert.brute_force != cert.value) {
        fail_internal("cdim: brute force disagrees with certified sandwich");
      }
    }
  }
  return cert;
}

inline CdimCertificate cdim(const MultiGraph& g, bool force_brute = false,
                            std::size_t incidence_cap = 24,
                            const EnumOptions& opt = {}) {
  return cdim(g, enumerate_cycles(g, opt), force_brute, incidence_cap);
}

// Certified cdim value or an input failure for interval-only certificates.
inline int cdim_value(const MultiGraph& g, const EnumOptions& opt = {}) {
  CdimCertificate c = cdim(g, false, 24, opt);
  if (!c.complete)
    fail_resource("cdim: bounds disagree and instance exceeds brute-force cap");
  return c.value;
}

inline bool is_optimal(const MultiGraph& g, const SignLabeling& f,
                       const CdimCertificate& cert) {
  if (!cert.complete) fail_input("is_optimal: incomplete cdim certificate");
  validate_sign_labeling(g, f);
  return bareiss_rank(f.vectors) == cert.value;
}

// Prop-style parallel restriction: the restrictions of f(C1) and f(C2) to
// each connected, edge-bearing component of C1 cap C2 must span the same
// line. A zero restriction is parallel to everything by convention.
inline bool parallel_restriction_check(const MultiGraph& g,
                                       const SignLabeling& f,
                                       const CycleBody& c1,
                                       const CycleBody& c2) {
  MultiGraph inter = graph_intersection(cycle_subgraph(g, c1),
                                        cycle_subgraph(g, c2));
  if (inter.edge_count() == 0) return true;  // vacuous
  const Vec& v1 = f.vector_for(c1);
  const Vec& v2 = f.vector_for(c2);
  ComponentReport comps = connected_components(inter);
  for (const auto& block : comps.partition) {
    std::vector<std::size_t> cols;
    for (EdgeId e : inter.edges()) {
      auto [u, v] = inter.endpoints(e);
      if (std::binary_search(block.begin(), block.end(), u))
        cols.push_back(g.edge_index(e));
    }
    if (cols.empty()) continue;  // single-vertex component
    Vec r1, r2;
    for (std::size_t c : cols) {
      r1.push_back(v1[c]);
      r2.push_back(v2[c]);
    }
    bool z1 = std::all_of(r1.begin(), r1.end(), [](int x) { return x == 0; });
    bool z2 = std::all_of(r2.begin(), r2.end(), [](int x) { return x == 0; });
    if (z1 || z2) continue;
    if (bareiss_rank({r1, r2}) > 1) return false;
  }
  return true;
}

// A candidate f-generator: an indexed cycle list with a sign map and the
// telescoping targets C_t'. The characteristic map counts, per edge, how many
// indexed members contain it.
struct Generator {
  std::vector<CycleBody> members;
  std::vector<int> signs;            // +-1 per member
  std::vector<CycleBody> targets;    // C_t', aligned with members
};

inline std::map<EdgeId, int> characteristic_map(const MultiGraph& g,
                                                const Generator& a) {
  std::map<EdgeId, int> chi;
  for (EdgeId e : g.edges()) chi[e] = 0;
  for (const CycleBody& c : a.members)
    for (EdgeId e : c.edges) ++chi[e];
  return chi;
}

// True iff |A| = cdim and the member vectors span every f(C).
inline bool is_f_generator(const MultiGraph&, const Generator& a,
                           const SignLabeling& f,
                           const CdimCertificate& cert) {
  if (!cert.complete) fail_input("is_f_generator: incomplete certificate");
  if (static_cast<int>(a.members.size()) != cert.value) return false;
  std::vector<Vec> member_vecs;
  for (const CycleBody& c : a.members) member_vecs.push_back(f.vector_for(c));
  int base = bareiss_rank(member_vecs);
  std::vector<Vec> all = member_vecs;
  for (const Vec& v : f.vectors) all.push_back(v);
  return bareiss_rank(all) == base;
}

}  // namespace cdcw
