#pragma once

#include <map>
#include <set>
#include <vector>

#include "cdcw/multigraph.hpp"

namespace cdcw {

// Canonical form of a multigraph: the lexicographically largest row-by-row
// signature over all vertex orderings, found by backtracking. Each position
// contributes (degree, loop count, multiplicities to all earlier positions),
// so prefixes prune hard on refined graphs; ties only branch across genuine
// symmetry. Equal keys iff isomorphic.
struct CanonicalForm {
  std::vector<int> key;
  std::vector<VertexId> ordering;  // canonical position -> original vertex
};

namespace detail {

struct CanonState {
  const MultiGraph* g;
  std::size_t n;
  std::vector<VertexId> verts;
  std::vector<std::vector<int>> mult;  // vertex index x vertex index
  std::vector<int> loops;
  std::vector<int> degree;

  std::vector<int> best_key;
  std::vector<std::vector<std::size_t>> best_orderings;  // for automorphisms
  bool collect_all = false;

  std::vector<std::size_t> perm;
  std::vector<bool> used;
  std::vector<int> key;

  std::vector<int> row_for(std::size_t cand) const {
    std::vector<int> row;
    row.reserve(perm.size() + 2);
    row.push_back(degree[cand]);
    row.push_back(loops[cand]);
    for (std::size_t p : perm) row.push_back(mult[cand][p]);
    return row;
  }

  void dfs() {
    if (perm.size() == n) {
      if (best_key.empty() || key > best_key) {
        best_key = key;
        best_orderings.assign(1, perm);
      } else if (collect_all && key == best_key) {
        best_orderings.push_back(perm);
      }
      return;
    }
    // Candidates achieving the lexicographically largest row at this slot.
    std::vector<int> best_row;
    std::vector<std::size_t> cands;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::vector<int> row = row_for(v);
      if (cands.empty() || row > best_row) {
        best_row = row;
        cands.assign(1, v);
      } else if (row == best_row) {
        cands.push_back(v);
      }
    }
    // Prune against the incumbent best key.
    std::size_t at = key.size();
    if (!best_key.empty()) {
      for (std::size_t i = 0; i < best_row.size(); ++i) {
        if (at + i >= best_key.size()) break;
        if (best_row[i] > best_key[at + i]) break;  // strictly better, explore
        if (best_row[i] < best_key[at + i]) return;  // worse, cut
      }
    }
    for (std::size_t v : cands) {
      used[v] = true;
      perm.push_back(v);
      key.insert(key.end(), best_row.begin(), best_row.end());
      dfs();
      key.resize(at);
      perm.pop_back();
      used[v] = false;
    }
  }
};

inline CanonState make_state(const MultiGraph& g) {
  CanonState st;
  st.g = &g;
  st.verts = g.vertices();
  st.n = st.verts.size();
  st.mult.assign(st.n, std::vector<int>(st.n, 0));
  st.loops.assign(st.n, 0);
  st.degree.assign(st.n, 0);
  for (EdgeId e : g.edges()) {
    auto [u, v] = g.endpoints(e);
    std::size_t iu = g.vertex_index(u), iv = g.vertex_index(v);
    if (iu == iv) {
      st.loops[iu] += 1;
      st.degree[iu] += 2;
    } else {
      st.mult[iu][iv] += 1;
      st.mult[iv][iu] += 1;
      st.degree[iu] += 1;
      st.degree[iv] += 1;
    }
  }
  st.used.assign(st.n, false);
  return st;
}

}  // namespace detail

inline CanonicalForm canonical_form(const MultiGraph& g) {
  detail::CanonState st = detail::make_state(g);
  if (st.n == 0) return {};
  st.dfs();
  CanonicalForm cf;
  cf.key = st.best_key;
  for (std::size_t p : st.best_orderings.front()) cf.ordering.push_back(st.verts[p]);
  return cf;
}

inline bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  return canonical_form(a).key == canonical_form(b).key;
}

// Automorphism group as permutations over vertex indices (position i maps
// verts[i] to verts[perm[i]]).
inline std::vector<std::vector<std::size_t>> automorphisms(const MultiGraph& g) {
  detail::CanonState st = detail::make_state(g);
  if (st.n == 0) return {{}};
  st.collect_all = true;
  st.dfs();
  // Orderings o1, o2 with equal keys give the automorphism o2 . o1^-1.
  const auto& ref = st.best_orderings.front();
  std::vector<std::size_t> ref_inv(st.n);
  for (std::size_t i = 0; i < st.n; ++i) ref_inv[ref[i]] = i;
  std::vector<std::vector<std::size_t>> out;
  for (const auto& ord : st.best_orderings) {
    std::vector<std::size_t> auto_map(st.n);
    for (std::size_t v = 0; v < st.n; ++v) auto_map[v] = ord[ref_inv[v]];
    out.push_back(std::move(auto_map));
  }
  return out;
}

}  // namespace cdcw
