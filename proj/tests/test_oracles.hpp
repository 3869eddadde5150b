#pragma once

// Test-only oracles, kept independent of the production implementations they
// cross-check.

#include <functional>
#include <vector>

#include "cdcw/cycles.hpp"
#include "cdcw/rational.hpp"

namespace cdcw::test_oracle {

// Brute force over all nonempty edge subsets: a subset is a cycle body iff
// every touched vertex has degree exactly 2 (a loop counts twice) and the
// edges form one connected piece.
inline std::vector<std::vector<EdgeId>> subset_filter_cycles(const MultiGraph& g) {
  const auto& edges = g.edges();
  std::size_t m = edges.size();
  if (m > 20) fail_resource("subset oracle: too many edges");
  std::vector<std::vector<EdgeId>> out;
  for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
    std::map<VertexId, int> deg;
    std::vector<EdgeId> subset;
    for (std::size_t b = 0; b < m; ++b)
      if (mask & (std::size_t(1) << b)) {
        subset.push_back(edges[b]);
        auto [u, v] = g.endpoints(edges[b]);
        deg[u] += (u == v) ? 2 : 1;
        if (u != v) deg[v] += 1;
      }
    bool two_regular = true;
    for (auto& [v, d] : deg)
      if (d != 2) two_regular = false;
    if (!two_regular) continue;
    // connectivity over touched vertices
    std::map<VertexId, VertexId> parent;
    for (auto& [v, d] : deg) parent[v] = v;
    std::function<VertexId(VertexId)> find = [&](VertexId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (EdgeId e : subset) {
      auto [u, v] = g.endpoints(e);
      parent[find(u)] = find(v);
    }
    VertexId root = find(deg.begin()->first);
    bool connected = true;
    for (auto& [v, d] : deg)
      if (find(v) != root) connected = false;
    if (connected) out.push_back(subset);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// Naive rational Gaussian elimination rank, written independently of the
// production Bareiss path.
inline int naive_rational_rank(std::vector<std::vector<Rational>> a) {
  if (a.empty()) return 0;
  std::size_t n = a.size(), m = a[0].size(), r = 0;
  for (std::size_t col = 0; col < m && r < n; ++col) {
    std::size_t piv = r;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      Rational f = a[i][col] / a[r][col];
      for (std::size_t j = col; j < m; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

inline int naive_rank_int(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Rational>> a;
  for (const auto& row : rows) {
    std::vector<Rational> r;
    for (int x : row) r.emplace_back(x);
    a.push_back(std::move(r));
  }
  return naive_rational_rank(std::move(a));
}

// Deterministic xorshift generator so test inputs are reproducible.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b9) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int pick(int n) { return static_cast<int>(next() % n); }
};

}  // namespace cdcw::test_oracle
