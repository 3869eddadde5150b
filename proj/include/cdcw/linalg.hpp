#pragma once

#include <cstdint>
#include <vector>

#include "cdcw/rational.hpp"

namespace cdcw {

// Dense integer row vector; label vectors have entries in {-1, 0, 1} but the
// rank machinery accepts any small integers.
using Vec = std::vector<int>;

// Exact rank over the rationals via fraction-free (Bareiss) elimination with
// 128-bit intermediates. Desk-scale matrices stay far below the overflow
// guard (Hadamard bound for +-1 entries).
inline int bareiss_rank(const std::vector<Vec>& rows_in) {
  if (rows_in.empty()) return 0;
  std::size_t n = rows_in.size(), m = rows_in[0].size();
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(m));
  for (std::size_t i = 0; i < n; ++i) {
    if (rows_in[i].size() != m) fail_internal("rank: ragged rows");
    for (std::size_t j = 0; j < m; ++j) a[i][j] = rows_in[i][j];
  }
  __int128 prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < m; ++j)
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

// Rank certificate: a selected row basis plus exact rational coefficients
// expressing every non-basis row over the basis. Recombining the coefficients
// must reproduce each dependent row exactly; tests enforce this.
struct RankCertificate {
  int rank = 0;
  std::vector<int> basis_rows;  // indices into the input list
  // (row index, coefficients over basis_rows)
  std::vector<std::pair<int, std::vector<Rational>>> dependencies;
};

namespace detail {

// Reduced row echelon form over the rationals; returns pivot columns.
inline std::vector<int> rref(std::vector<std::vector<Rational>>& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  std::size_t n = a.size(), m = a[0].size(), r = 0;
  for (std::size_t col = 0; col < m && r < n; ++col) {
    std::size_t piv = r;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[r]);
    Rational inv = Rational(1) / a[r][col];
    for (std::size_t j = col; j < m; ++j) a[r][j] = a[r][j] * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][col].is_zero()) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j < m; ++j)
        a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++r;
  }
  return pivots;
}

}  // namespace detail

inline RankCertificate rank_exact(const std::vector<Vec>& rows) {
  RankCertificate cert;
  if (rows.empty()) return cert;
  std::size_t m = rows[0].size();

  // Greedy basis selection: a row joins the basis iff it raises the rank.
  std::vector<Vec> basis;
  std::vector<int> dependents;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<Vec> trial = basis;
    trial.push_back(rows[i]);
    if (bareiss_rank(trial) > static_cast<int>(basis.size())) {
      basis.push_back(rows[i]);
      cert.basis_rows.push_back(static_cast<int>(i));
    } else {
      dependents.push_back(static_cast<int>(i));
    }
  }
  cert.rank = static_cast<int>(basis.size());

  // Solve basis^T lambda = row for each dependent row: rational elimination
  // on the augmented system over the basis columns.
  for (int dep : dependents) {
    std::size_t k = basis.size();
    std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(k + 1));
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t b = 0; b < k; ++b) aug[j][b] = Rational(basis[b][j]);
      aug[j][k] = Rational(rows[dep][j]);
    }
    std::vector<int> piv = detail::rref(aug);
    std::vector<Rational> lambda(k, Rational(0));
    for (std::size_t r = 0; r < piv.size(); ++r) {
      if (piv[r] == static_cast<int>(k))
        fail_internal("rank_exact: dependent row outside basis span");
      lambda[piv[r]] = aug[r][k];
    }
    // Exactness check: recombination must reproduce the row.
    for (std::size_t j = 0; j < m; ++j) {
      Rational s(0);
      for (std::size_t b = 0; b < k; ++b)
        s = s + lambda[b] * Rational(basis[b][j]);
      if (s != Rational(rows[dep][j]))
        fail_internal("rank_exact: coefficient recombination mismatch");
    }
    cert.dependencies.emplace_back(dep, std::move(lambda));
  }
  return cert;
}

// GF(2) rank of 0/1 rows packed into 64-bit words.
inline int gf2_rank(const std::vector<std::vector<std::uint64_t>>& rows_in) {
  auto rows = rows_in;
  int rank = 0;
  if (rows.empty()) return 0;
  std::size_t words = rows[0].size();
  for (std::size_t w = 0; w < words; ++w)
    for (int bit = 0; bit < 64; ++bit) {
      std::uint64_t mask = std::uint64_t(1) << bit;
      std::size_t piv = rank;
      while (piv < rows.size() && !(rows[piv][w] & mask)) ++piv;
      if (piv == rows.size()) continue;
      std::swap(rows[piv], rows[rank]);
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (i != static_cast<std::size_t>(rank) && (rows[i][w] & mask))
          for (std::size_t ww = 0; ww < words; ++ww) rows[i][ww] ^= rows[rank][ww];
      ++rank;
      if (rank == static_cast<int>(rows.size())) return rank;
    }
  return rank;
}

inline int gf2_rank_dense(const std::vector<Vec>& rows) {
  if (rows.empty()) return 0;
  std::size_t m = rows[0].size();
  std::size_t words = (m + 63) / 64;
  std::vector<std::vector<std::uint64_t>> packed(
      rows.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (rows[i][j] % 2 != 0) packed[i][j / 64] |= std::uint64_t(1) << (j % 64);
  return gf2_rank(packed);
}

}  // namespace cdcw
