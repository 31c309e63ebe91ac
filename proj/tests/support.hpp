#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "kac/catalog.hpp"
#include "kac/superalgebra.hpp"

namespace kac::testing {

inline Scalar sc(const ScalarDomain& dom, const char* text) { return Scalar::parse(dom, text); }

// Sparse vector: {{index, "coefficient"}, ...}.
inline Vector vec(const SuperAlgebra& a,
                  std::initializer_list<std::pair<std::size_t, const char*>> terms) {
  Vector v = a.zero();
  for (const auto& [i, c] : terms) v[i] += Scalar::parse(a.domain(), c);
  return v;
}

inline Vector e(const SuperAlgebra& a, std::size_t i) { return a.basis(i); }

// Structure constants of an algebra over F_p as plain residues, for oracles
// that must not go through the library's arithmetic.
struct ModTable {
  std::int64_t p;
  std::size_t n;
  std::vector<int> parity;
  std::vector<std::int64_t> c;  // (i*n + j)*n + k

  explicit ModTable(const SuperAlgebra& a)
      : p(a.domain().characteristic()), n(a.dim()), parity(a.parities()) {
    c.resize(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = a.constant(i, j, k).residue();
  }

  std::vector<std::int64_t> mul(const std::vector<std::int64_t>& x,
                                const std::vector<std::int64_t>& y) const {
    std::vector<std::int64_t> z(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!y[j]) continue;
        const std::int64_t xy = x[i] * y[j] % p;
        for (std::size_t k = 0; k < n; ++k) z[k] = (z[k] + xy * c[(i * n + j) * n + k]) % p;
      }
    }
    return z;
  }
};

// Rank of a list of vectors over F_p, by plain Gaussian elimination.
inline std::size_t rank_mod(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  auto inv = [p](std::int64_t x) {
    std::int64_t r = 1, b = x % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::int64_t s = inv(rows[rank][c]);
    for (auto& x : rows[rank]) x = x * s % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] % p == 0) continue;
      const std::int64_t f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace kac::testing
