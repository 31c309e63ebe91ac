#include "kac/refinement.hpp"

#include <gmpxx.h>

namespace kac {

std::vector<Grading> fine_gradings(const SuperAlgebra& a) {
  const AbelianGroup z2 = AbelianGroup::integers(2);
  const AbelianGroup zx2(1, {2});
  return {gamma(a, 1, z2.element({1, 0}), z2.element({0, 1})),
          gamma(a, 2, zx2.element({1, 0}), zx2.element({0, 1}))};
}

namespace {

// Rows of an integer lattice kept in echelon form; enough for membership.
class Lattice {
 public:
  explicit Lattice(std::size_t n) : n_(n) {}

  void insert(std::vector<mpz_class> v) {
    for (std::size_t col = 0; col < n_; ++col) {
      if (v[col] == 0) continue;
      auto it = rows_.begin();
      while (it != rows_.end() && it->first < col) ++it;
      if (it == rows_.end() || it->first != col) {
        if (v[col] < 0) negate(v);
        rows_.insert(it, {col, std::move(v)});
        return;
      }
      // Euclid on the pivot column
      std::vector<mpz_class>& r = it->second;
      while (v[col] != 0) {
        mpz_class q = r[col] / v[col];
        for (std::size_t k = col; k < n_; ++k) r[k] -= q * v[k];
        std::swap(r, v);
      }
      if (r[col] < 0) negate(r);
    }
  }

  bool contains(std::vector<mpz_class> v) const {
    for (const auto& [col, r] : rows_) {
      for (std::size_t k = 0; k < col; ++k) {
        if (v[k] != 0) return false;
      }
      if (v[col] % r[col] != 0) return false;
      mpz_class q = v[col] / r[col];
      for (std::size_t k = col; k < n_; ++k) v[k] -= q * r[k];
    }
    for (const auto& x : v) {
      if (x != 0) return false;
    }
    return true;
  }

 private:
  static void negate(std::vector<mpz_class>& v) {
    for (auto& x : v) x = -x;
  }
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::vector<mpz_class>>> rows_;
};

}  // namespace

bool realizable_as_grading(const SuperAlgebra& a, const std::vector<Subspace>& pieces) {
  const std::size_t m = pieces.size();
  Lattice rel(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Subspace prod = product_span(a, pieces[i], pieces[j]);
      if (prod.empty()) continue;
      std::size_t k = 0;
      while (k < m && !pieces[k].contains(prod)) ++k;
      if (k == m) return false;
      std::vector<mpz_class> r(m, 0);
      r[i] += 1;
      r[j] += 1;
      r[k] -= 1;
      rel.insert(std::move(r));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<mpz_class> d(m, 0);
      d[i] = 1;
      d[j] = -1;
      if (rel.contains(std::move(d))) return false;
    }
  }
  return true;
}

std::optional<Refinement> find_refinement(const Grading& g) {
  const SuperAlgebra& a = g.algebra();
  std::vector<std::pair<GroupElement, Subspace>> comps(g.components().begin(),
                                                       g.components().end());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Subspace& comp = comps[c].second;
    if (comp.dim() < 2) continue;
    std::vector<Vector> hb;
    for (int p : {0, 1}) {
      for (const auto& v : comp.intersect(parity_subspace(a, p)).basis()) hb.push_back(v);
    }
    const std::size_t k = hb.size();
    // the first basis vector always stays in the first part
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
      Subspace left(a.domain(), a.dim()), right(a.domain(), a.dim());
      left.insert(hb[0]);
      for (std::size_t b = 1; b < k; ++b) {
        ((mask >> (b - 1)) & 1 ? right : left).insert(hb[b]);
      }
      std::vector<Subspace> pieces;
      for (std::size_t d = 0; d < comps.size(); ++d) {
        if (d != c) pieces.push_back(comps[d].second);
      }
      pieces.push_back(left);
      pieces.push_back(right);
      if (realizable_as_grading(a, pieces)) {
        return Refinement{std::move(pieces),
                          "component of degree " + comps[c].first.to_string() + " splits"};
      }
    }
  }
  return std::nullopt;
}

}  // namespace kac
