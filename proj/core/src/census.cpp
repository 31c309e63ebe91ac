#include "kac/census.hpp"

#include "kac/catalog.hpp"

namespace kac {

namespace {

struct EigenGrading {
  Subspace plus, minus;
  bool operator==(const EigenGrading& o) const { return plus == o.plus && minus == o.minus; }
};

Subspace image(const Matrix& m, const Subspace& s) {
  Subspace out(s.domain(), s.ambient());
  for (const auto& v : s.basis()) out.insert(m * v);
  return out;
}

std::vector<GroupElement> all_elements(const AbelianGroup& g) {
  if (g.free_rank() != 0) throw Error("the group must be finite");
  std::vector<GroupElement> out{g.zero()};
  for (std::size_t i = 0; i < g.torsion().size(); ++i) {
    std::vector<GroupElement> next;
    for (const auto& x : out) {
      for (std::int64_t k = 0; k < g.torsion()[i]; ++k) next.push_back(x + g.generator(i).times(k));
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

CensusResult z2_census(const SuperAlgebra& a, std::uint64_t budget) {
  const ScalarDomain& dom = a.domain();
  if (!dom.is_finite() || dom.is_quadratic()) throw Error("z2_census needs a prime field");
  if (dom.characteristic() == 2) throw Error("z2_census needs characteristic other than 2");
  const bool is_k10 = a == kac_k10(dom);
  if (!is_k10 && a != k3xk3(dom) && a != jwxjw(dom)) {
    throw Error("z2_census supports k10, k3xk3 and jwxjw");
  }
  const std::vector<SL2Element> sl2 = enumerate_sl2(dom);
  const std::size_t s = sl2.size();
  CensusResult r;
  r.group_order = 2 * s * s;
  if (r.group_order > budget) throw Error("z2_census: group too large for the budget");
  LinearMap tau = is_k10 ? tau_auto(a) : LinearMap::identity(a);
  auto element = [&](std::size_t idx) -> Matrix {
    const SL2Element& f = sl2[idx % s];
    const SL2Element& g = sl2[(idx / s) % s];
    const bool swap = idx >= s * s;
    if (is_k10) {
      LinearMap m = phi_auto(a, f, g);
      return swap ? m.matrix() * tau.matrix() : m.matrix();
    }
    return psi_auto(a, f, g, swap).matrix();
  };

  const Matrix id = Matrix::identity(dom, a.dim());
  std::vector<EigenGrading> gradings;
  for (std::size_t idx = 0; idx < r.group_order; ++idx) {
    Matrix m = element(idx);
    if (m * m != id) continue;
    ++r.involutions;
    EigenGrading eg{Subspace::span(dom, a.dim(), nullspace(m - id)),
                    Subspace::span(dom, a.dim(), nullspace(m + id))};
    if (eg.plus.dim() + eg.minus.dim() != a.dim()) {
      throw Falsification("involution is not diagonalizable");
    }
    gradings.push_back(std::move(eg));
  }

  std::vector<bool> seen(gradings.size(), false);
  const AbelianGroup z2 = AbelianGroup::cyclic(2);
  for (std::size_t start = 0; start < gradings.size(); ++start) {
    if (seen[start]) continue;
    std::size_t size = 0;
    for (std::size_t idx = 0; idx < r.group_order; ++idx) {
      Matrix m = element(idx);
      EigenGrading img{image(m, gradings[start].plus), image(m, gradings[start].minus)};
      std::size_t k = 0;
      while (k < gradings.size() && !(gradings[k] == img)) ++k;
      if (k == gradings.size()) {
        throw Falsification("conjugate of an involution grading is missing from the census");
      }
      if (!seen[k]) {
        seen[k] = true;
        ++size;
      }
    }
    Grading rep(a, z2);
    rep.set_component(z2.zero(), gradings[start].plus);
    rep.set_component(z2.element({1}), gradings[start].minus);
    r.class_labels.push_back(classify(rep).label);
    r.class_sizes.push_back(size);
    ++r.classes;
  }
  return r;
}

std::set<GradingLabel> enumerate_labels(const AbelianGroup& g) {
  const auto el = all_elements(g);
  std::set<GradingLabel> out;
  for (const auto& x : el) {
    for (const auto& y : el) {
      out.insert(canonical_label(1, x, y));
      if (!y.is_zero() && y.times(2).is_zero()) out.insert(canonical_label(2, x, y));
    }
  }
  return out;
}

}  // namespace kac
