#include "kac/descent.hpp"

#include "kac/catalog.hpp"

namespace kac {

namespace {

Vector restriction_vector(const ScalarDomain& base, std::size_t n,
                          std::initializer_list<std::pair<std::size_t, long>> terms) {
  Vector v = zero_vector(base, 2 * n);
  for (auto [i, c] : terms) v[i] += Scalar(base, c);
  return v;
}

// Coordinates of v in the (independent) list of columns; throws if outside.
Vector coordinates_in(const ScalarDomain& dom, std::size_t rows, const std::vector<Vector>& basis,
                      std::span<const Scalar> v) {
  auto x = solve(Matrix::from_columns(dom, rows, basis), v);
  if (!x) throw Falsification("vector " + to_string(v) + " lies outside the fixed space");
  return *x;
}

// Matrix of t ⊗ σ in restriction coordinates.
Matrix semilinear_matrix(const Matrix& t) {
  const std::size_t n = t.rows();
  Matrix m(t.domain(), 2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = t(r, c);
      m(n + r, n + c) = -t(r, c);
    }
  }
  return m;
}

}  // namespace

QuadraticEtale::QuadraticEtale(const ScalarDomain& base, const Scalar& d)
    : base_(base), d_(d), split_(false), dom_(base) {
  if (base.is_quadratic()) throw Error("the base of a quadratic extension must be Q or F_p");
  if (d.domain() != base) throw Error("d must lie in the base field");
  if (d.is_zero()) throw Error("d must be nonzero");
  split_ = is_square(d);
  dom_ = ScalarDomain::quadratic(base, d);
}

DescentDatum::DescentDatum(LinearMap t, QuadraticEtale ext) : t_(std::move(t)), ext_(std::move(ext)) {
  if (auto c = is_automorphism(t_); !c) throw Error("descent datum: " + c.detail);
  if (t_ * t_ != LinearMap::identity(t_.source())) throw Error("descent datum: t∘t != id");
  if (t_.source().domain() != ext_.base()) throw Error("descent datum: domain mismatch");
}

Vector to_extension(std::span<const Scalar> v, const ScalarDomain& k) {
  const std::size_t n = v.size() / 2;
  Vector out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(Scalar::from_parts(k, v[i], v[n + i]));
  return out;
}

TwistedForm twist(const DescentDatum& datum) {
  const SuperAlgebra& a = datum.algebra();
  const ScalarDomain& base = a.domain();
  const std::size_t n = a.dim();
  SuperAlgebra ambient = restrict_scalars(scalar_extension(a, datum.extension().domain()));
  Matrix s = semilinear_matrix(datum.involution().matrix());
  Subspace fixed = Subspace::span(base, 2 * n,
                                  nullspace(s - Matrix::identity(base, 2 * n)));
  if (fixed.dim() != n) {
    throw Falsification("fixed space of t⊗σ has dimension " + std::to_string(fixed.dim()) +
                        ", expected " + std::to_string(n));
  }
  std::vector<Vector> basis;
  for (int p : {0, 1}) {
    for (const auto& v : fixed.basis()) {
      int q = homogeneous_parity(ambient, v);
      if (q < 0) throw Falsification("fixed space is not graded");
      if (q == p) basis.push_back(v);
    }
  }
  try {
    SuperAlgebra form = induced_algebra(ambient, basis);
    return {std::move(form), std::move(basis), std::move(ambient)};
  } catch (const Error& e) {
    throw Falsification(std::string("fixed space is not a subalgebra: ") + e.what());
  }
}

TwistedBasisReport k10_twisted_basis(const QuadraticEtale& ext) {
  if (ext.split()) throw Error("k10_twisted_basis needs a nonsquare d");
  const ScalarDomain& base = ext.base();
  const SuperAlgebra a = kac_k10(base);
  const std::size_t n = 10, w = 10;  // offset of the α-coordinates
  using namespace k10;
  TwistedBasisReport r{twist(DescentDatum(tau_auto(a), ext)), {}, {}, {}, false, false, false, {}};
  r.expected_even = {
      restriction_vector(base, n, {{one, 1}}),
      restriction_vector(base, n, {{aa, 1}}),
      restriction_vector(base, n, {{w + uu, 1}}),
      restriction_vector(base, n, {{w + vv, 1}}),
      restriction_vector(base, n, {{uv, 1}, {vu, -1}}),
      restriction_vector(base, n, {{w + uv, 1}, {w + vu, 1}}),
  };
  for (auto [xa, ax] : {std::pair{ua, au}, std::pair{va, av}}) {
    r.reference_odd.push_back(restriction_vector(base, n, {{ax, 1}, {xa, 1}}));
    r.reference_odd.push_back(restriction_vector(base, n, {{w + ax, 1}, {w + xa, 1}}));
    r.expected_odd.push_back(restriction_vector(base, n, {{xa, 1}, {ax, 1}}));
    r.expected_odd.push_back(restriction_vector(base, n, {{w + xa, 1}, {w + ax, -1}}));
  }
  const Matrix s = semilinear_matrix(tau_auto(a).matrix());
  for (const auto& v : r.form.fixed_basis) {
    if (s * v != v) throw Falsification("computed basis vector is not fixed by τ⊗σ");
  }
  std::vector<Vector> even, odd;
  for (const auto& v : r.form.fixed_basis) {
    (homogeneous_parity(r.form.ambient, v) == 0 ? even : odd).push_back(v);
  }
  r.even_matches = Subspace::span(base, 2 * n, even) == Subspace::span(base, 2 * n, r.expected_even);
  if (!r.even_matches) throw Falsification("even part of the twisted K10 differs from the published basis");
  r.odd_matches_fixed_equations =
      Subspace::span(base, 2 * n, odd) == Subspace::span(base, 2 * n, r.expected_odd);
  r.reference_odd_fixed = true;
  const Subspace fixed = Subspace::span(base, 2 * n, r.form.fixed_basis);
  for (const auto& v : r.reference_odd) {
    if (fixed.contains(v)) continue;
    r.reference_odd_fixed = false;
    r.discrepancies.push_back("reference odd vector " + format_vector(r.form.ambient, v) +
                              " is not fixed: (τ⊗σ) maps it to " +
                              format_vector(r.form.ambient, s * v));
  }
  return r;
}

SplitResult split_check(const TwistedForm& form, const QuadraticEtale& ext,
                        const SuperAlgebra& reference) {
  const std::size_t n = reference.dim();
  if (form.algebra.dim() != n) return {Check::fail("dimensions differ"), std::nullopt};
  if (ext.split()) {
    const ScalarDomain& base = ext.base();
    const Scalar root = *sqrt(ext.d());
    std::vector<Vector> cols;
    for (const auto& v : form.fixed_basis) {
      Vector c(v.begin(), v.begin() + n);
      axpy(root, std::span(v).subspan(n), c);
      cols.push_back(std::move(c));
    }
    LinearMap m(form.algebra, reference, Matrix::from_columns(base, n, cols));
    Check c = is_isomorphism(m);
    return {c, c ? std::optional(m) : std::nullopt};
  }
  const ScalarDomain& k = ext.domain();
  std::vector<Vector> cols;
  for (const auto& v : form.fixed_basis) cols.push_back(to_extension(v, k));
  Matrix mk = Matrix::from_columns(k, n, cols);
  if (rank(mk) != n) return {Check::fail("K-span of the fixed basis is a proper subspace"), std::nullopt};
  LinearMap m(scalar_extension(form.algebra, k), scalar_extension(reference, k), std::move(mk));
  Check c = is_isomorphism(m);
  return {c, c ? std::optional(m) : std::nullopt};
}

EquivalenceResult forms_equivalent(const LinearMap& t, const Scalar& d, const Scalar& d2) {
  const ScalarDomain& base = t.source().domain();
  EquivalenceResult r;
  const Scalar q = d / d2;
  if (!is_square(q)) {
    r.reason = "d/d' = " + q.to_string() + " is not a square, so F(√d) and F(√d') differ";
    return r;
  }
  const Scalar s = *sqrt(q);
  TwistedForm f1 = twist(DescentDatum(t, QuadraticEtale(base, d)));
  TwistedForm f2 = twist(DescentDatum(t, QuadraticEtale(base, d2)));
  const std::size_t n = t.source().dim();
  std::vector<Vector> cols;
  for (const auto& v : f1.fixed_basis) {
    Vector img = v;
    for (std::size_t i = n; i < 2 * n; ++i) img[i] *= s;
    cols.push_back(coordinates_in(base, 2 * n, f2.fixed_basis, img));
  }
  LinearMap m(f1.algebra, f2.algebra, Matrix::from_columns(base, n, cols));
  if (auto c = is_isomorphism(m); !c) {
    throw Falsification("α -> " + s.to_string() + "α' does not give an isomorphism: " + c.detail);
  }
  r.equivalent = true;
  r.s = s;
  r.witness = std::move(m);
  r.reason = "d = s² d' with s = " + s.to_string();
  return r;
}

SeparationReport separate_forms(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (a.domain() != b.domain()) throw Error("separate_forms: domain mismatch");
  SeparationReport r;
  auto row = [&](std::string name, auto f) {
    std::string x, y;
    try {
      x = f(a);
    } catch (const Error& e) {
      x = std::string("unavailable: ") + e.what();
    }
    try {
      y = f(b);
    } catch (const Error& e) {
      y = std::string("unavailable: ") + e.what();
    }
    bool differs = x != y && x.rfind("unavailable", 0) != 0 && y.rfind("unavailable", 0) != 0;
    r.distinct = r.distinct || differs;
    r.rows.push_back({std::move(name), std::move(x), std::move(y), differs});
  };
  row("dimension", [](const SuperAlgebra& x) { return std::to_string(x.dim()); });
  row("even dimension",
      [](const SuperAlgebra& x) { return std::to_string(x.indices_of_parity(0).size()); });
  row("unital", [](const SuperAlgebra& x) { return std::string(x.unity() ? "yes" : "no"); });
  row("even idempotents",
      [](const SuperAlgebra& x) { return std::to_string(idempotent_census(x, true)); });
  row("even derivations", [](const SuperAlgebra& x) {
    return std::to_string(derivations(x, MapParity::Even).size());
  });
  row("odd derivations", [](const SuperAlgebra& x) {
    return std::to_string(derivations(x, MapParity::Odd).size());
  });
  row("simple", [](const SuperAlgebra& x) {
    auto s = is_simple(x);
    return std::string(s.verdict == SimplicityResult::Verdict::Simple      ? "yes"
                       : s.verdict == SimplicityResult::Verdict::NotSimple ? "no"
                                                                           : "inconclusive");
  });
  return r;
}

std::optional<LinearMap> rigid_witness(const SuperAlgebra& reference, const SuperAlgebra& form) {
  if (reference.dim() != 3 || form.dim() != 3) return std::nullopt;
  const auto ev = form.indices_of_parity(0);
  const auto od = form.indices_of_parity(1);
  if (ev.size() != 1 || od.size() != 2) return std::nullopt;
  const std::size_t i0 = ev[0];
  Vector b = form.basis(i0);
  Scalar lambda = form.multiply(b, b)[i0];
  if (lambda.is_zero()) return std::nullopt;
  Vector e = scale(lambda.inverse(), b);
  Vector x = form.basis(od[0]), y = form.basis(od[1]);
  Scalar mu = form.multiply(x, y)[i0] * lambda;  // xy = mu e
  if (mu.is_zero()) return std::nullopt;
  y = scale(mu.inverse(), y);
  std::vector<Vector> cols{e, x, y};
  LinearMap m(reference, form, Matrix::from_columns(form.domain(), 3, cols));
  if (!is_isomorphism(m)) return std::nullopt;
  return m;
}

LinearMap product_twist_witness(const TwistedForm& form, const SuperAlgebra& factor,
                                const QuadraticEtale& ext) {
  const ScalarDomain& base = ext.base();
  const std::size_t m = factor.dim(), n = 2 * m;
  SuperAlgebra source = restrict_scalars(scalar_extension(factor, ext.domain()));
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < m; ++i) {
    cols.push_back(coordinates_in(base, 2 * n, form.fixed_basis,
                                  restriction_vector(base, n, {{i, 1}, {m + i, 1}})));
  }
  for (std::size_t i = 0; i < m; ++i) {
    cols.push_back(coordinates_in(base, 2 * n, form.fixed_basis,
                                  restriction_vector(base, n, {{n + i, 1}, {n + m + i, -1}})));
  }
  LinearMap w(source, form.algebra, Matrix::from_columns(base, n, cols));
  if (auto c = is_isomorphism(w); !c) {
    throw Falsification("twist of the product does not match the restriction of scalars: " +
                        c.detail);
  }
  return w;
}

LinearMap swap_auto(const SuperAlgebra& product) {
  const ScalarDomain& dom = product.domain();
  return psi_auto(product, SL2Element::identity(dom), SL2Element::identity(dom), true);
}

}  // namespace kac
