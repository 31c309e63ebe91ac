#include <gtest/gtest.h>

#include "kac/descent.hpp"
#include "kac/error.hpp"
#include "kac/morphisms.hpp"
#include "support.hpp"

using namespace kac;
using namespace kac::testing;

namespace {

ScalarDomain Q() { return ScalarDomain::rational(); }
ScalarDomain F(std::int64_t p) { return ScalarDomain::prime_field(p); }

// Vector x + α y in restriction coordinates of an n-dim algebra.
Vector rvec(const ScalarDomain& base, std::size_t n,
            std::initializer_list<std::pair<std::size_t, long>> terms) {
  Vector v(2 * n, Scalar(base));
  for (const auto& [i, c] : terms) v[i] += Scalar(base, c);
  return v;
}

LinearMap odd_sign(const SuperAlgebra& a) {
  Matrix m = Matrix::identity(a.domain(), a.dim());
  for (std::size_t i : a.indices_of_parity(1)) m(i, i) = Scalar(a.domain(), -1);
  return LinearMap(a, a, m);
}

// Nonsquares among {-1, 2, 3, 5} in the base field.
std::vector<Scalar> test_ds(const ScalarDomain& base) {
  std::vector<Scalar> out;
  for (long d : {-1, 2, 3, 5}) {
    Scalar s(base, d);
    if (!s.is_zero() && !is_square(s)) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(QuadraticEtaleTest, SplitFlag) {
  EXPECT_FALSE(QuadraticEtale(Q(), Scalar(Q(), -1)).split());
  EXPECT_TRUE(QuadraticEtale(Q(), Scalar(Q(), 4)).split());
  EXPECT_TRUE(QuadraticEtale(F(5), Scalar(F(5), -1)).split());
  EXPECT_FALSE(QuadraticEtale(F(5), Scalar(F(5), 2)).split());
  EXPECT_THROW(QuadraticEtale(Q(), Scalar(Q(), 0)), Error);
}

TEST(DescentDatumTest, RequiresAnInvolutiveAutomorphism) {
  SuperAlgebra k = kac_k10(Q());
  QuadraticEtale ext(Q(), Scalar(Q(), -1));
  EXPECT_NO_THROW(DescentDatum(tau_auto(k), ext));
  SL2Element j = SL2Element::symplectic_j(Q());
  EXPECT_THROW(DescentDatum(phi_auto(k, j, j.inverse()), ext), Error);
  Matrix m = Matrix::identity(Q(), 10);
  m(k10::ua, k10::ua) = Scalar(Q(), -1);
  EXPECT_THROW(DescentDatum(LinearMap(k, k, m), ext), Error);
}

TEST(Twist, K10BasisAgainstReference) {
  for (auto [base, d] : std::vector<std::pair<ScalarDomain, long>>{{Q(), -1}, {F(5), 2}, {F(3), -1}}) {
    QuadraticEtale ext(base, Scalar(base, d));
    TwistedBasisReport r = k10_twisted_basis(ext);
    const std::size_t n = 10, w = 10;
    EXPECT_TRUE(r.even_matches);
    EXPECT_TRUE(r.odd_matches_fixed_equations);
    EXPECT_FALSE(r.reference_odd_fixed);
    EXPECT_EQ(r.discrepancies.size(), 2u);
    SuperAlgebra& f = r.form.algebra;
    EXPECT_EQ(f.dim(), 10u);
    EXPECT_EQ(f.indices_of_parity(0).size(), 6u);
    EXPECT_EQ(f.indices_of_parity(1).size(), 4u);
    EXPECT_TRUE(is_supercommutative(f).ok);
    EXPECT_TRUE(is_jordan_super(f).ok);
    Subspace fixed = Subspace::span(base, 2 * n, r.form.fixed_basis);
    EXPECT_TRUE(fixed.contains(rvec(base, n, {{k10::aa, 1}})));
    EXPECT_TRUE(fixed.contains(rvec(base, n, {{k10::uv, 1}, {k10::vu, -1}})));
    EXPECT_TRUE(fixed.contains(rvec(base, n, {{w + k10::uu, 1}})));
    EXPECT_TRUE(fixed.contains(rvec(base, n, {{w + k10::uv, 1}, {w + k10::vu, 1}})));
    EXPECT_TRUE(fixed.contains(rvec(base, n, {{k10::ua, 1}, {k10::au, 1}})));
    EXPECT_TRUE(fixed.contains(rvec(base, n, {{w + k10::ua, 1}, {w + k10::au, -1}})));
    EXPECT_FALSE(fixed.contains(rvec(base, n, {{w + k10::ua, 1}, {w + k10::au, 1}})));
    // each fixed vector satisfies (τ⊗σ)X = X
    LinearMap t = tau_auto(kac_k10(base));
    for (const auto& v : r.form.fixed_basis) {
      Vector x(v.begin(), v.begin() + n), y(v.begin() + n, v.end());
      EXPECT_EQ(t(x), x);
      EXPECT_EQ(t(y), scale(Scalar(base, -1), y));
    }
  }
}

TEST(Twist, SplitsOverTheExtension) {
  for (auto [base, d] : std::vector<std::pair<ScalarDomain, long>>{{Q(), -1}, {F(5), 2}, {F(3), -1}}) {
    SuperAlgebra k = kac_k10(base);
    QuadraticEtale ext(base, Scalar(base, d));
    TwistedForm form = twist(DescentDatum(tau_auto(k), ext));
    SplitResult s = split_check(form, ext, k);
    EXPECT_TRUE(s.check.ok) << s.check.detail;
    ASSERT_TRUE(s.witness.has_value());
    EXPECT_TRUE(is_isomorphism(*s.witness).ok);
    EXPECT_EQ(s.witness->source().domain(), ext.domain());
  }
}

TEST(Twist, SquareParameterGivesTheOriginal) {
  SuperAlgebra k = kac_k10(Q());
  QuadraticEtale ext(Q(), Scalar(Q(), 4));
  TwistedForm form = twist(DescentDatum(tau_auto(k), ext));
  SplitResult s = split_check(form, ext, k);
  ASSERT_TRUE(s.check.ok && s.witness);
  EXPECT_EQ(s.witness->source().domain(), Q());
  EXPECT_TRUE(is_isomorphism(*s.witness).ok);
}

TEST(Twist, ProductSwapGivesRestrictionOfScalars) {
  for (auto [base, d] : std::vector<std::pair<ScalarDomain, long>>{{Q(), -1}, {F(3), -1}, {F(5), 2}}) {
    for (const auto& [prod, factor] : {std::pair{"k3xk3", "k3"}, std::pair{"jwxjw", "jw"}}) {
      SuperAlgebra p = catalog_algebra(prod, base);
      QuadraticEtale ext(base, Scalar(base, d));
      TwistedForm form = twist(DescentDatum(swap_auto(p), ext));
      LinearMap w = product_twist_witness(form, catalog_algebra(factor, base), ext);
      EXPECT_TRUE(is_isomorphism(w).ok);
      EXPECT_EQ(w.source(), restrict_scalars(catalog_algebra(factor, ext.domain())));
    }
  }
}

TEST(Twist, RoundTripOverCatalog) {
  for (auto base : {Q(), F(3), F(5), F(7)}) {
    for (const Scalar& d : test_ds(base)) {
      QuadraticEtale ext(base, d);
      for (const auto& name : {"k10", "k3xk3", "jwxjw"}) {
        SuperAlgebra a = catalog_algebra(name, base);
        LinearMap t = std::string(name) == "k10" ? tau_auto(a) : swap_auto(a);
        TwistedForm form = twist(DescentDatum(t, ext));
        EXPECT_EQ(form.fixed_basis.size(), a.dim());
        EXPECT_TRUE(split_check(form, ext, a).check.ok) << name << " " << d.to_string();
        EXPECT_TRUE(is_jordan_super(form.algebra).ok);
      }
    }
  }
}

TEST(FormsEquivalent, Examples) {
  LinearMap t = tau_auto(kac_k10(Q()));
  EquivalenceResult a = forms_equivalent(t, Scalar(Q(), -1), Scalar(Q(), -4));
  EXPECT_TRUE(a.equivalent);
  ASSERT_TRUE(a.s && a.witness);
  EXPECT_EQ(*a.s * *a.s * Scalar(Q(), -4), Scalar(Q(), -1));
  EXPECT_TRUE(is_isomorphism(*a.witness).ok);

  EquivalenceResult b = forms_equivalent(t, Scalar(Q(), -1), Scalar(Q(), 2));
  EXPECT_FALSE(b.equivalent);
  EXPECT_FALSE(b.witness.has_value());

  EquivalenceResult c = forms_equivalent(t, Scalar(Q(), 3), Scalar(Q(), 3));
  ASSERT_TRUE(c.equivalent && c.witness);
  EXPECT_EQ(c.witness->matrix(), Matrix::identity(Q(), 10));
}

TEST(Separate, Examples) {
  auto f9 = ScalarDomain::parse("quad:fp:3:-1");
  SeparationReport r = separate_forms(k3xk3(F(3)), restrict_scalars(kaplansky_k3(f9)));
  EXPECT_TRUE(r.distinct);
  bool idem = false;
  for (const auto& row : r.rows) {
    if (row.name == "even idempotents") {
      EXPECT_EQ(row.a, "4");
      EXPECT_EQ(row.b, "2");
      idem = true;
    }
  }
  EXPECT_TRUE(idem);

  SeparationReport same = separate_forms(kac_k10(F(5)), kac_k10(F(5)));
  EXPECT_FALSE(same.distinct);
  for (const auto& row : same.rows) EXPECT_FALSE(row.differs);
}

TEST(Separate, K10AndItsTwistByIndependentCount) {
  SuperAlgebra k = kac_k10(F(5));
  TwistedForm form = twist(DescentDatum(tau_auto(k), QuadraticEtale(F(5), Scalar(F(5), 2))));
  auto count = [](const SuperAlgebra& a) {
    ModTable t(even_part(a));
    std::uint64_t n = 0;
    std::vector<std::int64_t> x(t.n, 0);
    while (true) {
      if (t.mul(x, x) == x) ++n;
      std::size_t i = 0;
      while (i < t.n && ++x[i] == t.p) x[i++] = 0;
      if (i == t.n) break;
    }
    return n;
  };
  const std::uint64_t a = count(k), b = count(form.algebra);
  EXPECT_NE(a, b);
  EXPECT_EQ(idempotent_census(k, true), a);
  EXPECT_EQ(idempotent_census(form.algebra, true), b);
  EXPECT_TRUE(separate_forms(k, form.algebra).distinct);
}

TEST(Rigidity, K3AndJWTwistsAreIsomorphicToTheOriginal) {
  for (auto base : {Q(), F(3), F(5), F(7)}) {
    for (const Scalar& d : test_ds(base)) {
      QuadraticEtale ext(base, d);
      for (const auto& name : {"k3", "jw"}) {
        SuperAlgebra a = catalog_algebra(name, base);
        for (const LinearMap& t : {LinearMap::identity(a), odd_sign(a)}) {
          TwistedForm form = twist(DescentDatum(t, ext));
          auto w = rigid_witness(a, form.algebra);
          ASSERT_TRUE(w.has_value()) << name << " d=" << d.to_string();
          EXPECT_TRUE(is_isomorphism(*w).ok);
        }
      }
    }
  }
}
