// Acceptance suite: one PASS/FAIL line per criterion.
//
//   kac_acceptance                 all criteria
//   kac_acceptance --criterion 6   just one

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "kac/catalog.hpp"
#include "kac/census.hpp"
#include "kac/descent.hpp"
#include "kac/error.hpp"
#include "kac/gradings.hpp"
#include "kac/morphisms.hpp"
#include "kac/refinement.hpp"

using namespace kac;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

ScalarDomain Q() { return ScalarDomain::rational(); }
ScalarDomain F(std::int64_t p) { return ScalarDomain::prime_field(p); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail.str("");
      pass = false;
      detail << what << "; ";
    }
  }
};

Vector flatten(const Matrix& m) {
  Vector v;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

Subspace span_of(const std::vector<LinearMap>& maps, const ScalarDomain& dom, std::size_t n) {
  std::vector<Vector> vs;
  for (const auto& m : maps) vs.push_back(flatten(m.matrix()));
  return Subspace::span(dom, n * n, vs);
}

bool maps_onto(const LinearMap& phi, const Grading& g, const Grading& h) {
  if (g.components().size() != h.components().size()) return false;
  for (const auto& [d, c] : g.components()) {
    Subspace t = h.component(d);
    if (t.dim() != c.dim()) return false;
    for (const auto& v : c.basis())
      if (!t.contains(phi(v))) return false;
  }
  return true;
}

void c1_axioms(Outcome& o) {
  std::vector<std::pair<std::string, ScalarDomain>> cases;
  for (const auto& name : {"k3", "jw", "k10"})
    for (auto D : {Q(), F(5), F(7)}) cases.emplace_back(name, D);
  cases.emplace_back("k9", F(3));
  double worst = 0;
  for (const auto& [name, D] : cases) {
    auto t0 = Clock::now();
    SuperAlgebra a = catalog_algebra(name, D);
    const bool ok = is_supercommutative(a).ok && is_jordan_super(a).ok;
    const double t = seconds_since(t0);
    worst = std::max(worst, t);
    o.require(ok, name + " over " + D.descriptor() + " fails the axioms");
    o.require(t < 1.0, name + " over " + D.descriptor() + " took over 1 s");
  }
  o.detail << cases.size() << " algebra/field pairs, slowest " << std::fixed
           << std::setprecision(3) << worst << " s";
}

void c2_dichotomy(Outcome& o) {
  SimplicityResult r5 = is_simple(kac_k10(F(5)));
  o.require(r5.simple(), "K10 over F5 not simple");
  SuperAlgebra k3f = kac_k10(F(3));
  SimplicityResult r3 = is_simple(k3f);
  o.require(r3.verdict == SimplicityResult::Verdict::NotSimple, "K10 over F3 reported simple");
  if (r3.proper_ideal) {
    std::vector<Vector> k9;
    for (std::size_t i = 1; i < 10; ++i) k9.push_back(k3f.basis(i));
    o.require(*r3.proper_ideal == Subspace::span(F(3), 10, k9), "ideal is not K3⊗K3");
  }
  SimplicityResult r9 = is_simple(kac_k9(F(3)));
  o.require(r9.simple(), "K9 over F3 not simple");
  o.detail << "K10/F5 simple (" << r5.points_checked << " points), K10/F3 ideal dim "
           << (r3.proper_ideal ? r3.proper_ideal->dim() : 0) << ", K9/F3 simple ("
           << r9.points_checked << " points)";
}

void c3_automorphisms(Outcome& o) {
  const int samples = 100;
  for (auto D : {Q(), F(3), F(5)}) {
    SuperAlgebra k = kac_k10(D);
    LinearMap tau = tau_auto(k);
    o.require(is_morphism(tau).ok, "tau not a morphism");
    o.require(tau * tau == LinearMap::identity(k), "tau^2 != id");
    std::mt19937_64 rng(2024);
    for (int s = 0; s < samples; ++s) {
      SL2Element f = random_sl2(D, rng), g = random_sl2(D, rng);
      LinearMap phi = phi_auto(k, f, g);
      o.require(is_morphism(phi).ok, "phi(f,g) not a morphism over " + D.descriptor());
      o.require(tau * phi * tau == phi_auto(k, g, f), "tau phi tau != phi(g,f)");
      Decomposition d = decompose_automorphism(phi);
      o.require(d.f == f && d.g == g && !d.swap, "decompose(phi) mismatch");
      Decomposition e = decompose_automorphism(phi * tau);
      o.require(e.f == f && e.g == g && e.swap, "decompose(phi tau) mismatch");
    }
  }
  o.detail << samples << " random (f,g) per field over Q, F3, F5";
}

void c4_derivations(Outcome& o) {
  for (auto D : {Q(), F(5), F(7)}) {
    SuperAlgebra k = kac_k10(D);
    std::vector<LinearMap> der = derivations(k, MapParity::Even);
    o.require(der.size() == 6, "even derivations of K10 over " + D.descriptor() + " have dim " +
                                   std::to_string(der.size()));
    Matrix h(D, 2, 2), e(D, 2, 2), f(D, 2, 2), z(D, 2, 2);
    h(0, 0) = Scalar(D, 1);
    h(1, 1) = Scalar(D, -1);
    e(0, 1) = Scalar(D, 1);
    f(1, 0) = Scalar(D, 1);
    std::vector<LinearMap> images;
    for (const Matrix* x : {&h, &e, &f}) {
      images.push_back(dphi(k, *x, z));
      images.push_back(dphi(k, z, *x));
    }
    Subspace span = span_of(der, D, 10);
    o.require(span == span_of(images, D, 10), "span of dphi differs over " + D.descriptor());
    for (const auto& a : der)
      for (const auto& b : der)
        o.require(span.contains(flatten(supercommutator(a, b).matrix())), "not bracket-closed");
    o.detail << D.descriptor() << ": even 6, odd " << derivations(k, MapParity::Odd).size()
             << "; ";
  }
}

void c5_gradings(Outcome& o) {
  AbelianGroup Z = AbelianGroup::integers(1), Z2 = AbelianGroup::integers(2);
  AbelianGroup ZxC2(1, {2});
  auto z = [&](std::int64_t k) { return Z.element({k}); };
  int constructed = 0;
  for (const auto& name : {"k3xk3", "jwxjw", "k10"}) {
    SuperAlgebra a = catalog_algebra(name, Q());
    for (std::int64_t x : {-2, 0, 1, 3})
      for (std::int64_t y : {-1, 0, 2}) {
        Grading g = gamma(a, 1, z(x), z(y));
        o.require(verify_grading(g).ok, "family 1 fails to verify");
        o.require(classify(g).label == canonical_label(1, z(x), z(y)), "classify round trip");
        ++constructed;
      }
    for (std::int64_t x : {-1, 0, 1, 2}) {
      GroupElement g = ZxC2.element({x, 0}), h = ZxC2.element({0, 1});
      Grading gr = gamma(a, 2, g, h);
      o.require(verify_grading(gr).ok, "family 2 fails to verify");
      o.require(classify(gr).label == canonical_label(2, g, h), "classify round trip");
      ++constructed;
    }
  }
  SuperAlgebra k = kac_k10(Q());
  struct Pair {
    Grading g, h;
  };
  std::vector<Pair> examples{
      {gamma_k10(k, 1, z(1), z(1)), gamma_k10(k, 1, z(1), z(-1))},
      {gamma_k10(k, 1, z(1), z(2)), gamma_k10(k, 1, z(2), z(1))},
      {gamma_k10(k, 2, ZxC2.element({1, 0}), ZxC2.element({0, 1})),
       gamma_k10(k, 2, ZxC2.element({-1, 1}), ZxC2.element({0, 1}))}};
  for (const auto& [g, h] : examples) {
    IsomorphismResult r = gradings_isomorphic(g, h);
    o.require(r.isomorphic && r.witness && is_automorphism(*r.witness).ok &&
                  maps_onto(*r.witness, g, h),
              "isomorphism example without a verified witness");
  }
  std::mt19937_64 rng(99);
  std::vector<AbelianGroup> groups{Z, Z2, ZxC2, AbelianGroup::cyclic(4), AbelianGroup(0, {2, 2}),
                                   AbelianGroup(1, {6})};
  auto rnd = [&](const AbelianGroup& G) {
    std::vector<std::int64_t> c;
    for (std::size_t i = 0; i < G.arity(); ++i) c.push_back(static_cast<std::int64_t>(rng() % 9) - 4);
    return G.element(c);
  };
  int coarsened = 0;
  for (const auto& name : {"k10", "k3xk3"}) {
    SuperAlgebra a = catalog_algebra(name, Q());
    std::vector<Grading> fine = fine_gradings(a);
    for (int c = 0; c < 20; ++c) {
      const AbelianGroup& G = groups[rng() % groups.size()];
      GroupElement g1 = rnd(G), g2 = rnd(G);
      o.require(coarsen(fine[0], GroupHom(fine[0].group(), G, {g1, g2})) == gamma(a, 1, g1, g2),
                "coarsening of the first fine grading");
      ++coarsened;
      GroupElement h = rnd(G);
      if (!h.is_zero() && h.times(2).is_zero()) {
        GroupElement g = rnd(G);
        o.require(coarsen(fine[1], GroupHom(fine[1].group(), G, {g, h})) == gamma(a, 2, g, h),
                  "coarsening of the second fine grading");
        ++coarsened;
      }
    }
  }
  o.detail << constructed << " constructed gradings, 3 witnessed isomorphisms, " << coarsened
           << " coarsenings";
}

void c6_census(Outcome& o) {
  const std::size_t predicted = enumerate_labels(AbelianGroup::cyclic(2)).size();
  o.require(predicted == 4, "label enumeration over Z/2 gives " + std::to_string(predicted));
  for (const auto& name : {"k10", "k3xk3"}) {
    CensusResult r = z2_census(catalog_algebra(name, F(3)));
    o.require(r.classes == predicted, std::string(name) + " census gives " + std::to_string(r.classes));
    o.detail << name << ": " << r.classes << " classes from " << r.involutions
             << " involutions; ";
  }
  o.detail << "labels: " << predicted;
}

void c7_twisted_forms(Outcome& o) {
  for (auto [base, d] : std::vector<std::pair<ScalarDomain, long>>{{Q(), -1}, {F(5), 2}, {F(3), -1}}) {
    QuadraticEtale ext(base, Scalar(base, d));
    TwistedBasisReport r = k10_twisted_basis(ext);
    const SuperAlgebra& f = r.form.algebra;
    const std::string where = base.descriptor() + " d=" + std::to_string(d);
    o.require(f.dim() == 10 && is_jordan_super(f).ok, "twist is not a 10-dim Jordan superalgebra, " + where);
    o.require(r.even_matches, "even part mismatch, " + where);
    o.require(r.odd_matches_fixed_equations, "odd fixed space mismatch, " + where);
    o.require(!r.reference_odd_fixed && !r.discrepancies.empty(), "odd discrepancy not detected, " + where);
    LinearMap t = tau_auto(kac_k10(base));
    const std::size_t n = 10;
    for (const auto& v : r.form.fixed_basis) {
      Vector x(v.begin(), v.begin() + n), y(v.begin() + n, v.end());
      o.require(t(x) == x && t(y) == scale(Scalar(base, -1), y), "fixed vector fails (τ⊗σ)X = X");
    }
    o.require(split_check(r.form, ext, kac_k10(base)).check.ok, "no splitting, " + where);
  }
  o.detail << "Q(d=-1), F5(d=2), F3(d=-1): even part matches, odd discrepancy reported, splits";
}

void c8_uniqueness(Outcome& o) {
  LinearMap t = tau_auto(kac_k10(Q()));
  EquivalenceResult a = forms_equivalent(t, Scalar(Q(), -1), Scalar(Q(), -4));
  o.require(a.equivalent && a.witness && is_isomorphism(*a.witness).ok, "(-1,-4) not equivalent");
  EquivalenceResult b = forms_equivalent(t, Scalar(Q(), -1), Scalar(Q(), 2));
  o.require(!b.equivalent, "(-1,2) reported equivalent");
  o.detail << "(-1,-4): s=" << (a.s ? a.s->to_string() : "?") << ", witness verified; (-1,2): "
           << b.reason;
}

void c9_separation(Outcome& o) {
  auto f9 = ScalarDomain::parse("quad:fp:3:-1");
  SeparationReport a = separate_forms(k3xk3(F(3)), restrict_scalars(kaplansky_k3(f9)));
  bool counts = false;
  for (const auto& row : a.rows)
    if (row.name == "even idempotents") counts = row.a == "4" && row.b == "2";
  o.require(a.distinct && counts, "K3xK3 vs K3 over F9 not separated by 4 vs 2");
  SuperAlgebra k = kac_k10(F(5));
  TwistedForm form = twist(DescentDatum(tau_auto(k), QuadraticEtale(F(5), Scalar(F(5), 2))));
  SeparationReport b = separate_forms(k, form.algebra);
  std::string ka, kb;
  for (const auto& row : b.rows)
    if (row.name == "even idempotents") {
      ka = row.a;
      kb = row.b;
    }
  o.require(b.distinct && !ka.empty() && ka != kb, "K10 vs its F5 twist not separated");
  o.detail << "even idempotents 4 vs 2; K10 " << ka << " vs twist " << kb;
}

void c10_rigidity(Outcome& o) {
  int count = 0;
  for (auto [base, d] : std::vector<std::pair<ScalarDomain, long>>{
           {Q(), -1}, {Q(), 2}, {Q(), 3}, {F(3), -1}, {F(5), 2}, {F(7), -1}}) {
    QuadraticEtale ext(base, Scalar(base, d));
    for (const auto& name : {"k3", "jw"}) {
      SuperAlgebra a = catalog_algebra(name, base);
      Matrix m = Matrix::identity(base, 3);
      m(1, 1) = m(2, 2) = Scalar(base, -1);
      for (const LinearMap& t : {LinearMap::identity(a), LinearMap(a, a, m)}) {
        TwistedForm form = twist(DescentDatum(t, ext));
        auto w = rigid_witness(a, form.algebra);
        o.require(w && is_isomorphism(*w).ok, std::string(name) + " twist not isomorphic over " +
                                                  base.descriptor());
        ++count;
      }
    }
  }
  o.detail << count << " twists of K3 and J(W), each with a verified isomorphism";
}

struct Criterion {
  int number;
  const char* title;
  double limit;  // seconds, 0 for none
  std::function<void(Outcome&)> body;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  app.add_option("-c,--criterion", only, "run only these criteria")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "axioms", 0, c1_axioms},
      {2, "characteristic dichotomy", 10, c2_dichotomy},
      {3, "automorphisms", 0, c3_automorphisms},
      {4, "derivations", 0, c4_derivations},
      {5, "gradings", 0, c5_gradings},
      {6, "census cross-check", 60, c6_census},
      {7, "twisted forms", 0, c7_twisted_forms},
      {8, "uniqueness per extension", 0, c8_uniqueness},
      {9, "separation", 30, c9_separation},
      {10, "rigidity", 0, c10_rigidity},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.number) == only.end()) continue;
    Outcome o;
    auto t0 = Clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail.str("");
      o.detail << "exception: " << e.what();
    }
    const double t = seconds_since(t0);
    if (c.limit > 0 && t >= c.limit) {
      o.pass = false;
      o.detail << " [over the " << c.limit << " s limit]";
    }
    all &= o.pass;
    std::cout << "criterion " << std::setw(2) << c.number << " " << (o.pass ? "PASS" : "FAIL")
              << "  " << c.title << ": " << o.detail.str() << " (" << std::fixed
              << std::setprecision(2) << t << " s)" << std::endl;
  }
  return all ? 0 : 1;
}
