#pragma once

// Quadratic étale extensions K = F(α), α² = d, and twisted forms obtained as
// fixed points of t ⊗ σ on A ⊗ K, where t is an involutive automorphism.
//
// A ⊗ K is handled through its restriction of scalars, with basis
// e_0..e_{n-1}, α e_0..α e_{n-1}; there t ⊗ σ has matrix diag(T, -T).

#include <optional>
#include <string>
#include <vector>

#include "kac/morphisms.hpp"
#include "kac/superalgebra.hpp"

namespace kac {

class QuadraticEtale {
 public:
  QuadraticEtale(const ScalarDomain& base, const Scalar& d);
  const ScalarDomain& base() const { return base_; }
  const Scalar& d() const { return d_; }
  bool split() const { return split_; }
  // F[w]/(w² - d); a field iff !split().
  const ScalarDomain& domain() const { return dom_; }

 private:
  ScalarDomain base_;
  Scalar d_;
  bool split_;
  ScalarDomain dom_;
};

class DescentDatum {
 public:
  // Throws unless t is an automorphism of A with t∘t = id.
  DescentDatum(LinearMap t, QuadraticEtale ext);
  const SuperAlgebra& algebra() const { return t_.source(); }
  const LinearMap& involution() const { return t_; }
  const QuadraticEtale& extension() const { return ext_; }

 private:
  LinearMap t_;
  QuadraticEtale ext_;
};

struct TwistedForm {
  SuperAlgebra algebra;               // over the base field
  std::vector<Vector> fixed_basis;    // length 2n, in restriction coordinates
  SuperAlgebra ambient;               // restrict_scalars(A ⊗ K)
};

// Fixed points of t ⊗ σ. The basis lists even vectors first; within each
// parity it is the reduced echelon basis. Throws Falsification when the fixed
// space has the wrong dimension or is not a subalgebra.
TwistedForm twist(const DescentDatum& datum);

// The vector x + α y of A ⊗ K, given by its 2n restriction coordinates.
Vector to_extension(std::span<const Scalar> v, const ScalarDomain& k);

struct TwistedBasisReport {
  TwistedForm form;
  std::vector<Vector> expected_even;     // the six reference even vectors
  std::vector<Vector> reference_odd;     // the four reference odd vectors
  std::vector<Vector> expected_odd;      // (x⊗a + a⊗x)⊗1, (x⊗a - a⊗x)⊗α
  bool even_matches = false;
  bool odd_matches_fixed_equations = false;
  bool reference_odd_fixed = false;
  std::vector<std::string> discrepancies;
};

// Twist of K10 by τ for a nonsquare d, compared with the reference basis.
// Throws Falsification if the even part does not match.
TwistedBasisReport k10_twisted_basis(const QuadraticEtale& ext);

struct SplitResult {
  Check check;
  // Nonsquare d: K-linear map form ⊗ K -> reference ⊗ K.
  // Square d: base-linear map form -> reference (α evaluated at a root).
  std::optional<LinearMap> witness;
};

SplitResult split_check(const TwistedForm& form, const QuadraticEtale& ext,
                        const SuperAlgebra& reference);

struct EquivalenceResult {
  bool equivalent = false;
  std::optional<Scalar> s;  // d = s² d'
  std::optional<LinearMap> witness;
  std::string reason;
};

// Twists of the same datum by d and d' are isomorphic iff d/d' is a square.
// The witness sends P + Qα to P + Q s α'.
EquivalenceResult forms_equivalent(const LinearMap& t, const Scalar& d, const Scalar& d2);

struct InvariantRow {
  std::string name;
  std::string a, b;
  bool differs;
};

struct SeparationReport {
  std::vector<InvariantRow> rows;
  bool distinct = false;  // some invariant differs; otherwise inconclusive
};

SeparationReport separate_forms(const SuperAlgebra& a, const SuperAlgebra& b);

// A form of K3 or J(W) (same dimension, one-dimensional even part spanned by
// an idempotent, odd part pairing into it) mapped from the catalog algebra:
// e -> idempotent, u -> x, v -> y with xy = idempotent. Verified.
std::optional<LinearMap> rigid_witness(const SuperAlgebra& reference, const SuperAlgebra& form);

// restrict_scalars(B ⊗ K) -> twist of B x B by the factor swap, for
// B = k3 or jw: e_i -> (e_i, e_i), α e_i -> α (e_i, -e_i). Verified.
LinearMap product_twist_witness(const TwistedForm& form, const SuperAlgebra& factor,
                                const QuadraticEtale& ext);

// The factor swap on k3xk3 / jwxjw.
LinearMap swap_auto(const SuperAlgebra& product);

}  // namespace kac
