#pragma once

// Linear maps between superalgebras, homomorphism checks, the families
// Φ, τ, Ψ, and derivations.

#include <random>
#include <vector>

#include "kac/superalgebra.hpp"

namespace kac {

enum class MapParity { Even, Odd };

class LinearMap {
 public:
  // Throws if the matrix shape is wrong or a nonzero entry connects basis
  // vectors whose parities disagree with the declared parity.
  LinearMap(SuperAlgebra source, SuperAlgebra target, Matrix matrix,
            MapParity parity = MapParity::Even);
  static LinearMap identity(const SuperAlgebra& a);

  const SuperAlgebra& source() const { return source_; }
  const SuperAlgebra& target() const { return target_; }
  const Matrix& matrix() const { return m_; }
  MapParity parity() const { return parity_; }

  Vector operator()(std::span<const Scalar> x) const { return m_ * x; }
  // (*this) after o
  LinearMap operator*(const LinearMap& o) const;
  LinearMap inverse() const;
  bool operator==(const LinearMap& o) const;
  bool operator!=(const LinearMap& o) const { return !(*this == o); }

 private:
  SuperAlgebra source_, target_;
  Matrix m_;
  MapParity parity_;
};

// Even-parity check M(e_i e_j) = M(e_i) M(e_j) on all basis pairs, plus
// unity preservation when both algebras have one.
Check is_morphism(const LinearMap& m);
Check is_automorphism(const LinearMap& m);
// Bijective morphism between possibly different algebras.
Check is_isomorphism(const LinearMap& m);

class SL2Element {
 public:
  // Columns are the images of u and v. Throws unless det = 1.
  explicit SL2Element(Matrix m);
  SL2Element(const ScalarDomain& dom, const Scalar& a, const Scalar& b, const Scalar& c,
             const Scalar& d);
  static SL2Element identity(const ScalarDomain& dom);
  // u -> v, v -> -u
  static SL2Element symplectic_j(const ScalarDomain& dom);

  const Matrix& matrix() const { return m_; }
  SL2Element operator*(const SL2Element& o) const;
  SL2Element inverse() const;
  SL2Element pow(unsigned k) const;
  bool operator==(const SL2Element& o) const { return m_ == o.m_; }

 private:
  Matrix m_;
};

SL2Element random_sl2(const ScalarDomain& dom, std::mt19937_64& rng);
// All of SL2(F_p); finite prime fields only.
std::vector<SL2Element> enumerate_sl2(const ScalarDomain& dom);

// Φ(f, g) on K10.
LinearMap phi_auto(const SuperAlgebra& k10, const SL2Element& f, const SL2Element& g);
// τ on K10: x⊗y -> (-1)^{|x||y|} y⊗x.
LinearMap tau_auto(const SuperAlgebra& k10);
// Ψ(f, g), followed after the factor swap when swap is set, on k3xk3 or jwxjw.
LinearMap psi_auto(const SuperAlgebra& product, const SL2Element& f, const SL2Element& g,
                   bool swap);

struct Decomposition {
  SL2Element f, g;
  bool swap;
};

// M = Φ(f, g) ∘ τ^swap. Throws Falsification when M does not have that form.
Decomposition decompose_automorphism(const LinearMap& m);

// Basis of the parity-homogeneous derivations of A:
//   D(xy) = D(x) y + (-1)^{|D||x|} x D(y).
std::vector<LinearMap> derivations(const SuperAlgebra& a, MapParity parity);
Check is_derivation(const LinearMap& d);

// dΦ(X, Y) on K10 for traceless 2x2 X, Y.
LinearMap dphi(const SuperAlgebra& k10, const Matrix& x, const Matrix& y);

// [D, E] = DE - (-1)^{|D||E|} ED
LinearMap supercommutator(const LinearMap& d, const LinearMap& e);

}  // namespace kac
