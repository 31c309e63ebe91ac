#pragma once

// The named algebras, with frozen basis orders.
//
//   k3     (a, u, v)                       parities (0,1,1)
//   jw     (1, u, v)                       parities (0,1,1), unity 1
//   k10    (1, a⊗a, u⊗u, u⊗v, v⊗u, v⊗v,
//           u⊗a, v⊗a, a⊗u, a⊗v)             parities (0,0,0,0,0,0,1,1,1,1)
//   k9     k10 without 1 (characteristic 3 only)
//   k3xk3  ((a,0),(u,0),(v,0),(0,a),(0,u),(0,v))
//   jwxjw  ((1,0),(u,0),(v,0),(0,1),(0,u),(0,v))
//
// The symplectic form on W = span(u, v) has (u|v) = 1.

#include <string>
#include <string_view>
#include <vector>

#include "kac/superalgebra.hpp"

namespace kac {

// The supersymmetric form on K3 in the basis (a, u, v).
class K3Form {
 public:
  explicit K3Form(const ScalarDomain& dom);
  const Matrix& matrix() const { return m_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  Scalar evaluate(std::span<const Scalar> x, std::span<const Scalar> y) const;

 private:
  Matrix m_;
};

SuperAlgebra kaplansky_k3(const ScalarDomain& dom);
SuperAlgebra superform_jw(const ScalarDomain& dom);
SuperAlgebra kac_k10(const ScalarDomain& dom);
SuperAlgebra kac_k9(const ScalarDomain& dom);
SuperAlgebra k3xk3(const ScalarDomain& dom);
SuperAlgebra jwxjw(const ScalarDomain& dom);

namespace k10 {
// Indices into the k10 basis.
inline constexpr std::size_t one = 0, aa = 1, uu = 2, uv = 3, vu = 4, vv = 5, ua = 6,
                             va = 7, au = 8, av = 9;
// Index of x⊗y for x, y in {0: a, 1: u, 2: v}; 0 for a⊗a.
std::size_t tensor_index(std::size_t x, std::size_t y);
}  // namespace k10

const std::vector<std::string>& catalog_names();
// One of catalog_names(); throws Error otherwise.
SuperAlgebra catalog_algebra(std::string_view name, const ScalarDomain& dom);

}  // namespace kac
