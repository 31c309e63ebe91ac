#pragma once

// Finite-dimensional superalgebras given by dense structure constants
// e_i e_j = sum_k c[i][j][k] e_k over a ScalarDomain, and the generic
// predicates and constructions on them.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kac/error.hpp"
#include "kac/linalg.hpp"
#include "kac/scalar.hpp"

namespace kac {

struct Term {
  std::size_t index;
  Scalar coeff;
};

// Immutable value; copies share the underlying tables.
class SuperAlgebra {
 public:
  // constants has dim^3 entries, index (i*dim + j)*dim + k. Throws unless
  // parity coherence holds and a given unity really is a two-sided unity.
  SuperAlgebra(const ScalarDomain& dom, std::vector<int> parity,
               std::vector<Scalar> constants, std::optional<Vector> unity = {},
               std::vector<std::string> labels = {});

  const ScalarDomain& domain() const;
  std::size_t dim() const;
  int parity(std::size_t i) const;
  const std::vector<int>& parities() const;
  std::vector<std::size_t> indices_of_parity(int p) const;
  const Scalar& constant(std::size_t i, std::size_t j, std::size_t k) const;
  const std::vector<Scalar>& constants() const;
  // Nonzero terms of e_i e_j.
  std::span<const Term> product_terms(std::size_t i, std::size_t j) const;
  const std::optional<Vector>& unity() const;
  const std::vector<std::string>& labels() const;

  Vector basis(std::size_t i) const;
  Vector zero() const;
  Vector multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;
  // Matrix of x -> e_i x.
  Matrix left_multiplication(std::size_t i) const;
  Matrix left_multiplication(std::span<const Scalar> x) const;

  bool operator==(const SuperAlgebra& o) const;
  bool operator!=(const SuperAlgebra& o) const { return !(*this == o); }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

// Accumulates structure constants for a fixed basis.
class StructureBuilder {
 public:
  StructureBuilder(const ScalarDomain& dom, std::size_t dim);
  void add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
  void add(std::size_t i, std::size_t j, std::span<const Scalar> product);
  SuperAlgebra build(std::vector<int> parity, std::optional<Vector> unity = {},
                     std::vector<std::string> labels = {}) const;

 private:
  ScalarDomain dom_;
  std::size_t n_;
  std::vector<Scalar> c_;
};

// "a⊗a - 3/16*1" style rendering using the algebra's labels.
std::string format_vector(const SuperAlgebra& a, std::span<const Scalar> v);

// -1 for mixed vectors, parity otherwise (0 for the zero vector).
int homogeneous_parity(const SuperAlgebra& a, std::span<const Scalar> v);

Check is_supercommutative(const SuperAlgebra& a);

// Operator form of the super Jordan identity on all basis triples:
//   (-1)^{|x||z|}[L_xy, L_z] + (-1)^{|y||x|}[L_yz, L_x] + (-1)^{|z||y|}[L_zx, L_y] = 0
// with the super commutator [L_a, L_b] = L_a L_b - (-1)^{|a||b|} L_b L_a.
Check is_jordan_super(const SuperAlgebra& a);

// Classical linearized Jordan identity for a commutative algebra with all
// basis elements even:
//   ((xz)y)w + ((zw)y)x + ((wx)y)z = (xz)(yw) + (zw)(yx) + (wx)(yz).
Check is_jordan_classical(const SuperAlgebra& a);

// Smallest subspace containing the given vectors and stable under left and
// right multiplication by every basis element. Stops early once the whole
// space is reached.
Subspace ideal_closure(const SuperAlgebra& a, std::span<const Vector> seeds);
Check is_ideal(const SuperAlgebra& a, const Subspace& s);
// Whether s = (s ∩ A_0) + (s ∩ A_1).
bool is_graded(const SuperAlgebra& a, const Subspace& s);
Subspace parity_subspace(const SuperAlgebra& a, int p);
// span{xy : x in s, y in t}
Subspace product_span(const SuperAlgebra& a, const Subspace& s, const Subspace& t);

struct SimplicityOptions {
  // Prime used for the reduction certificate over Q.
  std::int64_t modulus = 5;
  // Cap on the number of projective points examined.
  std::uint64_t budget = 5'000'000;
};

struct SimplicityResult {
  enum class Verdict { Simple, NotSimple, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  std::string certificate;
  std::optional<Subspace> proper_ideal;  // witness for NotSimple
  std::uint64_t points_checked = 0;

  bool simple() const { return verdict == Verdict::Simple; }
};

// Graded simplicity. Over a finite domain every nonzero graded ideal
// contains a nonzero homogeneous vector, so the search runs over projective
// points of A_0 and of A_1. Over Q the algebra is reduced modulo
// options.modulus; simplicity of the reduction certifies simplicity over Q.
SimplicityResult is_simple(const SuperAlgebra& a, const SimplicityOptions& options = {});

SuperAlgebra direct_product(const SuperAlgebra& a, const SuperAlgebra& b);
SuperAlgebra scalar_extension(const SuperAlgebra& a, const ScalarDomain& target);
// Over base(w): basis e_0..e_{n-1}, w e_0..w e_{n-1}.
SuperAlgebra restrict_scalars(const SuperAlgebra& a);
// Reduction of an algebra over Q modulo p; throws if p divides a denominator.
SuperAlgebra reduce_mod_p(const SuperAlgebra& a, std::int64_t p);
SuperAlgebra even_part(const SuperAlgebra& a);
// Subalgebra spanned by a subset of the basis. Throws if not closed.
SuperAlgebra basis_subalgebra(const SuperAlgebra& a, std::span<const std::size_t> indices);
// Structure constants of the subalgebra with the given (homogeneous,
// independent) basis. Throws if the span is not closed under products.
SuperAlgebra induced_algebra(const SuperAlgebra& a, std::span<const Vector> basis,
                             std::vector<std::string> labels = {});

// Number of x with x*x = x in A (or in A_0 when restrict_even). Finite
// domains only.
std::uint64_t idempotent_census(const SuperAlgebra& a, bool restrict_even,
                                std::uint64_t budget = 50'000'000);

}  // namespace kac
