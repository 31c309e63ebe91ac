#pragma once

// Dense exact linear algebra over a ScalarDomain.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kac/scalar.hpp"

namespace kac {

using Vector = std::vector<Scalar>;

Vector zero_vector(const ScalarDomain& dom, std::size_t n);
Vector unit_vector(const ScalarDomain& dom, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> x, std::span<const Scalar> y);
Vector sub(std::span<const Scalar> x, std::span<const Scalar> y);
Vector scale(const Scalar& s, std::span<const Scalar> x);
// y += s * x
void axpy(const Scalar& s, std::span<const Scalar> x, std::span<Scalar> y);
Vector embed(std::span<const Scalar> v, const ScalarDomain& target);
std::string to_string(std::span<const Scalar> v);

// Row-major dense matrix. A matrix acting on column vectors; column j of a
// linear map's matrix is the image of basis vector j.
class Matrix {
 public:
  Matrix(const ScalarDomain& dom, std::size_t rows, std::size_t cols);
  static Matrix identity(const ScalarDomain& dom, std::size_t n);
  static Matrix from_rows(const ScalarDomain& dom, std::size_t cols,
                          std::span<const Vector> rows);
  static Matrix from_columns(const ScalarDomain& dom, std::size_t rows,
                             std::span<const Vector> cols);

  const ScalarDomain& domain() const { return dom_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  Matrix operator*(const Matrix& o) const;
  Vector operator*(std::span<const Scalar> v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;
  Matrix embed(const ScalarDomain& target) const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

 private:
  ScalarDomain dom_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
// Canonical basis of {x : m x = 0}: one vector per free column f, with a 1
// at f and zeros at the other free columns.
std::vector<Vector> nullspace(Matrix m);
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(Matrix m);

// A linear subspace of D^n held as its reduced row echelon basis, so that
// equality of subspaces is equality of representations.
class Subspace {
 public:
  Subspace(const ScalarDomain& dom, std::size_t ambient);
  static Subspace span(const ScalarDomain& dom, std::size_t ambient,
                       std::span<const Vector> vectors);
  static Subspace full(const ScalarDomain& dom, std::size_t ambient);

  const ScalarDomain& domain() const { return dom_; }
  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  bool empty() const { return basis_.empty(); }
  const std::vector<Vector>& basis() const& { return basis_; }
  std::vector<Vector> basis() && { return std::move(basis_); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  // Adds v to the span; returns whether the dimension grew.
  bool insert(std::span<const Scalar> v);
  // v minus its projection along the pivot columns; zero iff v is inside.
  Vector reduce(std::span<const Scalar> v) const;
  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& o) const;
  // Coordinates of v (which must lie inside) in basis().
  Vector coordinates(std::span<const Scalar> v) const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  bool operator==(const Subspace& o) const;
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  ScalarDomain dom_;
  std::size_t n_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace kac
