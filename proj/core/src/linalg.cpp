#include "kac/linalg.hpp"

#include <algorithm>

#include "kac/error.hpp"

namespace kac {

Vector zero_vector(const ScalarDomain& dom, std::size_t n) {
  return Vector(n, Scalar(dom));
}

Vector unit_vector(const ScalarDomain& dom, std::size_t n, std::size_t i) {
  Vector v = zero_vector(dom, n);
  v.at(i) = Scalar(dom, 1);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {
void require_same_length(std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != y.size()) throw Error("vector length mismatch");
}
}  // namespace

Vector add(std::span<const Scalar> x, std::span<const Scalar> y) {
  require_same_length(x, y);
  Vector r(x.begin(), x.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

Vector sub(std::span<const Scalar> x, std::span<const Scalar> y) {
  require_same_length(x, y);
  Vector r(x.begin(), x.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

Vector scale(const Scalar& s, std::span<const Scalar> x) {
  Vector r;
  r.reserve(x.size());
  for (const auto& c : x) r.push_back(s * c);
  return r;
}

void axpy(const Scalar& s, std::span<const Scalar> x, std::span<Scalar> y) {
  require_same_length(x, y);
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += s * x[i];
  }
}

Vector embed(std::span<const Scalar> v, const ScalarDomain& target) {
  Vector r;
  r.reserve(v.size());
  for (const auto& c : v) r.push_back(c.embed(target));
  return r;
}

std::string to_string(std::span<const Scalar> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + "]";
}

// ----------------------------------------------------------------- Matrix --

Matrix::Matrix(const ScalarDomain& dom, std::size_t rows, std::size_t cols)
    : dom_(dom), rows_(rows), cols_(cols), a_(rows * cols, Scalar(dom)) {}

Matrix Matrix::identity(const ScalarDomain& dom, std::size_t n) {
  Matrix m(dom, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(dom, 1);
  return m;
}

Matrix Matrix::from_rows(const ScalarDomain& dom, std::size_t cols,
                         std::span<const Vector> rows) {
  Matrix m(dom, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const ScalarDomain& dom, std::size_t rows,
                            std::span<const Vector> cols) {
  Matrix m(dom, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error("ragged matrix columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix shape mismatch in product");
  if (dom_ != o.dom_) throw Error("matrix domain mismatch");
  Matrix r(dom_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  }
  return r;
}

Vector Matrix::operator*(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw Error("matrix-vector shape mismatch");
  Vector r = zero_vector(dom_, rows_);
  for (std::size_t k = 0; k < cols_; ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, k);
      if (!a.is_zero()) r[i] += a * v[k];
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.a_) x *= s;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(dom_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

Matrix Matrix::embed(const ScalarDomain& target) const {
  Matrix r(target, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].embed(target);
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::operator==(const Matrix& o) const {
  return dom_ == o.dom_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

// -------------------------------------------------------- row reduction --

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pr = r;
    while (pr < m.rows() && m(pr, c).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    if (pr != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(r, j));
    }
    Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::vector<Vector> nullspace(Matrix m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(m.domain(), m.cols());
    v[f] = Scalar(m.domain(), 1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw Error("solve: shape mismatch");
  Matrix aug(m.domain(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.domain(), m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.domain(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(m.domain(), 1);
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.domain(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  }
  return inv;
}

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Scalar det(m.domain(), 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = c;
    while (pr < n && m(pr, c).is_zero()) ++pr;
    if (pr == n) return Scalar(m.domain());
    if (pr != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pr, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Scalar inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

// --------------------------------------------------------------- Subspace --

Subspace::Subspace(const ScalarDomain& dom, std::size_t ambient)
    : dom_(dom), n_(ambient) {}

Subspace Subspace::span(const ScalarDomain& dom, std::size_t ambient,
                        std::span<const Vector> vectors) {
  Subspace s(dom, ambient);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

Subspace Subspace::full(const ScalarDomain& dom, std::size_t ambient) {
  Subspace s(dom, ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    s.basis_.push_back(unit_vector(dom, ambient, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != n_) throw Error("subspace: vector length mismatch");
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (!c.is_zero()) axpy(-c, basis_[i], r);
  }
  return r;
}

bool Subspace::insert(std::span<const Scalar> v) {
  Vector r = reduce(v);
  auto lead = std::find_if(r.begin(), r.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (lead == r.end()) return false;
  const auto c = static_cast<std::size_t>(lead - r.begin());
  r = scale(lead->inverse(), r);
  for (auto& row : basis_) {
    const Scalar f = row[c];
    if (!f.is_zero()) axpy(-f, r, row);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), c);
  auto idx = pos - pivots_.begin();
  pivots_.insert(pos, c);
  basis_.insert(basis_.begin() + idx, std::move(r));
  return true;
}

bool Subspace::contains(std::span<const Scalar> v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  return std::all_of(o.basis_.begin(), o.basis_.end(),
                     [&](const Vector& b) { return contains(b); });
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
  if (!contains(v)) throw Error("coordinates of a vector outside the subspace");
  Vector c;
  c.reserve(basis_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

Subspace Subspace::operator+(const Subspace& o) const {
  Subspace s = *this;
  for (const auto& b : o.basis_) s.insert(b);
  return s;
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (n_ != o.n_) throw Error("subspace ambient mismatch");
  Subspace out(dom_, n_);
  if (empty() || o.empty()) return out;
  std::vector<Vector> cols = basis_;
  for (const auto& b : o.basis_) cols.push_back(scale(Scalar(dom_, -1), b));
  Matrix m = Matrix::from_columns(dom_, n_, cols);
  for (const auto& x : nullspace(m)) {
    Vector v = zero_vector(dom_, n_);
    for (std::size_t i = 0; i < basis_.size(); ++i) axpy(x[i], basis_[i], v);
    out.insert(v);
  }
  return out;
}

bool Subspace::operator==(const Subspace& o) const {
  return dom_ == o.dom_ && n_ == o.n_ && basis_ == o.basis_;
}

}  // namespace kac
