#include "kac/morphisms.hpp"

#include "kac/catalog.hpp"

namespace kac {

namespace {

int parity_bit(MapParity p) { return p == MapParity::Odd ? 1 : 0; }

// 3x3 matrix on (e, u, v) acting as c on e and as w on span(u, v).
Matrix extend_to_three(const Matrix& w, const Scalar& c) {
  Matrix m(w.domain(), 3, 3);
  m(0, 0) = c;
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t s = 0; s < 2; ++s) m(r + 1, s + 1) = w(r, s);
  }
  return m;
}

void require_k10(const SuperAlgebra& a) {
  if (a != kac_k10(a.domain())) throw Error("expected the catalog K10");
}

void require_product(const SuperAlgebra& a) {
  if (a != k3xk3(a.domain()) && a != jwxjw(a.domain())) {
    throw Error("expected the catalog k3xk3 or jwxjw");
  }
}

// Matrix of x⊗y -> F(x)⊗y + x⊗G(y) (derivation) or F(x)⊗G(y) (group
// action) on the tensor block of K10. The unity row and column are left zero.
Matrix tensor_action(const Matrix& f3, const Matrix& g3, bool leibniz) {
  const ScalarDomain dom = f3.domain();
  Matrix m(dom, 10, 10);
  const Matrix id = Matrix::identity(dom, 3);
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) {
      const std::size_t col = k10::tensor_index(x, y);
      for (std::size_t x2 = 0; x2 < 3; ++x2) {
        for (std::size_t y2 = 0; y2 < 3; ++y2) {
          Scalar c = leibniz ? f3(x2, x) * id(y2, y) + id(x2, x) * g3(y2, y)
                             : f3(x2, x) * g3(y2, y);
          if (!c.is_zero()) m(k10::tensor_index(x2, y2), col) += c;
        }
      }
    }
  }
  return m;
}

Matrix block(const Matrix& m, std::size_t r0, std::size_t c0) {
  Matrix b(m.domain(), 2, 2);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) b(r, c) = m(r0 + r, c0 + c);
  }
  return b;
}

}  // namespace

// ---------------------------------------------------------------- LinearMap --

LinearMap::LinearMap(SuperAlgebra source, SuperAlgebra target, Matrix matrix,
                     MapParity parity)
    : source_(std::move(source)), target_(std::move(target)), m_(std::move(matrix)),
      parity_(parity) {
  if (m_.rows() != target_.dim() || m_.cols() != source_.dim()) {
    throw Error("linear map matrix has shape " + std::to_string(m_.rows()) + "x" +
                std::to_string(m_.cols()) + ", expected " + std::to_string(target_.dim()) +
                "x" + std::to_string(source_.dim()));
  }
  if (m_.domain() != source_.domain() || source_.domain() != target_.domain()) {
    throw Error("linear map domain mismatch");
  }
  const int p = parity_bit(parity_);
  for (std::size_t r = 0; r < m_.rows(); ++r) {
    for (std::size_t c = 0; c < m_.cols(); ++c) {
      if (!m_(r, c).is_zero() && target_.parity(r) != ((source_.parity(c) + p) & 1)) {
        throw Error("matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                    ") violates the declared parity");
      }
    }
  }
}

LinearMap LinearMap::identity(const SuperAlgebra& a) {
  return LinearMap(a, a, Matrix::identity(a.domain(), a.dim()));
}

LinearMap LinearMap::operator*(const LinearMap& o) const {
  if (o.target_.dim() != source_.dim()) throw Error("composition dimension mismatch");
  MapParity p = ((parity_bit(parity_) + parity_bit(o.parity_)) & 1) ? MapParity::Odd
                                                                     : MapParity::Even;
  return LinearMap(o.source_, target_, m_ * o.m_, p);
}

LinearMap LinearMap::inverse() const {
  auto inv = kac::inverse(m_);
  if (!inv) throw Error("linear map is not invertible");
  return LinearMap(target_, source_, *inv, parity_);
}

bool LinearMap::operator==(const LinearMap& o) const {
  return parity_ == o.parity_ && m_ == o.m_;
}

// ------------------------------------------------------------------ checks --

Check is_morphism(const LinearMap& m) {
  if (m.parity() != MapParity::Even) return Check::fail("a morphism must be even");
  const SuperAlgebra& a = m.source();
  const SuperAlgebra& b = m.target();
  const std::size_t n = a.dim();
  std::vector<Vector> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = m.matrix().column(i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector lhs = m(a.multiply(a.basis(i), a.basis(j)));
      Vector rhs = b.multiply(img[i], img[j]);
      if (lhs != rhs) {
        return Check::fail("M(" + a.labels()[i] + " * " + a.labels()[j] + ") = " +
                           format_vector(b, lhs) + " but M(" + a.labels()[i] + ") * M(" +
                           a.labels()[j] + ") = " + format_vector(b, rhs));
      }
    }
  }
  if (a.unity() && b.unity() && m(*a.unity()) != *b.unity()) {
    return Check::fail("unity is not mapped to unity");
  }
  return Check::pass();
}

Check is_isomorphism(const LinearMap& m) {
  if (m.source().dim() != m.target().dim()) return Check::fail("dimensions differ");
  if (auto c = is_morphism(m); !c) return c;
  if (!kac::inverse(m.matrix())) return Check::fail("map is not invertible");
  return Check::pass();
}

Check is_automorphism(const LinearMap& m) {
  if (m.source() != m.target()) return Check::fail("source and target differ");
  return is_isomorphism(m);
}

// --------------------------------------------------------------------- SL2 --

SL2Element::SL2Element(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != 2 || m_.cols() != 2) throw Error("SL2 element must be 2x2");
  if (!determinant(m_).is_one()) {
    throw Error("determinant is " + determinant(m_).to_string() + ", expected 1");
  }
}

SL2Element::SL2Element(const ScalarDomain& dom, const Scalar& a, const Scalar& b,
                       const Scalar& c, const Scalar& d)
    : SL2Element([&] {
        Matrix m(dom, 2, 2);
        m(0, 0) = a, m(0, 1) = b, m(1, 0) = c, m(1, 1) = d;
        return m;
      }()) {}

SL2Element SL2Element::identity(const ScalarDomain& dom) {
  return SL2Element(Matrix::identity(dom, 2));
}

SL2Element SL2Element::symplectic_j(const ScalarDomain& dom) {
  return SL2Element(dom, Scalar(dom), Scalar(dom, -1), Scalar(dom, 1), Scalar(dom));
}

SL2Element SL2Element::operator*(const SL2Element& o) const { return SL2Element(m_ * o.m_); }

SL2Element SL2Element::inverse() const {
  const Scalar zero(m_.domain());
  return SL2Element(m_.domain(), m_(1, 1), zero - m_(0, 1), zero - m_(1, 0), m_(0, 0));
}

SL2Element SL2Element::pow(unsigned k) const {
  SL2Element r = identity(m_.domain());
  for (unsigned i = 0; i < k; ++i) r = r * *this;
  return r;
}

SL2Element random_sl2(const ScalarDomain& dom, std::mt19937_64& rng) {
  const Scalar one(dom, 1), zero(dom);
  SL2Element upper(dom, one, random_scalar(dom, rng), zero, one);
  SL2Element lower(dom, one, zero, random_scalar(dom, rng), one);
  SL2Element upper2(dom, one, random_scalar(dom, rng), zero, one);
  Scalar t = random_nonzero(dom, rng);
  SL2Element diag(dom, t, zero, zero, t.inverse());
  return upper * lower * upper2 * diag;
}

std::vector<SL2Element> enumerate_sl2(const ScalarDomain& dom) {
  if (!dom.is_finite() || dom.is_quadratic()) throw Error("enumerate_sl2 needs a prime field");
  const auto el = elements(dom);
  std::vector<SL2Element> out;
  for (const auto& a : el) {
    for (const auto& b : el) {
      for (const auto& c : el) {
        if (a.is_zero()) {
          if (b * c != Scalar(dom, -1)) continue;
          for (const auto& d : el) out.emplace_back(dom, a, b, c, d);
        } else {
          out.emplace_back(dom, a, b, c, (Scalar(dom, 1) + b * c) / a);
        }
      }
    }
  }
  return out;
}

// ------------------------------------------------------------ Φ, τ and Ψ --

LinearMap phi_auto(const SuperAlgebra& k10a, const SL2Element& f, const SL2Element& g) {
  require_k10(k10a);
  const ScalarDomain& dom = k10a.domain();
  Matrix m = tensor_action(extend_to_three(f.matrix(), Scalar(dom, 1)),
                           extend_to_three(g.matrix(), Scalar(dom, 1)), false);
  m(0, 0) = Scalar(dom, 1);
  return LinearMap(k10a, k10a, std::move(m));
}

LinearMap tau_auto(const SuperAlgebra& k10a) {
  require_k10(k10a);
  const ScalarDomain& dom = k10a.domain();
  const SuperAlgebra k3 = kaplansky_k3(dom);
  Matrix m(dom, 10, 10);
  m(0, 0) = Scalar(dom, 1);
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) {
      int sign = (k3.parity(x) & k3.parity(y)) ? -1 : 1;
      m(k10::tensor_index(y, x), k10::tensor_index(x, y)) = Scalar(dom, sign);
    }
  }
  return LinearMap(k10a, k10a, std::move(m));
}

LinearMap psi_auto(const SuperAlgebra& product, const SL2Element& f, const SL2Element& g,
                   bool swap) {
  require_product(product);
  const ScalarDomain& dom = product.domain();
  const Scalar one(dom, 1);
  Matrix f3 = extend_to_three(f.matrix(), one), g3 = extend_to_three(g.matrix(), one);
  Matrix m(dom, 6, 6);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      m(r, c) = f3(r, c);
      m(r + 3, c + 3) = g3(r, c);
    }
  }
  if (swap) {
    Matrix s(dom, 6, 6);
    for (std::size_t i = 0; i < 3; ++i) {
      s(i + 3, i) = one;
      s(i, i + 3) = one;
    }
    m = m * s;
  }
  return LinearMap(product, product, std::move(m));
}

Decomposition decompose_automorphism(const LinearMap& m) {
  const SuperAlgebra& a = m.source();
  require_k10(a);
  if (m.target() != a) throw Error("decompose_automorphism needs an endomorphism");
  const Matrix& x = m.matrix();
  auto zero_block = [&](std::size_t r0, std::size_t c0) {
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) {
        if (!x(r0 + r, c0 + c).is_zero()) return false;
      }
    }
    return true;
  };
  bool keeps = zero_block(k10::au, k10::ua) && zero_block(k10::ua, k10::au);
  bool swaps = zero_block(k10::ua, k10::ua) && zero_block(k10::au, k10::au);
  if (keeps == swaps) {
    throw Falsification("automorphism neither preserves nor exchanges W⊗a and a⊗W");
  }
  LinearMap core = swaps ? m * tau_auto(a) : m;
  std::optional<SL2Element> f, g;
  try {
    f.emplace(block(core.matrix(), k10::ua, k10::ua));
    g.emplace(block(core.matrix(), k10::au, k10::au));
  } catch (const Error& e) {
    throw Falsification(std::string("odd block is not in SL2: ") + e.what());
  }
  LinearMap rebuilt = phi_auto(a, *f, *g);
  if (swaps) rebuilt = rebuilt * tau_auto(a);
  if (rebuilt != m) throw Falsification("reconstruction from (f, g, swap) differs from the map");
  return {*f, *g, swaps};
}

// -------------------------------------------------------------- derivations --

std::vector<LinearMap> derivations(const SuperAlgebra& a, MapParity parity) {
  const std::size_t n = a.dim();
  const int p = parity_bit(parity);
  const ScalarDomain& dom = a.domain();
  // variable numbering for the admissible entries D(r, k)
  std::vector<long> var(n * n, -1);
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a.parity(r) == ((a.parity(k) + p) & 1)) {
        var[r * n + k] = static_cast<long>(entries.size());
        entries.emplace_back(r, k);
      }
    }
  }
  const std::size_t nv = entries.size();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar sign(dom, (p & a.parity(i)) ? -1 : 1);
    for (std::size_t j = 0; j < n; ++j) {
      // row r collects the e_r coefficient of D(e_i e_j) - D(e_i)e_j - s e_i D(e_j)
      std::vector<Vector> block(n, zero_vector(dom, nv));
      auto put = [&](std::size_t row, std::size_t r, std::size_t k, const Scalar& c) {
        long v = var[r * n + k];
        if (v >= 0) block[row][static_cast<std::size_t>(v)] += c;
      };
      for (const auto& t : a.product_terms(i, j)) {
        for (std::size_t r = 0; r < n; ++r) put(r, r, t.index, t.coeff);
      }
      for (std::size_t m = 0; m < n; ++m) {
        for (const auto& t : a.product_terms(m, j)) put(t.index, m, i, -t.coeff);
        for (const auto& t : a.product_terms(i, m)) put(t.index, m, j, -(sign * t.coeff));
      }
      for (auto& row : block) {
        if (!is_zero(row)) rows.push_back(std::move(row));
      }
    }
  }
  std::vector<LinearMap> out;
  std::vector<Vector> sol;
  if (rows.empty()) {
    for (std::size_t v = 0; v < nv; ++v) sol.push_back(unit_vector(dom, nv, v));
  } else {
    sol = nullspace(Matrix::from_rows(dom, nv, rows));
  }
  for (const auto& s : sol) {
    Matrix d(dom, n, n);
    for (std::size_t v = 0; v < nv; ++v) d(entries[v].first, entries[v].second) = s[v];
    out.emplace_back(a, a, std::move(d), parity);
  }
  return out;
}

Check is_derivation(const LinearMap& d) {
  const SuperAlgebra& a = d.source();
  if (d.target() != a) return Check::fail("a derivation maps A to itself");
  const int p = parity_bit(d.parity());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Scalar sign(a.domain(), (p & a.parity(i)) ? -1 : 1);
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vector ei = a.basis(i), ej = a.basis(j);
      Vector lhs = d(a.multiply(ei, ej));
      Vector rhs = add(a.multiply(d(ei), ej), scale(sign, a.multiply(ei, d(ej))));
      if (lhs != rhs) {
        return Check::fail("Leibniz rule fails on (" + a.labels()[i] + ", " + a.labels()[j] +
                           ")");
      }
    }
  }
  return Check::pass();
}

LinearMap dphi(const SuperAlgebra& k10a, const Matrix& x, const Matrix& y) {
  require_k10(k10a);
  const ScalarDomain& dom = k10a.domain();
  for (const Matrix* m : {&x, &y}) {
    if (m->rows() != 2 || m->cols() != 2) throw Error("dphi takes 2x2 matrices");
    if (!((*m)(0, 0) + (*m)(1, 1)).is_zero()) throw Error("dphi needs traceless matrices");
  }
  Matrix m = tensor_action(extend_to_three(x, Scalar(dom)), extend_to_three(y, Scalar(dom)),
                           true);
  return LinearMap(k10a, k10a, std::move(m));
}

LinearMap supercommutator(const LinearMap& d, const LinearMap& e) {
  const int pd = parity_bit(d.parity()), pe = parity_bit(e.parity());
  Matrix de = d.matrix() * e.matrix(), ed = e.matrix() * d.matrix();
  Matrix m = (pd & pe) ? de + ed : de - ed;
  return LinearMap(d.source(), d.target(), std::move(m),
                   ((pd + pe) & 1) ? MapParity::Odd : MapParity::Even);
}

}  // namespace kac
