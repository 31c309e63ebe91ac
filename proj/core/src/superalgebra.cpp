#include "kac/superalgebra.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace kac {

struct SuperAlgebra::Data {
  ScalarDomain dom;
  std::size_t n = 0;
  std::vector<int> parity;
  std::vector<Scalar> c;
  std::vector<std::vector<Term>> terms;  // n*n lists
  std::optional<Vector> unity;
  std::vector<std::string> labels;
};

namespace {

int sign_exponent(int a, int b) { return (a * b) & 1; }

Scalar signed_one(const ScalarDomain& dom, int exponent) {
  return Scalar(dom, (exponent & 1) ? -1 : 1);
}

}  // namespace

SuperAlgebra::SuperAlgebra(const ScalarDomain& dom, std::vector<int> parity,
                           std::vector<Scalar> constants, std::optional<Vector> unity,
                           std::vector<std::string> labels) {
  auto d = std::make_shared<Data>(Data{dom, parity.size(), std::move(parity),
                                       std::move(constants), {}, std::move(unity),
                                       std::move(labels)});
  const std::size_t n = d->n;
  if (d->c.size() != n * n * n) throw Error("structure tensor has the wrong size");
  for (int p : d->parity) {
    if (p != 0 && p != 1) throw Error("parities must be 0 or 1");
  }
  if (d->labels.empty()) {
    for (std::size_t i = 0; i < n; ++i) d->labels.push_back("e" + std::to_string(i));
  }
  if (d->labels.size() != n) throw Error("label count does not match dimension");
  d->terms.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = d->c[(i * n + j) * n + k];
        if (c.domain() != dom) throw Error("structure constant outside the domain");
        if (c.is_zero()) continue;
        if (d->parity[k] != ((d->parity[i] + d->parity[j]) & 1)) {
          throw Error("parity coherence fails at (" + std::to_string(i) + "," +
                      std::to_string(j) + "," + std::to_string(k) + ")");
        }
        d->terms[i * n + j].push_back({k, c});
      }
    }
  }
  d_ = std::move(d);
  if (d_->unity) {
    const Vector& u = *d_->unity;
    if (u.size() != n) throw Error("unity has the wrong length");
    for (std::size_t i = 0; i < n; ++i) {
      Vector e = basis(i);
      if (multiply(u, e) != e || multiply(e, u) != e) {
        throw Error("declared unity fails on basis element " + d_->labels[i]);
      }
    }
  }
}

const ScalarDomain& SuperAlgebra::domain() const { return d_->dom; }
std::size_t SuperAlgebra::dim() const { return d_->n; }
int SuperAlgebra::parity(std::size_t i) const { return d_->parity.at(i); }
const std::vector<int>& SuperAlgebra::parities() const { return d_->parity; }

std::vector<std::size_t> SuperAlgebra::indices_of_parity(int p) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d_->n; ++i) {
    if (d_->parity[i] == p) out.push_back(i);
  }
  return out;
}

const Scalar& SuperAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  return d_->c[(i * d_->n + j) * d_->n + k];
}

const std::vector<Scalar>& SuperAlgebra::constants() const { return d_->c; }

std::span<const Term> SuperAlgebra::product_terms(std::size_t i, std::size_t j) const {
  return d_->terms[i * d_->n + j];
}

const std::optional<Vector>& SuperAlgebra::unity() const { return d_->unity; }
const std::vector<std::string>& SuperAlgebra::labels() const { return d_->labels; }

Vector SuperAlgebra::basis(std::size_t i) const { return unit_vector(d_->dom, d_->n, i); }
Vector SuperAlgebra::zero() const { return zero_vector(d_->dom, d_->n); }

Vector SuperAlgebra::multiply(std::span<const Scalar> x, std::span<const Scalar> y) const {
  const std::size_t n = d_->n;
  if (x.size() != n || y.size() != n) throw Error("multiply: vector length mismatch");
  Vector r = zero();
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    if (x[i].domain() != d_->dom) throw Error("multiply: domain mismatch");
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const auto& ts = d_->terms[i * n + j];
      if (ts.empty()) continue;
      Scalar xy = x[i] * y[j];
      for (const auto& t : ts) r[t.index] += xy * t.coeff;
    }
  }
  return r;
}

Matrix SuperAlgebra::left_multiplication(std::size_t i) const {
  const std::size_t n = d_->n;
  Matrix m(d_->dom, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& t : d_->terms[i * n + j]) m(t.index, j) += t.coeff;
  }
  return m;
}

Matrix SuperAlgebra::left_multiplication(std::span<const Scalar> x) const {
  const std::size_t n = d_->n;
  Matrix m(d_->dom, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : d_->terms[i * n + j]) m(t.index, j) += x[i] * t.coeff;
    }
  }
  return m;
}

bool SuperAlgebra::operator==(const SuperAlgebra& o) const {
  if (d_ == o.d_) return true;
  return d_->dom == o.d_->dom && d_->parity == o.d_->parity && d_->c == o.d_->c &&
         d_->unity == o.d_->unity;
}

// ---------------------------------------------------------------- builder --

StructureBuilder::StructureBuilder(const ScalarDomain& dom, std::size_t dim)
    : dom_(dom), n_(dim), c_(dim * dim * dim, Scalar(dom)) {}

void StructureBuilder::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  c_.at((i * n_ + j) * n_ + k) += c;
}

void StructureBuilder::add(std::size_t i, std::size_t j, std::span<const Scalar> product) {
  for (std::size_t k = 0; k < n_; ++k) {
    if (!product[k].is_zero()) add(i, j, k, product[k]);
  }
}

SuperAlgebra StructureBuilder::build(std::vector<int> parity, std::optional<Vector> unity,
                                     std::vector<std::string> labels) const {
  if (parity.size() != n_) throw Error("parity vector has the wrong length");
  return SuperAlgebra(dom_, std::move(parity), c_, std::move(unity), std::move(labels));
}

// ------------------------------------------------------------- formatting --

std::string format_vector(const SuperAlgebra& a, std::span<const Scalar> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string coeff = v[i].to_string();
    bool negative = coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    bool compound = coeff.find_first_of("+-") != std::string::npos;
    if (compound) coeff = "(" + coeff + ")";
    std::string term = coeff == "1" ? a.labels()[i] : coeff + "*" + a.labels()[i];
    if (out.empty()) {
      out = (negative ? "-" : "") + term;
    } else {
      out += (negative ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

int homogeneous_parity(const SuperAlgebra& a, std::span<const Scalar> v) {
  int p = -2;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (p == -2) {
      p = a.parity(i);
    } else if (p != a.parity(i)) {
      return -1;
    }
  }
  return p == -2 ? 0 : p;
}

// ------------------------------------------------------------- predicates --

Check is_supercommutative(const SuperAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Scalar s = signed_one(a.domain(), sign_exponent(a.parity(i), a.parity(j)));
      for (std::size_t k = 0; k < n; ++k) {
        if (a.constant(i, j, k) != s * a.constant(j, i, k)) {
          return Check::fail("e_i e_j != ±e_j e_i for (i, j) = (" + a.labels()[i] + ", " +
                             a.labels()[j] + ")");
        }
      }
    }
  }
  return Check::pass();
}

Check is_jordan_super(const SuperAlgebra& a) {
  if (auto c = is_supercommutative(a); !c) {
    return Check::fail("not supercommutative: " + c.detail);
  }
  const std::size_t n = a.dim();
  const ScalarDomain& dom = a.domain();
  std::vector<Matrix> left;
  left.reserve(n);
  for (std::size_t i = 0; i < n; ++i) left.push_back(a.left_multiplication(i));
  // L of e_i e_j
  std::vector<Matrix> left_product;
  left_product.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix m(dom, n, n);
      for (const auto& t : a.product_terms(i, j)) m = m + left[t.index].scaled(t.coeff);
      left_product.push_back(std::move(m));
    }
  }
  auto supercommutator = [&](const Matrix& x, int px, const Matrix& y, int py) {
    Matrix xy = x * y;
    Matrix yx = y * x;
    return sign_exponent(px, py) ? xy + yx : xy - yx;
  };
  // [L_{e_x e_y}, L_{e_z}] for every (x, y, z)
  std::vector<Matrix> bracket;
  bracket.reserve(n * n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        bracket.push_back(supercommutator(left_product[x * n + y], a.parity(x) + a.parity(y),
                                          left[z], a.parity(z)));
      }
    }
  }
  auto combination = [&](std::size_t x, std::size_t y, std::size_t z) {
    const int px = a.parity(x), py = a.parity(y), pz = a.parity(z);
    return std::array<std::pair<const Matrix*, bool>, 3>{
        std::pair{&bracket[(x * n + y) * n + z], sign_exponent(px, pz) != 0},
        std::pair{&bracket[(y * n + z) * n + x], sign_exponent(py, px) != 0},
        std::pair{&bracket[(z * n + x) * n + y], sign_exponent(pz, py) != 0}};
  };
  Scalar acc(dom);
  auto vanishes = [&](std::size_t x, std::size_t y, std::size_t z) {
    const auto terms = combination(x, y, z);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (std::all_of(terms.begin(), terms.end(),
                        [&](const auto& t) { return (*t.first)(r, c).is_zero(); })) {
          continue;
        }
        acc = Scalar(dom);
        for (const auto& [m, negate] : terms) {
          if (negate) acc -= (*m)(r, c);
          else acc += (*m)(r, c);
        }
        if (!acc.is_zero()) return false;
      }
    }
    return true;
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (vanishes(x, y, z)) continue;
        Matrix total(dom, n, n);
        for (const auto& [m, negate] : combination(x, y, z)) total = negate ? total - *m : total + *m;
        std::string residual;
        for (std::size_t c = 0; c < n; ++c) {
          Vector col = total.column(c);
          if (is_zero(col)) continue;
          residual += " " + a.labels()[c] + " -> " + format_vector(a, col) + ";";
        }
        return Check::fail("super Jordan identity fails at (" + a.labels()[x] + ", " +
                           a.labels()[y] + ", " + a.labels()[z] + "), residual:" + residual);
      }
    }
  }
  return Check::pass();
}

Check is_jordan_classical(const SuperAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.parity(i) != 0) return Check::fail("classical check needs an all-even algebra");
  }
  if (auto c = is_supercommutative(a); !c) return Check::fail("not commutative: " + c.detail);
  std::vector<Vector> prod(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = a.multiply(a.basis(i), a.basis(j));
  }
  auto p = [&](std::size_t i, std::size_t j) -> const Vector& { return prod[i * n + j]; };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t w = 0; w < n; ++w) {
          const Vector ey = a.basis(y), ew = a.basis(w), ex = a.basis(x), ez = a.basis(z);
          Vector lhs = a.multiply(a.multiply(p(x, z), ey), ew);
          lhs = add(lhs, a.multiply(a.multiply(p(z, w), ey), ex));
          lhs = add(lhs, a.multiply(a.multiply(p(w, x), ey), ez));
          Vector rhs = a.multiply(p(x, z), p(y, w));
          rhs = add(rhs, a.multiply(p(z, w), p(y, x)));
          rhs = add(rhs, a.multiply(p(w, x), p(y, z)));
          if (lhs != rhs) {
            return Check::fail("linearized Jordan identity fails at (" + a.labels()[x] + ", " +
                               a.labels()[y] + ", " + a.labels()[z] + ", " + a.labels()[w] +
                               ")");
          }
        }
      }
    }
  }
  return Check::pass();
}

// ----------------------------------------------------------------- ideals --

namespace {

// e_i v and v e_i for all i, pushed into s; newly independent vectors are
// appended to the queue.
Subspace close_under_products(const SuperAlgebra& a, Subspace s, std::vector<Vector> queue,
                              bool stop_when_full) {
  const std::size_t n = a.dim();
  for (std::size_t q = 0; q < queue.size(); ++q) {
    if (stop_when_full && s.dim() == n) break;
    const Vector v = queue[q];
    for (std::size_t i = 0; i < n; ++i) {
      Vector e = a.basis(i);
      for (Vector w : {a.multiply(e, v), a.multiply(v, e)}) {
        if (is_zero(w)) continue;
        if (s.insert(w)) queue.push_back(std::move(w));
      }
    }
  }
  return s;
}

}  // namespace

Subspace ideal_closure(const SuperAlgebra& a, std::span<const Vector> seeds) {
  Subspace s(a.domain(), a.dim());
  std::vector<Vector> queue;
  for (const auto& v : seeds) {
    if (s.insert(v)) queue.push_back(v);
  }
  return close_under_products(a, std::move(s), std::move(queue), true);
}

Check is_ideal(const SuperAlgebra& a, const Subspace& s) {
  for (const auto& b : s.basis()) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vector e = a.basis(i);
      if (!s.contains(a.multiply(e, b)) || !s.contains(a.multiply(b, e))) {
        return Check::fail("product with " + a.labels()[i] + " leaves the subspace");
      }
    }
  }
  return Check::pass();
}

Subspace parity_subspace(const SuperAlgebra& a, int p) {
  std::vector<Vector> vs;
  for (auto i : a.indices_of_parity(p)) vs.push_back(a.basis(i));
  return Subspace::span(a.domain(), a.dim(), vs);
}

bool is_graded(const SuperAlgebra& a, const Subspace& s) {
  for (const auto& b : s.basis()) {
    Vector even = b;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (a.parity(i) != 0) even[i] = Scalar(a.domain());
    }
    if (!s.contains(even)) return false;
  }
  return true;
}

Subspace product_span(const SuperAlgebra& a, const Subspace& s, const Subspace& t) {
  Subspace out(a.domain(), a.dim());
  for (const auto& x : s.basis()) {
    for (const auto& y : t.basis()) out.insert(a.multiply(x, y));
  }
  return out;
}

// ------------------------------------------------------------- simplicity --

namespace {

// Calls visit(v) for one representative of every projective point of the
// span of the given coordinates (first nonzero coordinate equal to 1), until
// visit returns false.
void for_each_projective_point(const SuperAlgebra& a, std::span<const std::size_t> coords,
                               const std::function<bool(const Vector&)>& visit) {
  const auto elems = elements(a.domain());
  const std::size_t q = elems.size();
  const std::size_t m = coords.size();
  for (std::size_t lead = 0; lead < m; ++lead) {
    std::vector<std::size_t> digits(m - lead - 1, 0);
    for (;;) {
      Vector v = a.zero();
      v[coords[lead]] = Scalar(a.domain(), 1);
      for (std::size_t t = 0; t < digits.size(); ++t) v[coords[lead + 1 + t]] = elems[digits[t]];
      if (!visit(v)) return;
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
  }
}

}  // namespace

SimplicityResult is_simple(const SuperAlgebra& a, const SimplicityOptions& options) {
  SimplicityResult result;
  const ScalarDomain& dom = a.domain();
  if (dom.kind() == ScalarDomain::Kind::Rational) {
    if (options.modulus == 2) throw Error("the reduction prime must be odd");
    SuperAlgebra reduced = reduce_mod_p(a, options.modulus);
    SimplicityResult r = is_simple(reduced, options);
    result.points_checked = r.points_checked;
    if (r.simple()) {
      result.verdict = SimplicityResult::Verdict::Simple;
      result.certificate = "simple mod " + std::to_string(options.modulus);
    } else {
      result.verdict = SimplicityResult::Verdict::Inconclusive;
      result.certificate = "reduction mod " + std::to_string(options.modulus) +
                           " is not simple; try another prime";
    }
    return result;
  }
  if (!dom.is_finite()) {
    throw Error("is_simple supports finite domains and Q, not " + dom.descriptor());
  }
  const std::size_t n = a.dim();
  if (n == 0 || std::all_of(a.constants().begin(), a.constants().end(),
                            [](const Scalar& s) { return s.is_zero(); })) {
    result.verdict = SimplicityResult::Verdict::NotSimple;
    result.certificate = "A*A = 0";
    result.proper_ideal = Subspace(dom, n);
    return result;
  }
  std::optional<Subspace> witness;
  bool over_budget = false;
  for (int p : {0, 1}) {
    auto coords = a.indices_of_parity(p);
    for_each_projective_point(a, coords, [&](const Vector& v) {
      if (++result.points_checked > options.budget) {
        over_budget = true;
        return false;
      }
      Subspace ideal = ideal_closure(a, std::span<const Vector>(&v, 1));
      if (ideal.dim() < n) {
        witness = std::move(ideal);
        return false;
      }
      return true;
    });
    if (over_budget) throw Error("is_simple: enumeration budget exceeded");
    if (witness) break;
  }
  if (witness) {
    result.verdict = SimplicityResult::Verdict::NotSimple;
    result.certificate = "proper graded ideal of dimension " + std::to_string(witness->dim());
    result.proper_ideal = std::move(witness);
  } else {
    result.verdict = SimplicityResult::Verdict::Simple;
    result.certificate = "every homogeneous vector generates A (" +
                         std::to_string(result.points_checked) + " projective points)";
  }
  return result;
}

// ---------------------------------------------------------- constructions --

SuperAlgebra direct_product(const SuperAlgebra& a, const SuperAlgebra& b) {
  if (a.domain() != b.domain()) throw Error("direct_product: domain mismatch");
  const std::size_t n = a.dim(), m = b.dim();
  StructureBuilder sb(a.domain(), n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& t : a.product_terms(i, j)) sb.add(i, j, t.index, t.coeff);
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (const auto& t : b.product_terms(i, j)) sb.add(n + i, n + j, n + t.index, t.coeff);
    }
  }
  std::vector<int> parity = a.parities();
  parity.insert(parity.end(), b.parities().begin(), b.parities().end());
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("(" + l + ",0)");
  for (const auto& l : b.labels()) labels.push_back("(0," + l + ")");
  std::optional<Vector> unity;
  if (a.unity() && b.unity()) {
    Vector u = *a.unity();
    u.insert(u.end(), b.unity()->begin(), b.unity()->end());
    unity = std::move(u);
  }
  return sb.build(std::move(parity), std::move(unity), std::move(labels));
}

SuperAlgebra scalar_extension(const SuperAlgebra& a, const ScalarDomain& target) {
  std::vector<Scalar> c;
  c.reserve(a.constants().size());
  for (const auto& s : a.constants()) c.push_back(s.embed(target));
  std::optional<Vector> unity;
  if (a.unity()) unity = embed(*a.unity(), target);
  return SuperAlgebra(target, a.parities(), std::move(c), std::move(unity), a.labels());
}

SuperAlgebra restrict_scalars(const SuperAlgebra& a) {
  const ScalarDomain& dom = a.domain();
  if (!dom.is_quadratic()) throw Error("restrict_scalars needs a quadratic domain");
  const ScalarDomain base = dom.base();
  const std::size_t n = a.dim();
  const Scalar w = Scalar::root(dom);
  StructureBuilder sb(base, 2 * n);
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t t = 0; t < 2; ++t) {
      Scalar factor = Scalar(dom, 1);
      if (s) factor *= w;
      if (t) factor *= w;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (const auto& term : a.product_terms(i, j)) {
            Scalar x = factor * term.coeff;
            sb.add(s * n + i, t * n + j, term.index, x.part(0));
            sb.add(s * n + i, t * n + j, n + term.index, x.part(1));
          }
        }
      }
    }
  }
  std::vector<int> parity = a.parities();
  parity.insert(parity.end(), a.parities().begin(), a.parities().end());
  std::vector<std::string> labels = a.labels();
  for (const auto& l : a.labels()) labels.push_back("w*" + l);
  std::optional<Vector> unity;
  if (a.unity()) {
    Vector u(2 * n, Scalar(base));
    for (std::size_t i = 0; i < n; ++i) {
      u[i] = (*a.unity())[i].part(0);
      u[n + i] = (*a.unity())[i].part(1);
    }
    unity = std::move(u);
  }
  return sb.build(std::move(parity), std::move(unity), std::move(labels));
}

SuperAlgebra reduce_mod_p(const SuperAlgebra& a, std::int64_t p) {
  if (a.domain().kind() != ScalarDomain::Kind::Rational) {
    throw Error("reduce_mod_p needs an algebra over Q");
  }
  const ScalarDomain fp = ScalarDomain::prime_field(p);
  auto reduce = [&](const Scalar& s) {
    mpq_class q = s.rational();
    if (q.get_den() % p == 0) {
      throw Error("prime " + std::to_string(p) + " divides the denominator of " +
                  s.to_string() + "; choose a different prime");
    }
    return Scalar::from_rational(fp, q);
  };
  std::vector<Scalar> c;
  c.reserve(a.constants().size());
  for (const auto& s : a.constants()) c.push_back(reduce(s));
  std::optional<Vector> unity;
  if (a.unity()) {
    Vector u;
    for (const auto& s : *a.unity()) u.push_back(reduce(s));
    unity = std::move(u);
  }
  return SuperAlgebra(fp, a.parities(), std::move(c), std::move(unity), a.labels());
}

SuperAlgebra basis_subalgebra(const SuperAlgebra& a, std::span<const std::size_t> indices) {
  const std::size_t m = indices.size();
  std::vector<long> position(a.dim(), -1);
  for (std::size_t t = 0; t < m; ++t) position.at(indices[t]) = static_cast<long>(t);
  StructureBuilder sb(a.domain(), m);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      for (const auto& term : a.product_terms(indices[s], indices[t])) {
        if (position[term.index] < 0) {
          throw Error("basis subset is not closed: " + a.labels()[indices[s]] + " * " +
                      a.labels()[indices[t]] + " involves " + a.labels()[term.index]);
        }
        sb.add(s, t, static_cast<std::size_t>(position[term.index]), term.coeff);
      }
    }
  }
  std::vector<int> parity;
  std::vector<std::string> labels;
  for (auto i : indices) {
    parity.push_back(a.parity(i));
    labels.push_back(a.labels()[i]);
  }
  std::optional<Vector> unity;
  if (a.unity()) {
    const Vector& u = *a.unity();
    bool inside = true;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!u[i].is_zero() && position[i] < 0) inside = false;
    }
    if (inside) {
      Vector v;
      for (auto i : indices) v.push_back(u[i]);
      unity = std::move(v);
    }
  }
  return sb.build(std::move(parity), std::move(unity), std::move(labels));
}

SuperAlgebra even_part(const SuperAlgebra& a) {
  auto idx = a.indices_of_parity(0);
  return basis_subalgebra(a, idx);
}

SuperAlgebra induced_algebra(const SuperAlgebra& a, std::span<const Vector> basis,
                             std::vector<std::string> labels) {
  const ScalarDomain& dom = a.domain();
  const std::size_t m = basis.size();
  Subspace span = Subspace::span(dom, a.dim(), std::vector<Vector>(basis.begin(), basis.end()));
  if (span.dim() != m) throw Error("induced_algebra: basis is not independent");
  // Coordinates in the given basis from the entries at the echelon pivots.
  Matrix at_pivots(dom, m, m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) at_pivots(r, c) = basis[c][span.pivots()[r]];
  }
  auto inv = inverse(at_pivots);
  if (!inv) throw Error("induced_algebra: singular pivot block");
  auto coords = [&](const Vector& v) {
    Vector restricted;
    for (auto p : span.pivots()) restricted.push_back(v[p]);
    Vector x = (*inv) * restricted;
    Vector back = a.zero();
    for (std::size_t c = 0; c < m; ++c) axpy(x[c], basis[c], back);
    if (back != v) return std::optional<Vector>{};
    return std::optional<Vector>{x};
  };
  std::vector<int> parity;
  for (const auto& b : basis) {
    int p = homogeneous_parity(a, b);
    if (p < 0) throw Error("induced_algebra: basis vector " + format_vector(a, b) + " is not homogeneous");
    parity.push_back(p);
  }
  StructureBuilder sb(dom, m);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      Vector prod = a.multiply(basis[s], basis[t]);
      auto x = coords(prod);
      if (!x) {
        throw Error("induced_algebra: span is not closed, product " + format_vector(a, prod) +
                    " escapes");
      }
      sb.add(s, t, *x);
    }
  }
  std::optional<Vector> unity;
  if (a.unity()) unity = coords(*a.unity());
  if (labels.empty()) {
    for (const auto& b : basis) labels.push_back(format_vector(a, b));
  }
  return sb.build(std::move(parity), std::move(unity), std::move(labels));
}

std::uint64_t idempotent_census(const SuperAlgebra& a, bool restrict_even,
                                std::uint64_t budget) {
  const ScalarDomain& dom = a.domain();
  if (!dom.is_finite()) throw Error("idempotent_census needs a finite domain");
  std::vector<std::size_t> coords;
  if (restrict_even) {
    coords = a.indices_of_parity(0);
  } else {
    for (std::size_t i = 0; i < a.dim(); ++i) coords.push_back(i);
  }
  const auto elems = elements(dom);
  const std::uint64_t q = elems.size();
  std::uint64_t total = 1;
  for (std::size_t t = 0; t < coords.size(); ++t) {
    if (total > budget / q) throw Error("idempotent_census: enumeration budget exceeded");
    total *= q;
  }
  std::uint64_t count = 0;
  std::vector<std::size_t> digits(coords.size(), 0);
  Vector x = a.zero();
  for (std::uint64_t step = 0; step < total; ++step) {
    if (a.multiply(x, x) == x) ++count;
    std::size_t pos = 0;
    while (pos < digits.size()) {
      if (++digits[pos] == q) {
        digits[pos] = 0;
        x[coords[pos]] = elems[0];
        ++pos;
      } else {
        x[coords[pos]] = elems[digits[pos]];
        break;
      }
    }
  }
  return count;
}

}  // namespace kac
