#include "kac/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "kac/error.hpp"

namespace kac {
namespace detail {

struct DomainData {
  ScalarDomain::Kind kind = ScalarDomain::Kind::Rational;
  std::int64_t p = 0;                  // characteristic; 0 for Q
  const DomainData* base = nullptr;    // prime layer of a quadratic domain
  std::int64_t d_residue = 0;          // w^2 over F_p
  mpq_class d_rational;                // w^2 over Q
  std::string descriptor;
};

}  // namespace detail

namespace {

using detail::DomainData;

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, std::unique_ptr<DomainData>>& registry() {
  static std::map<std::string, std::unique_ptr<DomainData>> r;
  return r;
}

const DomainData* intern(DomainData data) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& r = registry();
  auto it = r.find(data.descriptor);
  if (it != r.end()) return it->second.get();
  auto key = data.descriptor;
  auto [pos, _] = r.emplace(key, std::make_unique<DomainData>(std::move(data)));
  return pos->second.get();
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t k = 2; k * k <= p; ++k) {
    if (p % k == 0) return false;
  }
  return true;
}

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t powmod(std::int64_t a, std::uint64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  a = mod(a, p);
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::int64_t invmod(std::int64_t a, std::int64_t p) {
  // extended Euclid
  std::int64_t r0 = p, r1 = mod(a, p), s0 = 0, s1 = 1;
  if (r1 == 0) throw Error("division by zero");
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return mod(s0, p);
}

std::int64_t residue_of(const mpq_class& q, std::int64_t p) {
  mpz_class pz(std::to_string(p));
  mpz_class num = q.get_num() % pz;
  mpz_class den = q.get_den() % pz;
  if (den == 0) {
    throw Error("denominator " + q.get_den().get_str() +
                " is not invertible modulo " + std::to_string(p));
  }
  std::int64_t n = mod(num.get_si(), p);
  std::int64_t d = mod(den.get_si(), p);
  return mulmod(n, invmod(d, p), p);
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error("empty scalar");
  if (s[0] == '+') s.erase(0, 1);
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw Error("malformed scalar '" + s + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace

// ---------------------------------------------------------------- domains --

ScalarDomain ScalarDomain::rational() {
  static const DomainData* q = [] {
    DomainData d;
    d.kind = Kind::Rational;
    d.descriptor = "rational";
    return intern(std::move(d));
  }();
  return ScalarDomain(q);
}

ScalarDomain ScalarDomain::prime_field(std::int64_t p) {
  if (p == 2) throw Error("characteristic 2 is not supported");
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  if (p > (std::int64_t{1} << 31)) throw Error("prime too large");
  DomainData d;
  d.kind = Kind::PrimeField;
  d.p = p;
  d.descriptor = "fp:" + std::to_string(p);
  return ScalarDomain(intern(std::move(d)));
}

ScalarDomain ScalarDomain::quadratic(const ScalarDomain& base,
                                     const Scalar& d) {
  if (base.is_quadratic()) {
    throw Error("only one quadratic layer is supported");
  }
  if (d.domain() != base) throw Error("d must lie in the base domain");
  if (d.is_zero()) throw Error("quadratic extension needs d != 0");
  DomainData data;
  data.kind = Kind::Quadratic;
  data.p = base.data_->p;
  data.base = base.data_;
  if (data.p != 0) {
    data.d_residue = d.residue();
  } else {
    data.d_rational = d.rational();
  }
  data.descriptor = "quad:" + base.descriptor() + ":" + d.to_string();
  return ScalarDomain(intern(std::move(data)));
}

ScalarDomain ScalarDomain::parse(std::string_view text) {
  if (text == "rational" || text == "Q" || text == "q") return rational();
  if (text.rfind("fp:", 0) == 0) {
    std::string digits(text.substr(3));
    std::size_t used = 0;
    long long p = 0;
    try {
      p = std::stoll(digits, &used);
    } catch (const std::exception&) {
      throw Error("bad field descriptor '" + std::string(text) + "'");
    }
    if (used != digits.size()) {
      throw Error("bad field descriptor '" + std::string(text) + "'");
    }
    return prime_field(p);
  }
  if (text.rfind("quad:", 0) == 0) {
    auto rest = text.substr(5);
    auto colon = rest.rfind(':');
    if (colon == std::string_view::npos) {
      throw Error("bad field descriptor '" + std::string(text) + "'");
    }
    ScalarDomain base = parse(rest.substr(0, colon));
    if (base.is_quadratic()) throw Error("nested quadratic descriptor");
    return quadratic(base, Scalar::parse(base, rest.substr(colon + 1)));
  }
  throw Error("bad field descriptor '" + std::string(text) + "'");
}

ScalarDomain::Kind ScalarDomain::kind() const { return data_->kind; }
std::int64_t ScalarDomain::characteristic() const { return data_->p; }

std::uint64_t ScalarDomain::size() const {
  if (!is_finite()) throw Error("domain " + descriptor() + " is infinite");
  auto p = static_cast<std::uint64_t>(data_->p);
  return is_quadratic() ? p * p : p;
}

ScalarDomain ScalarDomain::base() const {
  return is_quadratic() ? ScalarDomain(data_->base) : *this;
}

Scalar ScalarDomain::d() const {
  if (!is_quadratic()) throw Error(descriptor() + " is not quadratic");
  if (data_->p != 0) return Scalar(base(), static_cast<long>(data_->d_residue));
  return Scalar::from_rational(base(), data_->d_rational);
}

const std::string& ScalarDomain::descriptor() const {
  return data_->descriptor;
}

// ---------------------------------------------------------------- scalars --

Scalar::Scalar(const ScalarDomain& dom) : dom_(dom.data_) {
  if (dom_->p == 0) c_ = Rationals{};
}

Scalar::Scalar(const ScalarDomain& dom, long value) : dom_(dom.data_) {
  if (dom_->p == 0) {
    c_ = Rationals{mpq_class(value), mpq_class(0)};
  } else {
    c_ = Residues{mod(value, dom_->p), 0};
  }
}

Scalar Scalar::from_rational(const ScalarDomain& dom, const mpq_class& q) {
  if (dom.characteristic() == 0) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(dom.data_, Rationals{c, mpq_class(0)});
  }
  return Scalar(dom.data_, Residues{residue_of(q, dom.characteristic()), 0});
}

Scalar Scalar::fraction(const ScalarDomain& dom, const mpz_class& num,
                        const mpz_class& den) {
  if (den == 0) throw Error("division by zero");
  return from_rational(dom, mpq_class(num, den));
}

Scalar Scalar::from_parts(const ScalarDomain& dom, const Scalar& c0,
                          const Scalar& c1) {
  if (!dom.is_quadratic()) {
    if (!c1.is_zero()) throw Error(dom.descriptor() + " has no w component");
    return c0.embed(dom);
  }
  if (c0.domain() != dom.base() || c1.domain() != dom.base()) {
    throw Error("components must lie in " + dom.base().descriptor());
  }
  if (dom.characteristic() != 0) {
    return Scalar(dom.data_, Residues{c0.residue(), c1.residue()});
  }
  return Scalar(dom.data_, Rationals{c0.rational(), c1.rational()});
}

Scalar Scalar::root(const ScalarDomain& dom) {
  if (!dom.is_quadratic()) throw Error(dom.descriptor() + " is not quadratic");
  return from_parts(dom, Scalar(dom.base()), Scalar(dom.base(), 1));
}

Scalar Scalar::parse(const ScalarDomain& dom, std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s.push_back(ch);
  }
  if (s.empty()) throw Error("empty scalar");
  // split "<base><sign><coef>*w"
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') split = i;
  }
  std::string base_text, w_text;
  if (s.find('w') == std::string::npos) {
    base_text = s;
  } else if (split == std::string::npos) {
    w_text = s;
  } else {
    base_text = s.substr(0, split);
    w_text = s.substr(split);
  }
  if (base_text.find('w') != std::string::npos) {
    throw Error("malformed scalar '" + s + "'");
  }
  ScalarDomain base = dom.base();
  auto base_value = [&](const std::string& t) {
    return from_rational(base, parse_rational(t));
  };
  Scalar c0 = base_text.empty() ? Scalar(base) : base_value(base_text);
  Scalar c1(base);
  if (!w_text.empty()) {
    if (!dom.is_quadratic()) {
      throw Error("'" + s + "' uses w outside a quadratic domain");
    }
    if (w_text.back() != 'w') throw Error("malformed scalar '" + s + "'");
    std::string coef = w_text.substr(0, w_text.size() - 1);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    if (coef.empty() || coef == "+") {
      c1 = Scalar(base, 1);
    } else if (coef == "-") {
      c1 = Scalar(base, -1);
    } else {
      c1 = base_value(coef);
    }
  }
  return from_parts(dom, c0, c1);
}

void Scalar::require_same(const Scalar& o) const {
  if (dom_ != o.dom_) {
    throw Error("domain mismatch: " + dom_->descriptor + " vs " +
                o.dom_->descriptor);
  }
}

Scalar Scalar::part(int i) const {
  if (i < 0 || i > 1) throw Error("part index must be 0 or 1");
  const DomainData* b = dom_->base ? dom_->base : dom_;
  if (auto r = std::get_if<Residues>(&c_)) return Scalar(b, Residues{(*r)[i], 0});
  const auto& q = std::get<Rationals>(c_);
  return Scalar(b, Rationals{q[i], mpq_class(0)});
}

bool Scalar::is_zero() const {
  if (auto r = std::get_if<Residues>(&c_)) return (*r)[0] == 0 && (*r)[1] == 0;
  const auto& q = std::get<Rationals>(c_);
  return sgn(q[0]) == 0 && sgn(q[1]) == 0;
}

bool Scalar::is_one() const {
  if (auto r = std::get_if<Residues>(&c_)) return (*r)[0] == 1 && (*r)[1] == 0;
  const auto& q = std::get<Rationals>(c_);
  return q[0] == 1 && sgn(q[1]) == 0;
}

mpq_class Scalar::rational() const {
  if (dom_->kind != ScalarDomain::Kind::Rational) {
    throw Error("rational() on " + dom_->descriptor);
  }
  return std::get<Rationals>(c_)[0];
}

std::int64_t Scalar::residue() const {
  if (dom_->kind != ScalarDomain::Kind::PrimeField) {
    throw Error("residue() on " + dom_->descriptor);
  }
  return std::get<Residues>(c_)[0];
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (auto x = std::get_if<Residues>(&r.c_)) {
    const auto p = dom_->p;
    (*x)[0] = (*x)[0] == 0 ? 0 : p - (*x)[0];
    (*x)[1] = (*x)[1] == 0 ? 0 : p - (*x)[1];
  } else {
    auto& q = std::get<Rationals>(r.c_);
    q[0] = -q[0];
    q[1] = -q[1];
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  if (auto x = std::get_if<Residues>(&c_)) {
    const auto& y = std::get<Residues>(o.c_);
    const auto p = dom_->p;
    (*x)[0] += y[0];
    if ((*x)[0] >= p) (*x)[0] -= p;
    (*x)[1] += y[1];
    if ((*x)[1] >= p) (*x)[1] -= p;
  } else {
    auto& q = std::get<Rationals>(c_);
    const auto& r = std::get<Rationals>(o.c_);
    q[0] += r[0];
    q[1] += r[1];
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  const bool quad = dom_->kind == ScalarDomain::Kind::Quadratic;
  if (auto x = std::get_if<Residues>(&c_)) {
    const auto& y = std::get<Residues>(o.c_);
    const auto p = dom_->p;
    if (!quad) {
      (*x)[0] = mulmod((*x)[0], y[0], p);
      return *this;
    }
    std::int64_t c0 = (mulmod((*x)[0], y[0], p) +
                       mulmod(dom_->d_residue, mulmod((*x)[1], y[1], p), p)) % p;
    std::int64_t c1 = (mulmod((*x)[0], y[1], p) + mulmod((*x)[1], y[0], p)) % p;
    (*x)[0] = c0;
    (*x)[1] = c1;
  } else {
    auto& q = std::get<Rationals>(c_);
    const auto& r = std::get<Rationals>(o.c_);
    if (!quad) {
      q[0] *= r[0];
      return *this;
    }
    mpq_class c0 = q[0] * r[0] + dom_->d_rational * q[1] * r[1];
    mpq_class c1 = q[0] * r[1] + q[1] * r[0];
    q[0] = c0;
    q[1] = c1;
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  const bool quad = dom_->kind == ScalarDomain::Kind::Quadratic;
  if (auto x = std::get_if<Residues>(&c_)) {
    const auto p = dom_->p;
    if (!quad) return Scalar(dom_, Residues{invmod((*x)[0], p), 0});
    std::int64_t norm = mod(mulmod((*x)[0], (*x)[0], p) -
                                mulmod(dom_->d_residue, mulmod((*x)[1], (*x)[1], p), p),
                            p);
    if (norm == 0) throw Error("division by a zero divisor of " + dom_->descriptor);
    std::int64_t ni = invmod(norm, p);
    return Scalar(dom_, Residues{mulmod((*x)[0], ni, p),
                                 mulmod(mod(-(*x)[1], p), ni, p)});
  }
  const auto& q = std::get<Rationals>(c_);
  if (!quad) return Scalar(dom_, Rationals{1 / q[0], mpq_class(0)});
  mpq_class norm = q[0] * q[0] - dom_->d_rational * q[1] * q[1];
  if (sgn(norm) == 0) {
    throw Error("division by a zero divisor of " + dom_->descriptor);
  }
  return Scalar(dom_, Rationals{q[0] / norm, -q[1] / norm});
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  return *this *= o.inverse();
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar result(ScalarDomain(dom_), 1);
  Scalar b = *this;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

Scalar Scalar::embed(const ScalarDomain& target) const {
  if (target.data_ == dom_) return *this;
  if (target.is_quadratic() && target.data_->base == dom_) {
    Scalar r = *this;
    r.dom_ = target.data_;
    return r;
  }
  throw Error("no embedding of " + dom_->descriptor + " into " +
              target.descriptor());
}

bool Scalar::operator==(const Scalar& o) const {
  if (dom_ != o.dom_) return false;
  if (auto x = std::get_if<Residues>(&c_)) return *x == std::get<Residues>(o.c_);
  const auto& q = std::get<Rationals>(c_);
  const auto& r = std::get<Rationals>(o.c_);
  return q[0] == r[0] && q[1] == r[1];
}

bool Scalar::operator<(const Scalar& o) const {
  if (dom_ != o.dom_) return dom_->descriptor < o.dom_->descriptor;
  if (auto x = std::get_if<Residues>(&c_)) {
    const auto& y = std::get<Residues>(o.c_);
    return std::tie((*x)[1], (*x)[0]) < std::tie(y[1], y[0]);
  }
  const auto& q = std::get<Rationals>(c_);
  const auto& r = std::get<Rationals>(o.c_);
  if (q[1] != r[1]) return q[1] < r[1];
  return q[0] < r[0];
}

std::string Scalar::to_string() const {
  auto base_str = [&](int i) {
    if (auto x = std::get_if<Residues>(&c_)) return std::to_string((*x)[i]);
    return std::get<Rationals>(c_)[i].get_str();
  };
  if (dom_->kind != ScalarDomain::Kind::Quadratic) return base_str(0);
  Scalar c0 = part(0), c1 = part(1);
  if (c1.is_zero()) return base_str(0);
  std::string w;
  bool negative = dom_->p == 0 && sgn(c1.rational()) < 0;
  Scalar mag = negative ? -c1 : c1;
  w = mag.is_one() ? "w" : mag.to_string() + "*w";
  if (c0.is_zero()) return (negative ? "-" : "") + w;
  return base_str(0) + (negative ? "-" : "+") + w;
}

// ------------------------------------------------------- free functions --

Scalar conjugate(const Scalar& x) {
  ScalarDomain dom = x.domain();
  if (!dom.is_quadratic()) {
    throw Error("conjugate() needs a quadratic domain, got " + dom.descriptor());
  }
  return Scalar::from_parts(dom, x.part(0), -x.part(1));
}

bool is_square(const Scalar& d) {
  if (d.is_zero()) throw Error("is_square(0) is undefined");
  ScalarDomain dom = d.domain();
  switch (dom.kind()) {
    case ScalarDomain::Kind::Rational: {
      mpq_class q = d.rational();
      if (sgn(q) < 0) return false;
      return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 &&
             mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
    }
    case ScalarDomain::Kind::PrimeField:
    case ScalarDomain::Kind::Quadratic:
      if (!dom.is_finite()) break;
      return d.pow((dom.size() - 1) / 2).is_one();
  }
  throw Error("is_square is not supported over " + dom.descriptor());
}

std::optional<Scalar> sqrt(const Scalar& x) {
  ScalarDomain dom = x.domain();
  if (x.is_zero()) return x;
  if (!is_square(x)) return std::nullopt;
  if (dom.kind() == ScalarDomain::Kind::Rational) {
    mpq_class q = x.rational();
    mpz_class n, m;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(m.get_mpz_t(), q.get_den_mpz_t());
    return Scalar::fraction(dom, n, m);
  }
  if (dom.kind() == ScalarDomain::Kind::PrimeField) {
    // Tonelli-Shanks
    const std::int64_t p = dom.characteristic();
    const std::int64_t a = x.residue();
    std::int64_t q = p - 1, s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    std::int64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::int64_t m = s, c = powmod(z, q, p), t = powmod(a, q, p),
                 r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
      std::int64_t i = 0, t2 = t;
      while (t2 != 1) {
        t2 = mulmod(t2, t2, p);
        ++i;
      }
      std::int64_t b = c;
      for (std::int64_t j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
      m = i;
      c = mulmod(b, b, p);
      t = mulmod(t, c, p);
      r = mulmod(r, b, p);
    }
    return Scalar(dom, static_cast<long>(r));
  }
  if (dom.size() > (1u << 22)) throw Error("sqrt: field too large to search");
  for (const Scalar& s : elements(dom)) {
    if (s * s == x) return s;
  }
  return std::nullopt;
}

std::vector<Scalar> elements(const ScalarDomain& dom) {
  const std::uint64_t q = dom.size();
  const auto p = static_cast<std::int64_t>(dom.characteristic());
  std::vector<Scalar> out;
  out.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i) {
    auto c0 = static_cast<std::int64_t>(i % p);
    auto c1 = static_cast<std::int64_t>(i / p);
    if (dom.is_quadratic()) {
      out.push_back(Scalar::from_parts(dom, Scalar(dom.base(), static_cast<long>(c0)),
                                       Scalar(dom.base(), static_cast<long>(c1))));
    } else {
      out.emplace_back(dom, static_cast<long>(c0));
    }
  }
  return out;
}

Scalar random_scalar(const ScalarDomain& dom, std::mt19937_64& rng) {
  auto base_random = [&](const ScalarDomain& b) {
    if (b.characteristic() == 0) {
      std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
      long n = num(rng), m = den(rng);
      return Scalar::fraction(b, mpz_class(n), mpz_class(m));
    }
    std::uniform_int_distribution<long> r(0, static_cast<long>(b.characteristic()) - 1);
    return Scalar(b, r(rng));
  };
  if (!dom.is_quadratic()) return base_random(dom);
  Scalar c0 = base_random(dom.base());
  Scalar c1 = base_random(dom.base());
  return Scalar::from_parts(dom, c0, c1);
}

Scalar random_nonzero(const ScalarDomain& dom, std::mt19937_64& rng) {
  for (;;) {
    Scalar s = random_scalar(dom, rng);
    if (!s.is_zero()) return s;
  }
}

}  // namespace kac
