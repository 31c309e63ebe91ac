#pragma once

// Exact scalars: the rationals, prime fields F_p (p odd), and one quadratic
// layer base(w) with w^2 = d over either of them.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace kac {

class Scalar;

namespace detail {
struct DomainData;
}

// Handle to an interned, immutable field descriptor. Two handles compare
// equal iff they describe the same domain.
class ScalarDomain {
 public:
  enum class Kind { Rational, PrimeField, Quadratic };

  static ScalarDomain rational();
  static ScalarDomain prime_field(std::int64_t p);
  // base must be Rational or PrimeField; d != 0. d need not be a nonsquare:
  // with d a square the result is the split etale algebra base x base.
  static ScalarDomain quadratic(const ScalarDomain& base, const Scalar& d);
  // "rational", "fp:<p>", "quad:rational:<d>", "quad:fp:<p>:<d>".
  static ScalarDomain parse(std::string_view descriptor);

  Kind kind() const;
  bool is_quadratic() const { return kind() == Kind::Quadratic; }
  // 0 for Q and its quadratic extensions.
  std::int64_t characteristic() const;
  bool is_finite() const { return characteristic() != 0; }
  // Number of elements of a finite domain (p or p^2).
  std::uint64_t size() const;
  // The prime layer (Q or F_p); itself when not quadratic.
  ScalarDomain base() const;
  // The w^2 value of a quadratic domain, as a base scalar.
  Scalar d() const;
  const std::string& descriptor() const;

  bool operator==(const ScalarDomain& o) const { return data_ == o.data_; }
  bool operator!=(const ScalarDomain& o) const { return data_ != o.data_; }

  const detail::DomainData* data() const { return data_; }

 private:
  explicit ScalarDomain(const detail::DomainData* d) : data_(d) {}
  const detail::DomainData* data_;
  friend class Scalar;
};

// Element of a ScalarDomain, stored as a canonical pair (c0, c1) meaning
// c0 + c1*w over the prime layer (c1 == 0 outside quadratic domains).
class Scalar {
 public:
  explicit Scalar(const ScalarDomain& dom);  // zero
  Scalar(const ScalarDomain& dom, long value);
  static Scalar fraction(const ScalarDomain& dom, const mpz_class& num,
                         const mpz_class& den);
  static Scalar from_rational(const ScalarDomain& dom, const mpq_class& q);
  // c0 + c1*w from two base scalars.
  static Scalar from_parts(const ScalarDomain& dom, const Scalar& c0,
                           const Scalar& c1);
  // The generator w of a quadratic domain.
  static Scalar root(const ScalarDomain& dom);
  // Textual form: "3/4", "-2", "1/2+3*w", "-w".
  static Scalar parse(const ScalarDomain& dom, std::string_view text);

  ScalarDomain domain() const { return ScalarDomain(dom_); }
  // Component i (0 or 1) as an element of domain().base().
  Scalar part(int i) const;

  bool is_zero() const;
  bool is_one() const;
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;
  // Image in `target`, which must equal domain() or be a quadratic
  // extension of it.
  Scalar embed(const ScalarDomain& target) const;
  // Rational value; only for Q.
  mpq_class rational() const;
  // Residue in [0, p); only for F_p.
  std::int64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  // Arbitrary total order, stable across runs (used for canonical output).
  bool operator<(const Scalar& o) const;

  std::string to_string() const;

 private:
  using Residues = std::array<std::int64_t, 2>;
  using Rationals = std::array<mpq_class, 2>;

  Scalar(const detail::DomainData* dom, Residues r) : dom_(dom), c_(r) {}
  Scalar(const detail::DomainData* dom, Rationals q)
      : dom_(dom), c_(std::move(q)) {}
  void require_same(const Scalar& o) const;

  const detail::DomainData* dom_;
  std::variant<Residues, Rationals> c_;

  friend class ScalarDomain;
};

// Galois conjugation c0 + c1*w -> c0 - c1*w.
Scalar conjugate(const Scalar& x);

// Whether d (nonzero) is a square in its domain. Supported for Q, F_p and
// F_{p^2}.
bool is_square(const Scalar& d);

// A square root of x in its domain, when one exists (Q, F_p, F_{p^2}).
std::optional<Scalar> sqrt(const Scalar& x);

// All elements of a finite domain in a fixed order (0 first, then 1, ...).
std::vector<Scalar> elements(const ScalarDomain& dom);

// Random element. Over Q the numerator and denominator are small.
Scalar random_scalar(const ScalarDomain& dom, std::mt19937_64& rng);
Scalar random_nonzero(const ScalarDomain& dom, std::mt19937_64& rng);

}  // namespace kac
