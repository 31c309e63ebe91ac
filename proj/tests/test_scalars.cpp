#include <gtest/gtest.h>

#include <random>

#include "kac/error.hpp"
#include "kac/scalar.hpp"

using namespace kac;

namespace {

ScalarDomain Q() { return ScalarDomain::rational(); }
ScalarDomain F(std::int64_t p) { return ScalarDomain::prime_field(p); }
Scalar s(const ScalarDomain& d, const char* t) { return Scalar::parse(d, t); }

}  // namespace

TEST(Scalars, RationalProduct) { EXPECT_EQ(s(Q(), "1/2") * s(Q(), "1/2"), s(Q(), "1/4")); }

TEST(Scalars, CharacteristicKillsNumerator) { EXPECT_TRUE(s(F(3), "3/4").is_zero()); }

TEST(Scalars, ConjugateProduct) {
  for (const char* d : {"-1", "2", "5/3"}) {
    auto K = ScalarDomain::quadratic(Q(), s(Q(), d));
    Scalar w = Scalar::root(K);
    Scalar one(K, 1);
    EXPECT_EQ((one + w) * (one - w), one - s(K, d));
  }
  auto K = ScalarDomain::quadratic(F(7), s(F(7), "3"));
  Scalar w = Scalar::root(K), one(K, 1);
  EXPECT_EQ((one + w) * (one - w), Scalar(K, -2));
}

TEST(Scalars, CanonicalForms) {
  EXPECT_EQ(s(Q(), "-6/8").to_string(), "-3/4");
  EXPECT_EQ(s(F(5), "-1").residue(), 4);
  EXPECT_EQ(s(F(5), "1/2").residue(), 3);
  auto K = ScalarDomain::quadratic(Q(), s(Q(), "-1"));
  EXPECT_EQ(s(K, "1/2+3*w").to_string(), "1/2+3*w");
  EXPECT_EQ(s(K, "-w").to_string(), "-w");
  EXPECT_EQ(s(K, "2-1/2*w").part(1), s(Q(), "-1/2"));
}

TEST(Scalars, Conjugate) {
  auto K = ScalarDomain::quadratic(Q(), s(Q(), "3"));
  EXPECT_EQ(conjugate(s(K, "2+3*w")), s(K, "2-3*w"));
  EXPECT_EQ(conjugate(s(K, "5")), s(K, "5"));
  EXPECT_THROW(conjugate(s(Q(), "5")), Error);
}

TEST(Scalars, ConjugateIsRingAutomorphismFixingBase) {
  std::mt19937_64 rng(7);
  for (auto K : {ScalarDomain::quadratic(Q(), s(Q(), "-1")),
                 ScalarDomain::quadratic(F(5), s(F(5), "2")),
                 ScalarDomain::quadratic(F(3), s(F(3), "-1"))}) {
    for (int t = 0; t < 200; ++t) {
      Scalar x = random_scalar(K, rng), y = random_scalar(K, rng);
      EXPECT_EQ(conjugate(conjugate(x)), x);
      EXPECT_EQ(conjugate(x + y), conjugate(x) + conjugate(y));
      EXPECT_EQ(conjugate(x * y), conjugate(x) * conjugate(y));
      EXPECT_EQ(conjugate(x) == x, x.part(1).is_zero());
    }
  }
}

TEST(Scalars, IsSquareExamples) {
  EXPECT_TRUE(is_square(s(Q(), "4/9")));
  EXPECT_FALSE(is_square(s(Q(), "2")));
  EXPECT_FALSE(is_square(s(Q(), "-1")));
  EXPECT_FALSE(is_square(s(F(3), "-1")));
  EXPECT_TRUE(is_square(s(F(5), "-1")));
  EXPECT_THROW(is_square(s(F(5), "0")), Error);
}

TEST(Scalars, IsSquareMatchesExhaustiveSearch) {
  for (std::int64_t p = 3; p <= 101; p += 2) {
    bool prime = true;
    for (std::int64_t k = 3; k * k <= p; k += 2) prime &= p % k != 0;
    if (!prime) continue;
    std::vector<bool> square(p, false);
    for (std::int64_t x = 0; x < p; ++x) square[x * x % p] = true;
    for (std::int64_t d = 1; d < p; ++d) {
      EXPECT_EQ(is_square(Scalar(F(p), d)), square[d]) << "p=" << p << " d=" << d;
    }
  }
}

TEST(Scalars, SqrtSquaresBack) {
  std::mt19937_64 rng(3);
  for (auto D : {Q(), F(7), F(13), ScalarDomain::quadratic(F(3), s(F(3), "-1"))}) {
    for (int t = 0; t < 50; ++t) {
      Scalar x = random_nonzero(D, rng);
      auto r = sqrt(x * x);
      ASSERT_TRUE(r.has_value());
      EXPECT_EQ(*r * *r, x * x);
    }
  }
}

TEST(Scalars, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  std::vector<ScalarDomain> doms{Q(), F(3), F(5), F(101),
                                 ScalarDomain::quadratic(Q(), s(Q(), "-1")),
                                 ScalarDomain::quadratic(Q(), s(Q(), "2")),
                                 ScalarDomain::quadratic(F(5), s(F(5), "2")),
                                 ScalarDomain::quadratic(F(7), s(F(7), "3"))};
  for (const auto& D : doms) {
    const Scalar zero(D), one(D, 1);
    for (int t = 0; t < 300; ++t) {
      Scalar x = random_scalar(D, rng), y = random_scalar(D, rng), z = random_scalar(D, rng);
      EXPECT_EQ((x + y) + z, x + (y + z));
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ(x + zero, x);
      EXPECT_EQ(x * one, x);
      EXPECT_EQ(x + (-x), zero);
      if (!x.is_zero()) {
        EXPECT_EQ(x * x.inverse(), one);
        EXPECT_EQ(y / x * x, y);
      }
    }
  }
}

TEST(Scalars, Errors) {
  EXPECT_THROW(ScalarDomain::prime_field(2), Error);
  EXPECT_THROW(ScalarDomain::prime_field(9), Error);
  EXPECT_THROW(ScalarDomain::quadratic(Q(), s(Q(), "0")), Error);
  EXPECT_THROW(s(Q(), "1") / s(Q(), "0"), Error);
  EXPECT_THROW(s(Q(), "1") + s(F(5), "1"), Error);
  EXPECT_THROW(s(F(5), "1/5"), Error);
  EXPECT_THROW(s(Q(), "1/2+w"), Error);
  EXPECT_THROW(ScalarDomain::parse("fp:2"), Error);
  EXPECT_THROW(ScalarDomain::parse("complex"), Error);
}

TEST(Scalars, SplitQuadraticZeroDivisor) {
  auto K = ScalarDomain::quadratic(Q(), s(Q(), "4"));
  Scalar z = s(K, "2-w");  // (2-w)(2+w) = 0
  EXPECT_TRUE((z * s(K, "2+w")).is_zero());
  EXPECT_THROW(z.inverse(), Error);
}

TEST(Scalars, DescriptorsAreInterned) {
  EXPECT_EQ(ScalarDomain::parse("fp:7"), F(7));
  EXPECT_EQ(ScalarDomain::parse("quad:rational:-1"), ScalarDomain::quadratic(Q(), s(Q(), "-1")));
  EXPECT_EQ(ScalarDomain::parse("quad:fp:5:2").descriptor(), "quad:fp:5:2");
  EXPECT_EQ(ScalarDomain::parse("quad:fp:3:-1").size(), 9u);
}

TEST(Scalars, EnumerationOfFiniteDomains) {
  auto K = ScalarDomain::quadratic(F(3), s(F(3), "-1"));
  auto all = elements(K);
  ASSERT_EQ(all.size(), 9u);
  EXPECT_TRUE(all[0].is_zero());
  EXPECT_TRUE(all[1].is_one());
  // F9 is a field: every nonzero element has order dividing 8.
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_TRUE(all[i].pow(8).is_one());
}
