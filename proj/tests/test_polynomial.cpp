#include <gtest/gtest.h>

#include "spectral_class/polynomial.hpp"

namespace sc = spectral_class;
using sc::Polynomial;

TEST(Polynomial, Arithmetic) {
  const Polynomial p{-1, 0, 1};  // x^2 - 1
  const Polynomial q{1, 1};      // x + 1
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p * q, (Polynomial{-1, -1, 1, 1}));
  EXPECT_EQ(p - p, Polynomial{});
  EXPECT_EQ(q.pow(3), (Polynomial{1, 3, 3, 1}));
  EXPECT_EQ(p(sc::BigInt(3)), 8);
  EXPECT_EQ(p.derivative(), (Polynomial{0, 2}));
}

TEST(Polynomial, ShiftsAndReflection) {
  const Polynomial p{-1, 0, 1};
  EXPECT_EQ(p.taylor_shift(2), (Polynomial{3, 4, 1}));  // (x+2)^2 - 1
  EXPECT_EQ((Polynomial{0, 1, 1}).reflect(), (Polynomial{0, -1, 1}));
}

TEST(Polynomial, Division) {
  const Polynomial p = Polynomial::linear(2) * Polynomial::linear(-3) * Polynomial::monomial(2);
  EXPECT_EQ(p.zero_multiplicity(), 2);
  EXPECT_EQ(p.divide_by_x_power(2), Polynomial::linear(2) * Polynomial::linear(-3));
  const auto [quot, rem] = p.divide_by_x_power(2).divide_by_linear(2);
  EXPECT_EQ(quot, Polynomial::linear(-3));
  EXPECT_EQ(rem, 0);
  EXPECT_TRUE(Polynomial::linear(2).divides(p));
  EXPECT_FALSE(Polynomial::linear(5).divides(p));
  EXPECT_EQ(p.exact_divide(Polynomial::linear(-3)), Polynomial::linear(2) * Polynomial::monomial(2));
  EXPECT_THROW(p.exact_divide(Polynomial::linear(5)), std::domain_error);
}

TEST(Polynomial, GcdAndSquareFree) {
  const Polynomial a = Polynomial::linear(1).pow(3) * Polynomial::linear(-2);
  const Polynomial b = Polynomial::linear(1).pow(2) * Polynomial::linear(4);
  EXPECT_EQ(sc::gcd(a, b), Polynomial::linear(1).pow(2));
  const auto parts = sc::square_free_decomposition(a * Polynomial::linear(7).pow(2));
  // parts[i] collects the factors of multiplicity i + 1
  ASSERT_EQ(parts.size(), 3U);
  EXPECT_EQ(parts[0], Polynomial::linear(-2));
  EXPECT_EQ(parts[1], Polynomial::linear(7));
  EXPECT_EQ(parts[2], Polynomial::linear(1));
}

TEST(Polynomial, SignVariationsAndContent) {
  EXPECT_EQ((Polynomial{-6, 11, -6, 1}).sign_variations(), 3);
  EXPECT_EQ((Polynomial{6, 4, 2}).content(), 2);
  EXPECT_EQ((Polynomial{6, 4, 2}).primitive_part(), (Polynomial{3, 2, 1}));
}

TEST(Polynomial, Display) {
  EXPECT_EQ((Polynomial{0, 0, -9, 0, 1}).to_string(), "x^4 - 9x^2");
  EXPECT_EQ((Polynomial{-2, -3, 0, 1}).to_string(), "x^3 - 3x - 2");
  EXPECT_EQ(Polynomial::constant(1).to_string(), "1");
  EXPECT_EQ(Polynomial{}.to_string(), "0");
}
