#include <random>

#include <gtest/gtest.h>

#include "kcb/laurent.hpp"

using namespace kcb;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<int, long>> terms) { return LaurentPoly::from_terms(terms); }

LaurentPoly random_poly(std::mt19937& rng, int spread = 4, int max_terms = 5) {
  std::uniform_int_distribution<int> exp(-spread, spread);
  std::uniform_int_distribution<long> coef(-6, 6);
  std::uniform_int_distribution<int> count(0, max_terms);
  LaurentPoly p;
  for (int n = count(rng); n > 0; --n) p += LaurentPoly::monomial(exp(rng), Integer(coef(rng)));
  return p;
}

// Exact value at the integer point v = x.
mpq_class eval(const LaurentPoly& p, long x) {
  mpq_class acc = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), mpz_class(x).get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e < 0) {
      acc += mpq_class(c) / mpq_class(pw);
    } else {
      acc += mpq_class(c * pw);
    }
  }
  return acc;
}

}  // namespace

TEST(Laurent, ZeroIsNormalized) {
  LaurentPoly p = poly({{3, 2}, {3, -2}});
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p, LaurentPoly());
  EXPECT_EQ(p.term_count(), 0u);
}

TEST(Laurent, QuantumIntegers) {
  EXPECT_EQ(qint(0), LaurentPoly());
  EXPECT_EQ(qint(1), LaurentPoly(1));
  EXPECT_EQ(qint(3), poly({{-2, 1}, {0, 1}, {2, 1}}));
  EXPECT_EQ(qfact(3), qint(3) * qint(2));
  EXPECT_EQ(qfact(0), LaurentPoly(1));
}

TEST(Laurent, QuantumIntegerAtOneIsN) {
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(eval(qint(n), 1), n);
}

TEST(Laurent, BarAndPositivePart) {
  const LaurentPoly p = poly({{-1, 2}, {3, 1}});
  EXPECT_EQ(bar(p), poly({{1, 2}, {-3, 1}}));
  EXPECT_FALSE(p.in_positive_part());
  EXPECT_TRUE(poly({{1, 1}, {4, -3}}).in_positive_part());
  EXPECT_FALSE(LaurentPoly(1).in_positive_part());
  EXPECT_TRUE(LaurentPoly().in_positive_part());
}

TEST(Laurent, ExactDivision) {
  EXPECT_EQ(exact_div(qfact(4), qint(4)), qfact(3));
  EXPECT_THROW(exact_div(LaurentPoly(1), qint(2)), NotDivisible);
  EXPECT_THROW(exact_div(LaurentPoly(1), LaurentPoly()), std::exception);
}

TEST(Laurent, BarSymmetrizeNonpos) {
  // c = 2 v^-1 + 3 + v: the bar-invariant part agreeing in degrees <= 0 is 2v^-1 + 3 + 2v
  const LaurentPoly s = bar_symmetrize_nonpos(poly({{-1, 2}, {0, 3}, {1, 1}}));
  EXPECT_EQ(s, poly({{-1, 2}, {0, 3}, {1, 2}}));
  EXPECT_EQ(bar_symmetrize_nonpos(poly({{2, 5}})), LaurentPoly());
}

TEST(Laurent, ToString) { EXPECT_EQ(qint(3).to_string(), "v^2 + 1 + v^-2"); }

TEST(LaurentProperty, RingAxioms) {
  std::mt19937 rng(1);
  for (int it = 0; it < 300; ++it) {
    const LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng);
    const LaurentPoly c = random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, LaurentPoly());
    EXPECT_EQ(a + (-a), LaurentPoly());
  }
}

TEST(LaurentProperty, EvaluationIsARingMap) {
  std::mt19937 rng(2);
  for (int it = 0; it < 200; ++it) {
    const LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng);
    for (long x : {2L, 3L, -5L}) {
      EXPECT_EQ(eval(a * b, x), eval(a, x) * eval(b, x));
      EXPECT_EQ(eval(a + b, x), eval(a, x) + eval(b, x));
    }
  }
}

TEST(LaurentProperty, BarIsAnInvolutiveRingMap) {
  std::mt19937 rng(3);
  for (int it = 0; it < 300; ++it) {
    const LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng);
    EXPECT_EQ(bar(bar(a)), a);
    EXPECT_EQ(bar(a * b), bar(a) * bar(b));
    EXPECT_EQ(bar(a + b), bar(a) + bar(b));
  }
}

TEST(LaurentProperty, DivisionUndoesMultiplication) {
  std::mt19937 rng(4);
  for (int it = 0; it < 300; ++it) {
    const LaurentPoly a = random_poly(rng);
    LaurentPoly b = random_poly(rng);
    if (b.is_zero()) b = LaurentPoly(1);
    EXPECT_EQ(exact_div(a * b, b), a);
  }
}

TEST(LaurentProperty, SymmetrizationIsBarInvariantAndRemovesNonpositivePart) {
  std::mt19937 rng(5);
  for (int it = 0; it < 300; ++it) {
    const LaurentPoly c = random_poly(rng);
    const LaurentPoly s = bar_symmetrize_nonpos(c);
    EXPECT_EQ(bar(s), s);
    EXPECT_TRUE((c - s).in_positive_part()) << c.to_string();
  }
}

TEST(LaurentProperty, QuantumIntegersAreBarInvariant) {
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(bar(qint(n)), qint(n));
    EXPECT_EQ(bar(qfact(n)), qfact(n));
  }
}

TEST(LaurentProperty, AddScaledMatchesShiftedSum) {
  std::mt19937 rng(6);
  for (int it = 0; it < 200; ++it) {
    LaurentPoly a = random_poly(rng);
    const LaurentPoly b = random_poly(rng);
    const LaurentPoly expected = a + b.shifted(3) * LaurentPoly(-2);
    a.add_scaled(b, 3, -2);
    EXPECT_EQ(a, expected);
  }
}
