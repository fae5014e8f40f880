#include <random>

#include <gtest/gtest.h>

#include "kcb/crystal.hpp"
#include "kcb/fock.hpp"

using namespace kcb;

namespace {

const Partition E{};

Multipartition mp2(Partition a, Partition b) { return Multipartition{std::move(a), std::move(b)}; }

LaurentPoly poly(std::vector<std::pair<int, long>> terms) { return LaurentPoly::from_terms(terms); }

// [h] for any integer h, with [-h] = -[h].
LaurentPoly signed_qint(int h) { return h >= 0 ? qint(h) : -qint(-h); }

FockVector random_vector(std::mt19937& rng, const std::vector<Multipartition>& pool) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> exp(-2, 2);
  std::uniform_int_distribution<long> coef(-3, 3);
  FockVector v;
  for (int t = 0; t < 3; ++t) v.add(pool[pick(rng)], LaurentPoly::monomial(exp(rng), Integer(coef(rng))));
  return v;
}

}  // namespace

TEST(FockContext, Validation) {
  EXPECT_THROW(FockContext(1, {0}), std::invalid_argument);
  EXPECT_THROW(FockContext(2, {}), std::invalid_argument);
  EXPECT_THROW(FockContext(2, {0, 2}), std::invalid_argument);
  EXPECT_THROW(FockContext(2, {0, 1, 0}), std::invalid_argument);
  EXPECT_NO_THROW(FockContext(3, {2, 2, 0, 1}));
  EXPECT_EQ(FockContext::symmetric(2).charges(), (std::vector<int>{0, 0, 1, 1}));
  EXPECT_EQ(FockContext(3, {0, 0, 2}).highest_weight(), (std::vector<int>{2, 0, 1}));
  EXPECT_EQ(FockContext(3, {0, 1}).dual().charges(), (std::vector<int>{2, 0}));
}

TEST(Fock, Residues) {
  const FockContext ctx(2, {0, 1});
  EXPECT_EQ(residue(ctx, {2, 1, 2}), 0);
  EXPECT_EQ(residue(ctx, {1, 1, 1}), 0);
  EXPECT_EQ(residue(FockContext(3, {0}), {1, 2, 1}), 2);
}

TEST(Fock, AddableAndRemovableNodes) {
  const FockContext ctx(2, {0, 1});
  EXPECT_EQ(addable_nodes(ctx, mp2(E, E), 0), (std::vector<NodeRef>{{1, 1, 1}}));
  EXPECT_EQ(addable_nodes(ctx, mp2(E, {1}), 0), (std::vector<NodeRef>{{1, 1, 1}, {2, 1, 2}, {2, 2, 1}}));
  EXPECT_EQ(addable_nodes(FockContext::symmetric(3), Multipartition::empty(6), 0).size(), 3u);
  EXPECT_EQ(removable_nodes(ctx, mp2({1}, E), 0), (std::vector<NodeRef>{{1, 1, 1}}));
  EXPECT_EQ(removable_nodes(ctx, mp2({2}, E), 1), (std::vector<NodeRef>{{1, 1, 2}}));
  EXPECT_TRUE(removable_nodes(ctx, mp2(E, E), 1).empty());
}

TEST(Fock, Content) {
  const FockContext ctx(2, {0, 1});
  EXPECT_EQ(content(ctx, mp2(E, E)), (std::vector<int>{0, 0}));
  EXPECT_EQ(content(ctx, mp2({3}, E)), (std::vector<int>{2, 1}));
  EXPECT_EQ(content(ctx, mp2({1}, {1})), (std::vector<int>{1, 1}));
}

TEST(Fock, FActionExamples) {
  const FockContext sym3 = FockContext::symmetric(3);
  FockVector expected;
  expected.add(Multipartition{{1}, E, E, E, E, E}, 1);
  expected.add(Multipartition{E, {1}, E, E, E, E}, LaurentPoly::monomial(1));
  expected.add(Multipartition{E, E, {1}, E, E, E}, LaurentPoly::monomial(2));
  EXPECT_EQ(apply_f(sym3, FockVector(Multipartition::empty(6)), 0), expected);

  const FockContext ctx(2, {0, 1});
  EXPECT_TRUE(apply_f(ctx, FockVector(), 0).is_zero());
  FockVector f0;
  f0.add(mp2({1}, {1}), 1);
  f0.add(mp2(E, {2}), LaurentPoly::monomial(1));
  f0.add(mp2(E, {1, 1}), LaurentPoly::monomial(2));
  EXPECT_EQ(apply_f(ctx, FockVector(mp2(E, {1})), 0), f0);
}

TEST(Fock, EActionExamples) {
  const FockContext ctx(2, {0, 1});
  EXPECT_EQ(apply_e(ctx, FockVector(mp2({1}, E)), 0), FockVector(mp2(E, E)));
  EXPECT_TRUE(apply_e(ctx, FockVector(mp2(E, E)), 1).is_zero());
  // removable 1-nodes c1(1,2) and c2(1,1); below c1(1,2) are the addable c1(2,1)
  // and the removable c2(1,1), so M = 0 for both.
  FockVector expected;
  expected.add(mp2({1}, {1}), 1);
  expected.add(mp2({2}, E), 1);
  EXPECT_EQ(apply_e(ctx, FockVector(mp2({2}, {1})), 1), expected);
  // c1(1,1) has the addable 0-nodes c2(1,2), c2(2,1) below it: M = 2
  EXPECT_EQ(apply_e(ctx, FockVector(mp2({1}, {1})), 0), FockVector(mp2(E, {1})).scaled(LaurentPoly::monomial(-2)));
}

TEST(Fock, DividedPowerExamples) {
  const FockContext sym3 = FockContext::symmetric(3);
  const FockVector u(Multipartition::empty(6));
  EXPECT_EQ(apply_f_divided(sym3, u, 0, 0), u);
  FockVector expected;
  expected.add(Multipartition{{1}, {1}, E, E, E, E}, 1);
  expected.add(Multipartition{{1}, E, {1}, E, E, E}, LaurentPoly::monomial(1));
  expected.add(Multipartition{E, {1}, {1}, E, E, E}, LaurentPoly::monomial(2));
  EXPECT_EQ(apply_f_divided(sym3, u, 0, 2), expected);
  EXPECT_EQ(apply_f_divided_direct(sym3, u, 0, 2), expected);
}

TEST(Fock, VectorArithmetic) {
  const Multipartition a = mp2({1}, E);
  FockVector v(a);
  v.add(a, -1);
  EXPECT_TRUE(v.is_zero());
  FockVector w(a);
  w = w.scaled(qint(2));
  EXPECT_EQ(w.coeff(a), poly({{-1, 1}, {1, 1}}));
  EXPECT_EQ(w.divided(qint(2)), FockVector(a));
  EXPECT_THROW(w.divided(qint(3)), NotDivisible);
  EXPECT_TRUE(w.coeff(mp2(E, {1})).is_zero());
}

// e_i f_i - f_i e_i acts on a basis vector of weight h as [h_i].
TEST(FockProperty, CommutatorIsQuantumInteger) {
  for (const FockContext& ctx : {FockContext(2, {0, 1}), FockContext(3, {0, 0, 2}), FockContext(2, {1, 1, 0})}) {
    for (int n = 0; n <= 4; ++n) {
      for (const auto& mp : multipartitions_of(n, ctx.level())) {
        const FockVector x(mp);
        const WeightInfo w = weight_info(ctx, content(ctx, mp));
        for (int i = 0; i < ctx.e(); ++i) {
          const FockVector lhs = apply_e(ctx, apply_f(ctx, x, i), i) - apply_f(ctx, apply_e(ctx, x, i), i);
          EXPECT_EQ(lhs, x.scaled(signed_qint(w.hub[static_cast<std::size_t>(i)]))) << mp.to_string() << " i=" << i;
        }
      }
    }
  }
}

// Distinct residues i, j with |i - j| != 1 mod e give commuting f_i, f_j; e = 2 has none, e = 4 does.
TEST(FockProperty, FarResiduesCommute) {
  const FockContext ctx(4, {0, 2});
  for (int n = 0; n <= 3; ++n) {
    for (const auto& mp : multipartitions_of(n, 2)) {
      const FockVector x(mp);
      EXPECT_EQ(apply_f(ctx, apply_f(ctx, x, 0), 2), apply_f(ctx, apply_f(ctx, x, 2), 0));
    }
  }
}

// Quantum Serre relation for e >= 3: f_i^2 f_j - [2] f_i f_j f_i + f_j f_i^2 = 0 when j = i +- 1.
TEST(FockProperty, SerreRelation) {
  const FockContext ctx(3, {0, 1});
  for (int n = 0; n <= 3; ++n) {
    for (const auto& mp : multipartitions_of(n, 2)) {
      const FockVector x(mp);
      for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        auto f = [&](int r, const FockVector& y) { return apply_f(ctx, y, r); };
        const FockVector s = f(i, f(i, f(j, x))) - f(i, f(j, f(i, x))).scaled(qint(2)) + f(j, f(i, f(i, x)));
        EXPECT_TRUE(s.is_zero()) << mp.to_string();
      }
    }
  }
}

TEST(FockProperty, DirectDividedPowersMatchIterated) {
  std::mt19937 rng(7);
  for (const FockContext& ctx : {FockContext(2, {0, 1}), FockContext(3, {0, 1, 1}), FockContext::symmetric(2)}) {
    std::vector<Multipartition> pool;
    for (int n = 0; n <= 4; ++n) {
      for (const auto& mp : multipartitions_of(n, ctx.level())) pool.push_back(mp);
    }
    for (int it = 0; it < 60; ++it) {
      const FockVector x = random_vector(rng, pool);
      for (int i = 0; i < ctx.e(); ++i) {
        for (int k = 0; k <= 3; ++k) EXPECT_EQ(apply_f_divided_direct(ctx, x, i, k), apply_f_divided(ctx, x, i, k));
      }
    }
  }
}

TEST(FockProperty, DividedPowerTimesFactorialIsPower) {
  const FockContext ctx = FockContext::symmetric(2);
  for (int n = 0; n <= 3; ++n) {
    for (const auto& mp : multipartitions_of(n, 4)) {
      FockVector p(mp);
      for (int k = 1; k <= 3; ++k) {
        p = apply_f(ctx, p, 1);
        EXPECT_EQ(apply_f_divided(ctx, FockVector(mp), 1, k).scaled(qfact(k)), p);
      }
    }
  }
}
