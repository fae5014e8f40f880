#include <gtest/gtest.h>

#include "kcb/verify.hpp"

using namespace kcb;

TEST(Verify, LemmaD) {
  Oracle oracle;
  for (int k = 0; k <= 2; ++k) EXPECT_TRUE(verify_lemma_d(oracle, 2, 0, k).ok());
}

TEST(Verify, WeylStability) {
  Oracle oracle;
  const auto r = verify_weyl_stability(oracle, 1, 0, 1, 2);
  EXPECT_TRUE(r.ok()) << to_text(r);
  EXPECT_GE(r.count(Verdict::Match), 3u);
  // k = 0: the Weyl strings start with the other residue
  EXPECT_TRUE(verify_weyl_stability(oracle, 2, 0, 0, 2).ok());
  EXPECT_TRUE(verify_weyl_stability(oracle, 2, 1, 0, 2).ok());
}

TEST(Verify, LemmaZeroFamiliesThatHold) {
  Oracle oracle;
  for (Family f : {Family::P0k1, Family::P10k}) {
    for (bool dual : {false, true}) {
      const auto r = verify_pi_families(oracle, 2, f, dual, 1, 0);
      EXPECT_TRUE(r.ok()) << to_text(r);
    }
  }
}

TEST(Verify, LemmaZeroExponentMismatchAtK2) {
  Oracle oracle;
  const auto r = verify_pi_families(oracle, 2, Family::P010k, false, 2, 0);
  EXPECT_FALSE(r.ok());
  bool has_diff = false;
  for (const auto& inst : r.instances) has_diff = has_diff || (inst.verdict == Verdict::Mismatch && !inst.diff.is_zero());
  EXPECT_TRUE(has_diff);
}

TEST(Verify, GeneralFamilyMismatchCarriesDiff) {
  Oracle oracle;
  const auto r = verify_pi_families(oracle, 1, Family::PGen10k1s, false, 1, 1);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.resolutions.empty());
}

TEST(Verify, GeneralFamilyThatHolds) {
  Oracle oracle;
  const auto r = verify_pi_families(oracle, 2, Family::PGen0k1s, false, 1, 2);
  EXPECT_TRUE(r.ok()) << to_text(r);
}

TEST(Verify, ResolveFlaggedOnSyntheticReport) {
  VerificationReport r;
  r.suite = "pi-families";
  r.params["family"] = family_name(Family::PGen10k1s);
  const auto rows = flagged_rows(Family::PGen10k1s);
  ASSERT_EQ(rows.size(), 2u);
  const std::string row_a = rows.begin()->first;
  const std::string row_b = std::next(rows.begin())->first;
  InstanceResult one{"one", Verdict::Match, "", {}, {{row_a, {"U1", "U2"}}, {row_b, {"first-row"}}}};
  InstanceResult two{"two", Verdict::Match, "", {}, {{row_a, {"U2"}}, {row_b, {"by-S2^1"}}}};
  r.add(one);
  r.add(two);
  resolve_flagged(r);
  EXPECT_EQ(r.resolutions.at(row_a), "U2");
  EXPECT_EQ(r.resolutions.at(row_b), "inconsistent");
  EXPECT_FALSE(r.ok());

  VerificationReport empty;
  empty.params["family"] = family_name(Family::PGen10k1s);
  resolve_flagged(empty);
  EXPECT_EQ(empty.resolutions.at(row_a), "unresolved (no instance matched)");
}

TEST(Verify, Duality) {
  Oracle oracle;
  const auto r = verify_duality(oracle, FockContext(2, {0, 1}), 6, 2);
  EXPECT_TRUE(r.ok()) << to_text(r);
  EXPECT_GT(r.count(Verdict::Match), 0u);
}

TEST(Verify, Svelte) {
  Oracle oracle;
  EXPECT_TRUE(verify_svelte_lemma(oracle, 1, 9).ok());
}

TEST(Verify, StructuralAndShape) {
  EXPECT_TRUE(verify_structural(FockContext::symmetric(2), 7).ok());
  EXPECT_TRUE(verify_shape_functions(6).ok());
}

TEST(Verify, DividedPowers) { EXPECT_TRUE(verify_divided_powers(3, 2, 2, 4).ok()); }

TEST(Verify, SmallDefect) {
  Oracle oracle;
  const auto r = verify_small_defect(oracle, 1, 3);
  EXPECT_TRUE(r.ok()) << to_text(r);
}

TEST(Verify, ConjectureScanNeverFails) {
  Oracle oracle;
  const auto r = conjecture_scan(oracle, 2, 7);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.count(Verdict::Mismatch), 0u);
  EXPECT_GT(r.count(Verdict::Info), 0u);
}

TEST(Verify, ReportSerializationIsDeterministic) {
  Oracle a;
  Oracle b;
  const auto r1 = verify_duality(a, FockContext::symmetric(1), 5, 1);
  const auto r2 = verify_duality(b, FockContext::symmetric(1), 5, 3);
  EXPECT_EQ(to_json(r1).dump(), to_json(r2).dump());
  EXPECT_FALSE(to_json(r1).contains("seconds"));
  EXPECT_TRUE(to_json(r1, true).contains("seconds"));
}

TEST(Verify, AbsorbPrefixesIds) {
  VerificationReport outer;
  outer.suite = "all";
  VerificationReport inner;
  inner.suite = "shape";
  inner.add({"a=3", Verdict::Match, "", {}, {}});
  inner.add({"shape a=4", Verdict::Match, "", {}, {}});
  outer.absorb(inner);
  ASSERT_EQ(outer.instances.size(), 2u);
  EXPECT_EQ(outer.instances[0].id, "shape a=3");
  EXPECT_EQ(outer.instances[1].id, "shape a=4");
}
