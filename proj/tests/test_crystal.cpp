#include <gtest/gtest.h>

#include "kcb/crystal.hpp"

using namespace kcb;

namespace {

const Partition E{};

Multipartition mp2(Partition a, Partition b) { return Multipartition{std::move(a), std::move(b)}; }

std::vector<int> vertices_per_degree(const CrystalGraph& g) {
  std::vector<int> counts(static_cast<std::size_t>(g.max_degree() + 1), 0);
  for (const auto& v : g.vertices()) ++counts[static_cast<std::size_t>(v.degree)];
  return counts;
}

int string_length(const FockContext& ctx, Multipartition mp, int i, bool up) {
  int n = 0;
  for (auto next = up ? f_tilde(ctx, mp, i) : e_tilde(ctx, mp, i); next; next = up ? f_tilde(ctx, *next, i) : e_tilde(ctx, *next, i)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST(Crystal, TildeOperatorExamples) {
  const FockContext ctx(2, {0, 1});
  EXPECT_EQ(f_tilde(ctx, mp2(E, E), 0), mp2({1}, E));
  EXPECT_EQ(f_tilde(ctx, mp2(E, {1}), 0), mp2({1}, {1}));
  EXPECT_EQ(f_tilde(ctx, mp2({2}, E), 0), mp2({3}, E));
  EXPECT_EQ(e_tilde(ctx, mp2({3}, E), 0), mp2({2}, E));
  EXPECT_FALSE(e_tilde(ctx, mp2(E, E), 0));
  EXPECT_FALSE(e_tilde(ctx, mp2(E, E), 1));
}

TEST(Crystal, SmallGraph) {
  const FockContext ctx(2, {0, 1});
  const CrystalGraph g = generate_crystal(ctx, 2);
  std::set<Multipartition> deg2;
  for (const auto& v : g.vertices()) {
    if (v.degree == 2) deg2.insert(v.mp);
  }
  EXPECT_EQ(deg2, (std::set<Multipartition>{mp2({2}, E), mp2({1}, {1})}));
  EXPECT_EQ(generate_crystal(ctx, 0).vertices().size(), 1u);
  EXPECT_TRUE(generate_crystal(ctx, 0).edges().empty());
}

TEST(Crystal, WeightInfo) {
  const FockContext sym3 = FockContext::symmetric(3);
  const WeightInfo w = weight_info(sym3, {1, 0});
  EXPECT_EQ(w.hub, (std::vector<int>{1, 5}));
  EXPECT_EQ(w.defect, 2);
  EXPECT_EQ(weight_info(sym3, {0, 0}).hub, (std::vector<int>{3, 3}));
  EXPECT_EQ(weight_info(sym3, {0, 0}).defect, 0);
  const WeightInfo w1 = weight_info(FockContext::symmetric(1), {1, 1});
  EXPECT_EQ(w1.hub, (std::vector<int>{1, 1}));
  EXPECT_EQ(w1.defect, 2);
  EXPECT_EQ(cartan_matrix(2), (std::vector<std::vector<int>>{{2, -2}, {-2, 2}}));
  EXPECT_EQ(cartan_matrix(3)[0], (std::vector<int>{2, -1, -1}));
}

TEST(Crystal, Externality) {
  const BlockReducedGraph b3 = block_reduced(generate_crystal(FockContext::symmetric(3), 4));
  EXPECT_TRUE(is_external(b3, {1, 0}));
  EXPECT_TRUE(is_external(b3, {0, 0}));
  const BlockReducedGraph b1 = block_reduced(generate_crystal(FockContext::symmetric(1), 4));
  EXPECT_FALSE(is_external(b1, {1, 1}));
  EXPECT_THROW(is_external(b1, {0, 3}), std::invalid_argument);
}

TEST(Crystal, ResidueCollectedPath) {
  const FockContext ctx(2, {0, 1});
  EXPECT_EQ(residue_collected_path(ctx, mp2({3}, E)), (std::vector<PathStep>{{0, 1}, {1, 1}, {0, 1}}));
  EXPECT_EQ(residue_collected_path(ctx, mp2({2, 1}, E)), (std::vector<PathStep>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(residue_collected_path(ctx, mp2(E, E)).empty());
  EXPECT_THROW(residue_collected_path(ctx, mp2({2, 2}, E)), NotInCrystal);
}

// Level one, e = 2: vertices are 2-regular partitions (distinct parts).
TEST(Crystal, LevelOneCountsE2) {
  const CrystalGraph g = generate_crystal(FockContext(2, {0}), 9);
  EXPECT_EQ(vertices_per_degree(g), (std::vector<int>{1, 1, 1, 2, 2, 3, 4, 5, 6, 8}));
  for (const auto& v : g.vertices()) EXPECT_TRUE(v.mp[0].is_e_regular(2));
}

// Level one, e = 3: 3-regular partitions.
TEST(Crystal, LevelOneCountsE3) {
  const CrystalGraph g = generate_crystal(FockContext(3, {0}), 8);
  EXPECT_EQ(vertices_per_degree(g), (std::vector<int>{1, 1, 2, 2, 4, 5, 7, 9, 13}));
  for (const auto& v : g.vertices()) EXPECT_TRUE(v.mp[0].is_e_regular(3));
}

TEST(CrystalProperty, TildeOperatorsAreInverse) {
  for (const FockContext& ctx : {FockContext(2, {0, 1}), FockContext::symmetric(2), FockContext(3, {0, 2, 2})}) {
    const CrystalGraph g = generate_crystal(ctx, 6);
    for (const auto& v : g.vertices()) {
      for (int i = 0; i < ctx.e(); ++i) {
        if (auto up = f_tilde(ctx, v.mp, i)) {
          EXPECT_EQ(e_tilde(ctx, *up, i), v.mp);
        }
        if (auto down = e_tilde(ctx, v.mp, i)) {
          EXPECT_EQ(f_tilde(ctx, *down, i), v.mp);
        }
      }
    }
  }
}

TEST(CrystalProperty, StringLengthsMatchHub) {
  for (const FockContext& ctx : {FockContext::symmetric(2), FockContext(3, {0, 1, 1})}) {
    const CrystalGraph g = generate_crystal(ctx, 6);
    for (const auto& v : g.vertices()) {
      for (int i = 0; i < ctx.e(); ++i) {
        const int phi = string_length(ctx, v.mp, i, true);
        const int eps = string_length(ctx, v.mp, i, false);
        EXPECT_EQ(phi - eps, v.weight.hub[static_cast<std::size_t>(i)]) << v.mp.to_string();
      }
    }
  }
}

// Weight multiplicities of an integrable module are invariant under the simple reflections.
TEST(CrystalProperty, WeightDimensionsAreWeylInvariant) {
  const int max_degree = 10;
  for (const FockContext& ctx : {FockContext::symmetric(1), FockContext::symmetric(2), FockContext(3, {0, 1})}) {
    const BlockReducedGraph b = block_reduced(generate_crystal(ctx, max_degree));
    for (const auto& [c, info] : b.vertices()) {
      for (int i = 0; i < ctx.e(); ++i) {
        Content r = c;
        r[static_cast<std::size_t>(i)] += info.hub[static_cast<std::size_t>(i)];
        int deg = 0;
        for (int x : r) deg += x;
        if (deg > max_degree) continue;
        ASSERT_TRUE(b.contains(r));
        EXPECT_EQ(b.dimensions().at(r), b.dimensions().at(c));
        EXPECT_EQ(b.info(r).defect, info.defect);
      }
    }
  }
}

TEST(CrystalProperty, PathReplaysToVertex) {
  const FockContext ctx = FockContext::symmetric(2);
  const CrystalGraph graph = generate_crystal(ctx, 7);
  for (const auto& v : graph.vertices()) {
    EXPECT_EQ(follow_path(ctx, residue_collected_path(ctx, v.mp)), v.mp);
  }
}

TEST(CrystalProperty, ParallelGenerationMatchesSequential) {
  const FockContext ctx = FockContext::symmetric(2);
  const CrystalGraph a = generate_crystal(ctx, 8, 1);
  const CrystalGraph b = generate_crystal(ctx, 8, 4);
  ASSERT_EQ(a.vertices().size(), b.vertices().size());
  for (std::size_t k = 0; k < a.vertices().size(); ++k) EXPECT_EQ(a.vertices()[k].mp, b.vertices()[k].mp);
  EXPECT_EQ(a.edges(), b.edges());
}

TEST(CrystalProperty, EdgesAreTildeSteps) {
  const FockContext ctx(2, {0, 1});
  const CrystalGraph g = generate_crystal(ctx, 7);
  for (const auto& e : g.edges()) {
    EXPECT_EQ(f_tilde(ctx, g.vertices()[e.from].mp, e.residue), g.vertices()[e.to].mp);
  }
}

TEST(CrystalProperty, DefectsAreEvenAtLevelOne) {
  const BlockReducedGraph b = block_reduced(generate_crystal(FockContext::symmetric(1), 13));
  for (const auto& [c, info] : b.vertices()) EXPECT_EQ(info.defect % 2, 0);
}
