#include <filesystem>

#include <gtest/gtest.h>

#include "kcb/io.hpp"

using namespace kcb;

namespace {

const Partition E{};

Multipartition mp2(Partition a, Partition b) { return Multipartition{std::move(a), std::move(b)}; }

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("kcb_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Io, LaurentSerialization) {
  EXPECT_EQ(to_json(qint(3)).dump(), R"({"-2":1,"0":1,"2":1})");
  EXPECT_EQ(laurent_from_json(Json::parse(R"({"-2":1,"0":1,"2":1})")), qint(3));
  EXPECT_EQ(to_json(LaurentPoly()).dump(), "{}");
}

TEST(Io, MultipartitionSerialization) {
  EXPECT_EQ(to_json(mp2({3}, E)).dump(), "[[3],[]]");
  EXPECT_EQ(multipartition_from_json(Json::parse("[[2,1],[1]]")), mp2({2, 1}, {1}));
  EXPECT_EQ(parse_multipartition("[[3],[]]"), mp2({3}, E));
  EXPECT_THROW(parse_multipartition("[[1,2],[]]"), std::invalid_argument);
  EXPECT_ANY_THROW(parse_multipartition("[[3],"));
}

TEST(Io, RoundTrips) {
  const FockContext ctx(3, {0, 0, 2});
  EXPECT_EQ(context_from_json(to_json(ctx)), ctx);

  CanonicalBasis basis(FockContext(2, {0, 1}));
  const CrystalGraph graph = generate_crystal(basis.context(), 6);
  for (const auto& vx : graph.vertices()) {
    const CanonicalElement g = basis.element(vx.mp);
    EXPECT_EQ(fock_vector_from_json(to_json(g.vector)), g.vector);
    const CanonicalElement back = canonical_from_json(to_json(g));
    EXPECT_EQ(back.label, g.label);
    EXPECT_EQ(back.vector, g.vector);
    EXPECT_EQ(back.defect, g.defect);
    EXPECT_EQ(back.shape, g.shape);
  }
}

TEST(Io, SortedTermsLeadWithLabel) {
  CanonicalBasis basis(FockContext(2, {0, 1}));
  const auto terms = sorted_terms(basis.element(mp2({3}, E)).vector);
  ASSERT_EQ(terms.size(), 4u);
  EXPECT_EQ(terms.front().first, mp2({3}, E));
  EXPECT_EQ(terms.back().first, mp2({1}, {1, 1}));
}

TEST(Io, DotOutput) {
  const CrystalGraph g = generate_crystal(FockContext(2, {0, 1}), 0);
  const std::string dot = to_dot(g);
  EXPECT_NE(dot.find("digraph"), std::string::npos);
  EXPECT_NE(dot.find("[∅,∅]"), std::string::npos);
  const BlockReducedGraph b = block_reduced(generate_crystal(FockContext::symmetric(3), 2));
  EXPECT_EQ(hub_label(b.info({1, 0})), "[1,5]^2");
  EXPECT_NE(to_dot(b).find("[1,5]^2"), std::string::npos);
}

TEST(Io, ShapeTable) {
  const Json j = shape_table_json(4);
  EXPECT_EQ(j.at("rows").size(), 5u);
  EXPECT_EQ(j.at("rows").at(2).at("shape"), Json::parse("[1,1,2,1,1]"));
  EXPECT_NE(shape_table_text(4).find("1 1 2 1 1"), std::string::npos);
}

TEST(Io, DiskCacheRoundTrip) {
  const auto dir = fresh_dir("cache");
  const FockContext ctx = FockContext::symmetric(1);
  CanonicalBasis source(ctx);
  const CrystalGraph graph = generate_crystal(ctx, 5);
  for (const auto& vx : graph.vertices()) source.element(vx.mp);
  DiskCache cache(dir);
  const std::size_t written = cache.store_from(source);
  EXPECT_EQ(written, source.cache_size());
  EXPECT_EQ(cache.store_from(source), 0u);

  CanonicalBasis target(ctx);
  EXPECT_EQ(cache.load_into(target), source.cache_size());
  for (const auto& g : source.cached()) EXPECT_EQ(target.element(g.label).vector, g.vector);

  CanonicalBasis other(FockContext(2, {1, 0}));
  EXPECT_EQ(cache.load_into(other), 0u);
  EXPECT_NE(cache.path_for(ctx, mp2({1}, E)), cache.path_for(ctx, mp2(E, {1})));
  std::filesystem::remove_all(dir);
}
