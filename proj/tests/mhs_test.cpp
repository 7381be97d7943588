#include "dtx/error.hpp"
#include "dtx/mhs.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

namespace dtx {
namespace {

using test::eq;
using test::fixture;
using Family = std::vector<IndexSet>;

HittingSetInstance family_of(std::size_t universe, Family sets) {
    HittingSetInstance h;
    for (std::size_t i = 0; i < universe; ++i) h.universe.push_back({i, ValueSet::single(2, 1)});
    h.sets = std::move(sets);
    h.origin_paths.resize(h.sets.size());
    return h;
}

// Hitting sets named by universe feature names.
std::vector<std::vector<std::string>> named(const DecisionTree& t, const HittingSetInstance& h) {
    std::vector<std::vector<std::string>> out;
    for (const auto& s : h.sets) {
        std::vector<std::string> names;
        for (auto i : s) names.push_back(t.space()[h.universe[i].feature].name);
        out.push_back(names);
    }
    return out;
}

TEST(HittingSets, RestrictedPairwiseConjunction) {
    auto t = fixture("pairwise_and.json");
    auto h = build_hitting_sets(t, t.find_path("P2")->index, ExplanationMode::PathRestricted);
    using V = std::vector<std::vector<std::string>>;
    EXPECT_EQ(named(t, h), (V{{"x1", "x3"}, {"x1", "x4"}, {"x3"}, {"x4"}}));
    std::vector<std::string> origins;
    for (auto i : h.origin_paths) origins.push_back(t.paths()[i].id);
    EXPECT_EQ(origins, (std::vector<std::string>{"Q1", "Q2", "Q3", "Q4"}));
    EXPECT_EQ(h.target, 1u);
}

TEST(HittingSets, UnrestrictedFromInstance) {
    auto t = fixture("four_feature.json");
    auto h = build_hitting_sets(t, test::instance(t.space(), {"1", "1", "1", "1"}), ExplanationMode::PathUnrestricted);
    using V = std::vector<std::vector<std::string>>;
    EXPECT_EQ(named(t, h), (V{{"x1", "x2"}, {"x1", "x4"}, {"x3"}}));
    EXPECT_EQ(h.universe.size(), 4u);
}

TEST(HittingSets, ConstantTreeHasNoSets) {
    auto t = fixture("constant.json");
    auto h = build_hitting_sets(t, std::size_t{0}, ExplanationMode::PathRestricted);
    EXPECT_TRUE(h.sets.empty());
    auto all = enumerate_mhs(h);
    ASSERT_EQ(all.size(), 1u);
    EXPECT_TRUE(all[0].empty());
}

TEST(HittingSets, SourceMustMatchMode) {
    auto t = fixture("four_feature.json");
    EXPECT_THROW(build_hitting_sets(t, std::size_t{0}, ExplanationMode::PathUnrestricted), Error);
    EXPECT_THROW(build_hitting_sets(t, test::instance(t.space(), {"1", "1", "1", "1"}), ExplanationMode::PathRestricted),
                 Error);
    EXPECT_THROW(build_hitting_sets(t, std::size_t{99}, ExplanationMode::PathRestricted), Error);
}

TEST(Mhs, SmallFamilies) {
    EXPECT_EQ(enumerate_mhs(family_of(3, {{0, 1}, {0, 2}, {1}, {2}})), (Family{{1, 2}}));
    EXPECT_EQ(enumerate_mhs(family_of(4, {{0, 1}, {0, 3}, {2}})), (Family{{0, 2}, {1, 2, 3}}));
    EXPECT_EQ(enumerate_mhs(family_of(3, {{0, 1, 2}})), (Family{{0}, {1}, {2}}));
    EXPECT_EQ(enumerate_mhs(family_of(4, {{0, 1}, {2, 3}})), (Family{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
    EXPECT_EQ(enumerate_mhs(family_of(2, {})), (Family{{}}));
}

TEST(Mhs, DuplicateSetsDoNotChangeResult) {
    auto once = enumerate_mhs(family_of(4, {{0, 1}, {0, 3}, {2}}));
    auto twice = enumerate_mhs(family_of(4, {{0, 1}, {2}, {0, 3}, {2}, {0, 1}}));
    EXPECT_EQ(once, twice);
}

TEST(Mhs, Limit) {
    auto h = family_of(4, {{0, 1}, {2, 3}});
    EXPECT_EQ(enumerate_mhs(h, 1), (Family{{0, 2}}));
    EXPECT_EQ(enumerate_mhs(h, 3), (Family{{0, 2}, {0, 3}, {1, 2}}));
    EXPECT_TRUE(enumerate_mhs(h, 0).empty());
    EXPECT_EQ(enumerate_mhs(h, 100).size(), 4u);
}

TEST(Mhs, RejectsMalformedFamilies) {
    EXPECT_THROW(enumerate_mhs(family_of(2, {{0}, {}})), Error);
    EXPECT_THROW(enumerate_mhs(family_of(2, {{0, 5}})), Error);
}

TEST(PiEnumeration, Examples) {
    auto t = fixture("pairwise_and.json");
    auto r = enumerate_pi_explanations(t, t.find_path("P2")->index, ExplanationMode::PathRestricted);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].literals, eq(t.space(), {{"x3", "1"}, {"x4", "1"}}));
    EXPECT_TRUE(r[0].minimal);

    auto t3 = fixture("four_feature.json");
    auto u = enumerate_pi_explanations(t3, test::instance(t3.space(), {"1", "1", "1", "1"}),
                                       ExplanationMode::PathUnrestricted);
    ASSERT_EQ(u.size(), 2u);
    EXPECT_EQ(u[0].literals, eq(t3.space(), {{"x1", "1"}, {"x3", "1"}}));
    EXPECT_EQ(u[1].literals, eq(t3.space(), {{"x2", "1"}, {"x3", "1"}, {"x4", "1"}}));

    // The restricted view of the same instance only sees the path literals.
    auto p2 = classify(t3, test::instance(t3.space(), {"1", "1", "1", "1"})).path;
    auto rr = enumerate_pi_explanations(t3, p2->index, ExplanationMode::PathRestricted);
    ASSERT_EQ(rr.size(), 1u);
    EXPECT_EQ(rr[0].literals, eq(t3.space(), {{"x1", "1"}, {"x3", "1"}}));

    auto a = fixture("disjunction.json");
    auto ua = enumerate_pi_explanations(a, test::instance(a.space(), {"0", "1"}), ExplanationMode::PathUnrestricted);
    ASSERT_EQ(ua.size(), 1u);
    EXPECT_EQ(ua[0].literals, eq(a.space(), {{"x2", "1"}}));
}

TEST(PiEnumeration, RestaurantRedundantPath) {
    auto t = fixture("russell_norvig.json");
    const TreePath& q3 = *t.find_path("Q3");
    auto all = enumerate_pi_explanations(t, q3.index, ExplanationMode::PathRestricted);
    ASSERT_FALSE(all.empty());
    for (const auto& e : all) EXPECT_LT(e.literals.size(), q3.literals.size());
}

} // namespace
} // namespace dtx
