#include "dtx/error.hpp"
#include "dtx/oracle.hpp"
#include "dtx/xplain.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <string>

namespace dtx {
namespace {

using test::eq;
using test::fixture;

NodeId node_named(const DecisionTree& t, const std::string& name) {
    for (NodeId n = 0; n < t.node_count(); ++n)
        if (t.node(n).name == name) return n;
    throw std::runtime_error("no node " + name);
}

FeatureId feat(const DecisionTree& t, const std::string& name) { return t.space().find_feature(name).value(); }

std::optional<std::string> witness_name(const DecisionTree& t, const RedundancyVerdict& v) {
    if (!v.witness) return std::nullopt;
    return t.space()[*v.witness].name;
}

TEST(ChkDown, FindsContraryLeafBelowUniversalFeature) {
    auto t = fixture("pairwise_and.json");
    const TreePath& p2 = *t.find_path("P2");
    UniversalSet u(t.space(), p2.literals);
    VisitMarks marks(t.node_count());
    EXPECT_FALSE(chk_down(t, node_named(t, "f"), 1, u, Revisit::All, marks));

    u.set_universal(feat(t, "x4"));
    VisitMarks marks2(t.node_count());
    EXPECT_TRUE(chk_down(t, node_named(t, "f"), 1, u, Revisit::All, marks2));
}

TEST(ChkDown, NoContraryBelowX2) {
    auto t = fixture("pairwise_and.json");
    UniversalSet u(t.space(), t.find_path("P2")->literals);
    u.set_universal(feat(t, "x2"));
    VisitMarks marks(t.node_count());
    EXPECT_FALSE(chk_down(t, node_named(t, "c"), 1, u, Revisit::Skip, marks));
}

TEST(ChkDown, Leaves) {
    auto t = fixture("pairwise_and.json");
    UniversalSet u(t.space(), LiteralSet{});
    VisitMarks marks(t.node_count());
    EXPECT_FALSE(chk_down(t, node_named(t, "p3"), 1, u, Revisit::All, marks));
    EXPECT_TRUE(chk_down(t, node_named(t, "p3"), 0, u, Revisit::All, marks));
}

TEST(ChkDown, SkipModeDoesNotRevisit) {
    auto t = fixture("pairwise_and.json");
    UniversalSet u(t.space(), LiteralSet{});
    VisitMarks marks(t.node_count());
    VisitCounter first, second;
    EXPECT_TRUE(chk_down(t, t.root(), 1, u, Revisit::Skip, marks, &first));
    EXPECT_FALSE(chk_down(t, t.root(), 1, u, Revisit::Skip, marks, &second));
    EXPECT_GT(first.examined, 0u);
    EXPECT_EQ(second.examined, 0u);
}

TEST(PathRedundancy, PairwiseConjunctionTree) {
    auto t = fixture("pairwise_and.json");
    auto v = is_path_redundant(t, *t.find_path("P2"));
    EXPECT_TRUE(v.redundant);
    EXPECT_EQ(witness_name(t, v), "x2");

    auto v3 = is_path_redundant(t, *t.find_path("P3"));
    EXPECT_FALSE(v3.redundant);
    EXPECT_FALSE(v3.witness.has_value());
}

TEST(PathRedundancy, OrTreeAndZhou) {
    auto a = fixture("disjunction.json");
    auto va = is_path_redundant(a, *a.find_path("P1"));
    EXPECT_TRUE(va.redundant);
    EXPECT_EQ(witness_name(a, va), "x1");

    auto z = fixture("zhou.json");
    std::vector<std::string> redundant;
    for (const auto& p : z.paths())
        if (is_path_redundant(z, p).redundant) redundant.push_back(p.id);
    EXPECT_EQ(redundant, std::vector<std::string>{"P1"});
    EXPECT_EQ(z.find_path("P1")->literals, eq(z.space(), {{"y>0.73", "N"}, {"x>0.64", "Y"}}));
}

TEST(PathRedundancy, RestaurantTree) {
    auto t = fixture("russell_norvig.json");
    std::vector<std::string> redundant;
    for (const auto& p : t.paths())
        if (is_path_redundant(t, p).redundant) redundant.push_back(p.id);
    EXPECT_EQ(redundant, (std::vector<std::string>{"Q3", "Q4"}));
    auto none = eq(t.space(), {{"Patrons", "None"}});
    EXPECT_EQ(t.find_path("Q1")->literals, none);
    EXPECT_FALSE(is_path_redundant(t, *t.find_path("Q1")).redundant);
}

TEST(PathRedundancy, RepeatedFeatureDecidedOnce) {
    auto t = fixture("repeated.json");
    EXPECT_FALSE(is_path_redundant(t, *t.find_path("P1")).redundant);
    auto q1 = is_path_redundant(t, *t.find_path("Q1"));
    EXPECT_TRUE(q1.redundant);
    EXPECT_EQ(witness_name(t, q1), "size");
    EXPECT_EQ(droppable_features(t, *t.find_path("Q1")), std::vector<FeatureId>{feat(t, "size")});
}

TEST(PathRedundancy, DroppableFeaturesDeepestFirst) {
    auto t = fixture("pairwise_and.json");
    EXPECT_EQ(droppable_features(t, *t.find_path("P2")), (std::vector<FeatureId>{feat(t, "x2"), feat(t, "x1")}));
    EXPECT_TRUE(droppable_features(t, *t.find_path("P3")).empty());
}

TEST(PathRedundancy, ForeignPathRejected) {
    auto a = fixture("disjunction.json");
    auto b = fixture("pairwise_and.json");
    try {
        is_path_redundant(a, b.paths()[0]);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ForeignPath);
    }
}

TEST(PathRedundancy, VisitBound) {
    for (const char* name : {"pairwise_and.json", "russell_norvig.json", "repeated.json", "playtennis.json"}) {
        auto t = fixture(name);
        for (const auto& p : t.paths()) {
            VisitCounter c;
            is_path_redundant(t, p, &c);
            EXPECT_LE(c.examined, t.node_count() + p.node_count()) << name << " " << p.id;
        }
    }
}

TEST(Entails, Examples) {
    auto t = fixture("pairwise_and.json");
    EXPECT_TRUE(entails(t, eq(t.space(), {{"x3", "1"}, {"x4", "1"}}), 1));
    EXPECT_FALSE(entails(t, eq(t.space(), {{"x3", "1"}}), 1));
    EXPECT_FALSE(entails(t, eq(t.space(), {{"x1", "1"}}), 1));
    EXPECT_FALSE(entails(t, LiteralSet{}, 1));
    for (const auto& p : t.paths()) EXPECT_TRUE(entails(t, p.literals, p.prediction)) << p.id;

    auto c = fixture("constant.json");
    EXPECT_TRUE(entails(c, LiteralSet{}, 0));
    EXPECT_FALSE(entails(c, LiteralSet{}, 1));

    LiteralSet unsat({{0, ValueSet(2)}});
    EXPECT_TRUE(entails(t, unsat, 0));
}

TEST(OnePiExplanation, FromPath) {
    auto t = fixture("pairwise_and.json");
    auto e = one_pi_explanation_path(t, *t.find_path("P2"));
    EXPECT_EQ(e.literals, eq(t.space(), {{"x3", "1"}, {"x4", "1"}}));
    EXPECT_EQ(e.target, 1u);
    EXPECT_TRUE(e.minimal);
    EXPECT_EQ(e.mode, ExplanationMode::PathRestricted);

    auto p3 = one_pi_explanation_path(t, *t.find_path("P3"));
    EXPECT_EQ(p3.literals, t.find_path("P3")->literals);

    auto z = fixture("zhou.json");
    EXPECT_EQ(one_pi_explanation_path(z, *z.find_path("P1")).literals, eq(z.space(), {{"x>0.64", "Y"}}));

    auto tennis = fixture("playtennis.json");
    const TreePath& overcast = *tennis.find_path("P2");
    EXPECT_EQ(overcast.literals, eq(tennis.space(), {{"Humidity", "high"}, {"Outlook", "overcast"}}));
    EXPECT_EQ(one_pi_explanation_path(tennis, overcast).literals, eq(tennis.space(), {{"Outlook", "overcast"}}));
}

TEST(OnePiExplanation, FromInstance) {
    auto t3 = fixture("four_feature.json");
    auto e = one_pi_explanation_instance(t3, test::instance(t3.space(), {"1", "1", "1", "1"}));
    EXPECT_EQ(e.literals, eq(t3.space(), {{"x1", "1"}, {"x3", "1"}}));
    EXPECT_EQ(e.mode, ExplanationMode::PathUnrestricted);

    auto a = fixture("disjunction.json");
    EXPECT_EQ(one_pi_explanation_instance(a, test::instance(a.space(), {"0", "1"})).literals,
              eq(a.space(), {{"x2", "1"}}));

    auto c = fixture("constant.json");
    EXPECT_TRUE(one_pi_explanation_instance(c, Instance{}).literals.empty());
}

TEST(OnePiExplanation, IsPiAccordingToOracle) {
    for (const char* name : {"pairwise_and.json", "four_feature.json", "russell_norvig.json", "poole_mackworth.json", "repeated.json"}) {
        auto t = fixture(name);
        Oracle o(t);
        for (const auto& p : t.paths()) {
            auto e = one_pi_explanation_path(t, p);
            EXPECT_TRUE(e.literals.is_subset_of(p.literals));
            EXPECT_TRUE(o.entails(e.literals, p.prediction)) << name << " " << p.id;
            for (const auto& l : e.literals)
                EXPECT_FALSE(o.entails(e.literals.without(l.feature), p.prediction)) << name << " " << p.id;
            EXPECT_TRUE(is_pi_explanation(t, e.literals, p.prediction));
            EXPECT_EQ(e.literals.size() < p.literals.size(), is_path_redundant(t, p).redundant);
        }
    }
}

TEST(PiCheck, Examples) {
    auto t = fixture("pairwise_and.json");
    EXPECT_TRUE(is_pi_explanation(t, eq(t.space(), {{"x3", "1"}, {"x4", "1"}}), 1));
    EXPECT_FALSE(is_pi_explanation(t, eq(t.space(), {{"x1", "1"}, {"x3", "1"}, {"x4", "1"}}), 1));
    EXPECT_FALSE(is_pi_explanation(t, eq(t.space(), {{"x3", "1"}}), 1));
}

} // namespace
} // namespace dtx
