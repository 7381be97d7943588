#include "dtx/metrics.hpp"
#include "dtx/oracle.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>

namespace dtx {
namespace {

using test::fixture;

// Percent of points classified through a redundant path, by exhaustion.
Rational coverage_by_exhaustion(const DecisionTree& t) {
    Oracle o(t);
    std::uint64_t hit = 0, total = 0;
    test::for_each_point(t.space(), [&](const Instance& x) {
        ++total;
        if (o.is_redundant(*classify(t, x).path)) ++hit;
    });
    return Rational(100 * static_cast<long long>(hit), static_cast<long long>(total));
}

TEST(Metrics, ZhouTree) {
    auto t = fixture("zhou.json");
    auto r = tree_report(t, "zhou");
    EXPECT_EQ(r.depth, 2u);
    EXPECT_EQ(r.nodes, 5u);
    EXPECT_EQ(r.paths, 3u);
    EXPECT_EQ(r.redundant_paths, 1u);
    EXPECT_EQ(r.pct_redundant, Rational(100, 3));
    EXPECT_EQ(display_pct(r.pct_redundant), 33);
    EXPECT_EQ(r.pct_coverage, coverage_by_exhaustion(t));
    EXPECT_EQ(r.pct_coverage, Rational(25));
    EXPECT_EQ(r.pct_min, Rational(50));
    EXPECT_EQ(r.pct_avg, Rational(50));
    EXPECT_EQ(r.details[1].witness, "y>0.73");
    EXPECT_EQ(r.details[1].points, 1);
}

TEST(Metrics, TextbookTrees) {
    auto rn = fixture("russell_norvig.json");
    auto r = tree_report(rn);
    EXPECT_EQ(r.paths, 8u);
    EXPECT_EQ(r.redundant_paths, 2u);
    EXPECT_EQ(r.pct_redundant, Rational(25));
    EXPECT_EQ(r.pct_coverage, coverage_by_exhaustion(rn));
    EXPECT_EQ(display_pct(r.pct_coverage), 6);

    auto pm = fixture("poole_mackworth.json");
    auto q = tree_report(pm);
    EXPECT_EQ(q.paths, 4u);
    EXPECT_EQ(q.redundant_paths, 2u);
    EXPECT_EQ(q.pct_redundant, Rational(50));
    EXPECT_EQ(q.pct_coverage, coverage_by_exhaustion(pm));
}

TEST(Metrics, NoRedundantPaths) {
    auto r = tree_report(fixture("constant.json"));
    EXPECT_EQ(r.redundant_paths, 0u);
    EXPECT_EQ(r.pct_redundant, 0);
    EXPECT_EQ(r.pct_coverage, 0);
    EXPECT_FALSE(r.pct_min.has_value());
    EXPECT_FALSE(r.pct_max.has_value());
    EXPECT_FALSE(r.pct_avg.has_value());
    auto text = report_to_text({r});
    auto row = text.substr(text.rfind('\n', text.size() - 2) + 1);
    EXPECT_EQ(row.substr(row.size() - 4), "  -\n") << text;
}

TEST(Metrics, DisplayTruncates) {
    EXPECT_EQ(display_pct(Rational(200, 3)), 66);
    EXPECT_EQ(display_pct(Rational(25, 4)), 6);
    EXPECT_EQ(display_pct(Rational(100)), 100);
    EXPECT_EQ(display_pct(Rational(0)), 0);
}

TEST(Batch, EmptyInput) {
    auto rows = batch_report({});
    EXPECT_TRUE(rows.empty());
    EXPECT_EQ(report_to_json(rows), "[]\n");
}

TEST(Batch, MalformedFileIsIsolated) {
    auto dir = std::filesystem::temp_directory_path() / "dtx_metrics_test";
    std::filesystem::create_directories(dir);
    auto bad = dir / "broken.json";
    std::ofstream(bad) << R"({"features": [)";

    auto rows = batch_report({test::fixture_path("zhou.json"), bad, test::fixture_path("playtennis.json")});
    ASSERT_EQ(rows.size(), 3u);
    ASSERT_TRUE(std::holds_alternative<TreeReport>(rows[0]));
    ASSERT_TRUE(std::holds_alternative<BatchError>(rows[1]));
    ASSERT_TRUE(std::holds_alternative<TreeReport>(rows[2]));
    EXPECT_EQ(std::get<TreeReport>(rows[0]).name, "zhou");
    EXPECT_EQ(std::get<TreeReport>(rows[2]).name, "playtennis");
    EXPECT_NE(std::get<BatchError>(rows[1]).message.find("syntax"), std::string::npos);

    auto j = nlohmann::json::parse(report_to_json(rows));
    EXPECT_EQ(j[0]["pct_redundant"]["exact"], "100/3");
    EXPECT_EQ(j[0]["pct_redundant"]["display"], 33);
    EXPECT_EQ(j[0]["pct_coverage"]["exact"], "25");
    EXPECT_TRUE(j[1].contains("error"));
    EXPECT_EQ(j[2]["paths"], 3);

    auto text = report_to_text(rows);
    EXPECT_NE(text.find("zhou"), std::string::npos);
    EXPECT_NE(text.find("(mean)"), std::string::npos);
    EXPECT_NE(text.find("error: "), std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST(Batch, TextHeader) {
    auto text = report_to_text(batch_report({test::fixture_path("pairwise_and.json")}));
    std::istringstream in(text);
    std::string comment, header, row;
    std::getline(in, comment);
    std::getline(in, header);
    std::getline(in, row);
    EXPECT_EQ(comment[0], '#');
    for (const char* col : {"Tree", "D", "#N", "#P", "%R", "%C", "%m", "%M", "%avg"})
        EXPECT_NE(header.find(col), std::string::npos) << col;
    EXPECT_EQ(row.rfind("pairwise_and", 0), 0u);
    EXPECT_EQ(text.find("(mean)"), std::string::npos);
}

} // namespace
} // namespace dtx
