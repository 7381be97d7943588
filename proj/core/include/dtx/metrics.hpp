#ifndef DTX_METRICS_HPP
#define DTX_METRICS_HPP

#include "dtx/feature_space.hpp"
#include "dtx/tree.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dtx {

struct PathRecord {
    std::string id;
    std::size_t literal_count = 0;
    std::size_t explanation_size = 0;
    bool redundant = false;
    std::string witness; // feature name, empty for irredundant paths
    BigInt points;
    /// 100 * (literal_count - explanation_size) / literal_count
    Rational redundant_literal_pct;
};

/// Redundancy statistics of one tree.
///
/// depth: maximum number of internal nodes on a root-leaf path.
/// nodes: all nodes, internal and leaves.
/// Percentages are exact; the min/max/mean over redundant paths are empty
/// when no path is redundant.
struct TreeReport {
    std::string name;
    std::size_t depth = 0;
    std::size_t nodes = 0;
    std::size_t paths = 0;
    std::size_t redundant_paths = 0;
    BigInt space_size;
    BigInt redundant_points;
    Rational pct_redundant;
    Rational pct_coverage;
    std::optional<Rational> pct_min;
    std::optional<Rational> pct_max;
    std::optional<Rational> pct_avg;
    std::vector<PathRecord> details;
};

TreeReport tree_report(const DecisionTree& tree, std::string name = {});

/// Truncates toward zero for display.
long long display_pct(const Rational& pct);

struct BatchError {
    std::string file;
    std::string message;
};

using BatchRow = std::variant<TreeReport, BatchError>;

/// One row per input file, in input order. Parse failures become error
/// rows and do not affect the other rows.
std::vector<BatchRow> batch_report(const std::vector<std::filesystem::path>& files);

std::string report_to_json(const std::vector<BatchRow>& rows);
std::string report_to_text(const std::vector<BatchRow>& rows);

} // namespace dtx

#endif
