#ifndef DTX_TREE_IO_HPP
#define DTX_TREE_IO_HPP

#include "dtx/feature_space.hpp"
#include "dtx/literal.hpp"
#include "dtx/tree.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace dtx {

/// Parses the JSON tree format:
///
///     {"features": [{"name": "x1", "domain": ["0", "1"]}, ...],
///      "classes":  ["0", "1"],
///      "root":     "n0",
///      "nodes": {"n0": {"feature": "x1",
///                       "edges": [{"values": ["0"], "child": "n1"}, ...]},
///                "n1": {"leaf": "1"}, ...}}
///
/// Syntax errors report the byte offset. Semantic problems are reported
/// with a distinct ErrorKind each.
DecisionTree parse_tree(std::string_view text);
DecisionTree load_tree(const std::filesystem::path& file);

/// Inverse of parse_tree. Node names and edge order are preserved.
std::string serialize_tree(const DecisionTree& tree);

/// `["v1", "v2", ...]` in feature order.
Instance parse_instance(const FeatureSpace& space, std::string_view json_text);
/// CSV with a header row of feature names (any column order).
std::vector<Instance> parse_instances_csv(const FeatureSpace& space, std::string_view csv_text);

/// `{"feature": "value" | ["v1", "v2", ...], ...}`
LiteralSet parse_literals(const FeatureSpace& space, std::string_view json_text);
/// Single-valued literals print as a string, others as an array of values.
std::string literals_to_json(const FeatureSpace& space, const LiteralSet& lits);

std::string read_file(const std::filesystem::path& file);

} // namespace dtx

#endif
