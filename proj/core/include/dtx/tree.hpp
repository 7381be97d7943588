#ifndef DTX_TREE_HPP
#define DTX_TREE_HPP

#include "dtx/feature_space.hpp"
#include "dtx/literal.hpp"
#include "dtx/value_set.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dtx {

using NodeId = std::size_t;
using ClassId = std::size_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct Edge {
    ValueSet values;
    NodeId child = kNoNode;
};

struct Node {
    std::string name;                 // identifier used in the tree file
    std::optional<FeatureId> feature; // set for internal nodes
    std::vector<Edge> edges;          // internal nodes only
    ClassId leaf_class = 0;           // leaves only

    NodeId parent = kNoNode;
    std::size_t parent_edge = 0;      // index into the parent's edges

    bool is_leaf() const { return !feature.has_value(); }
};

/// One step of a root-to-leaf path: the internal node and the edge taken.
struct PathStep {
    NodeId node = kNoNode;
    std::size_t edge = 0;

    friend bool operator==(const PathStep&, const PathStep&) = default;
};

struct TreePath {
    std::size_t index = 0;         // position in left-to-right leaf order
    std::string id;                // P1, Q3, ... (see DecisionTree::paths)
    std::vector<PathStep> steps;   // internal nodes root -> leaf
    NodeId leaf = kNoNode;
    ClassId prediction = 0;
    LiteralSet literals;           // one aggregated literal per tested feature
    std::vector<std::size_t> tests_per_feature; // raw node count per feature

    std::size_t node_count() const { return steps.size() + 1; }
};

/// A univariate categorical decision tree over a feature space.
///
/// Construction validates that the node table is a tree rooted at `root`,
/// that the outgoing edges of every internal node partition the tested
/// feature's domain, and that no root-leaf path aggregates to an empty
/// literal. Instances are immutable afterwards.
///
/// Paths are enumerated once, in left-to-right leaf order. For two classes
/// paths predicting class 1 are named P1, P2, ... and paths predicting
/// class 0 are named Q1, Q2, ...; with more classes, paths predicting class
/// c are named C<c>.1, C<c>.2, ...
class DecisionTree {
public:
    DecisionTree(FeatureSpace space, std::vector<std::string> classes,
                 std::vector<Node> nodes, NodeId root);

    const FeatureSpace& space() const { return space_; }
    const std::vector<std::string>& classes() const { return classes_; }
    std::size_t class_count() const { return classes_.size(); }
    std::optional<ClassId> find_class(std::string_view name) const;

    NodeId root() const { return root_; }
    const Node& node(NodeId id) const { return nodes_.at(id); }
    const std::vector<Node>& nodes() const { return nodes_; }
    std::size_t node_count() const { return nodes_.size(); }

    const std::vector<TreePath>& paths() const { return paths_; }
    const TreePath& path_of_leaf(NodeId leaf) const;
    const TreePath* find_path(std::string_view id) const;
    /// Paths predicting a class other than `target`.
    std::vector<const TreePath*> contrary_paths(ClassId target) const;
    /// Paths predicting `target`.
    std::vector<const TreePath*> paths_of_class(ClassId target) const;

    /// Throws ForeignPath unless `path` is one of this tree's paths.
    void check_owns(const TreePath& path) const;

    /// Maximum number of internal nodes on a root-leaf path.
    std::size_t depth() const;

private:
    void validate_structure();
    void build_paths();

    FeatureSpace space_;
    std::vector<std::string> classes_;
    std::vector<Node> nodes_;
    NodeId root_;
    std::vector<TreePath> paths_;
    std::vector<std::size_t> leaf_path_; // node id -> path index
};

struct Classification {
    ClassId prediction;
    const TreePath* path;
};

/// Follows the unique root-leaf path whose edges admit the instance.
Classification classify(const DecisionTree& tree, const Instance& x);

/// Convenience for building trees in code.
class TreeBuilder {
public:
    TreeBuilder(FeatureSpace space, std::vector<std::string> classes);

    NodeId leaf(ClassId cls, std::string name = {});
    /// `edges` pairs a value subset with a child created earlier.
    NodeId internal(FeatureId feature, std::vector<Edge> edges, std::string name = {});
    /// Internal node with one edge per domain value, children in value order.
    NodeId split(FeatureId feature, const std::vector<NodeId>& children, std::string name = {});

    const FeatureSpace& space() const { return space_; }
    DecisionTree build(NodeId root) &&;

private:
    FeatureSpace space_;
    std::vector<std::string> classes_;
    std::vector<Node> nodes_;
};

} // namespace dtx

#endif
