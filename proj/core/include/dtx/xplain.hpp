#ifndef DTX_XPLAIN_HPP
#define DTX_XPLAIN_HPP

#include "dtx/feature_space.hpp"
#include "dtx/literal.hpp"
#include "dtx/tree.hpp"

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace dtx {

enum class ExplanationMode { PathRestricted, PathUnrestricted };

/// Where an explanation's candidate literals come from: a tree path
/// (by path index) or a concrete instance.
using ExplanationSource = std::variant<std::size_t, Instance>;

struct Explanation {
    LiteralSet literals;
    ClassId target = 0;
    ExplanationMode mode = ExplanationMode::PathRestricted;
    ExplanationSource source;
    bool minimal = false;
};

/// Working state of the redundancy check: each feature is either
/// constrained to an allowed set or universal (free to take any value).
class UniversalSet {
public:
    /// Features constrained by `lits` are constrained, all others universal.
    UniversalSet(const FeatureSpace& space, const LiteralSet& lits);

    bool is_universal(FeatureId f) const { return !allowed_.at(f).has_value(); }
    const ValueSet& allowed(FeatureId f) const { return *allowed_.at(f); }
    void set_universal(FeatureId f) { allowed_.at(f).reset(); }
    void constrain(FeatureId f, ValueSet allowed) { allowed_.at(f) = std::move(allowed); }
    std::size_t size() const { return allowed_.size(); }

private:
    std::vector<std::optional<ValueSet>> allowed_;
};

/// Whether chk_down may skip nodes already examined (filtering, linear
/// total work) or must re-examine every sub-path.
enum class Revisit { Skip, All };

/// Per-call node marks used by Revisit::Skip.
class VisitMarks {
public:
    explicit VisitMarks(std::size_t node_count) : seen_(node_count, false) {}
    bool seen(NodeId n) const { return seen_.at(n); }
    void mark(NodeId n) { seen_.at(n) = true; }

private:
    std::vector<bool> seen_;
};

/// Instrumentation for complexity checks.
struct VisitCounter {
    std::size_t examined = 0;
};

/// Looks for a sub-path from `node` to a leaf predicting something other
/// than `target` that is consistent with `universals` and with the edges
/// leading from the root to `node`. Returns true iff one exists.
bool chk_down(const DecisionTree& tree, NodeId node, ClassId target,
              const UniversalSet& universals, Revisit rec, VisitMarks& visited,
              VisitCounter* counter = nullptr);

struct RedundancyVerdict {
    bool redundant = false;
    std::optional<FeatureId> witness; // first droppable feature, deepest first
};

/// Linear-time decision whether the path strictly contains a PI-explanation.
/// Features are examined from the deepest path node upwards, each made
/// universal in isolation; a feature tested several times is decided once
/// all of its nodes have been examined.
RedundancyVerdict is_path_redundant(const DecisionTree& tree, const TreePath& path,
                                    VisitCounter* counter = nullptr);

/// Every feature of the path that can individually be made universal,
/// in the order they are decided (deepest first).
std::vector<FeatureId> droppable_features(const DecisionTree& tree, const TreePath& path,
                                          VisitCounter* counter = nullptr);

/// True iff every point consistent with `lits` is classified `target`.
/// Single pruned traversal of the tree.
bool entails(const DecisionTree& tree, const LiteralSet& lits, ClassId target);

/// Greedy deepest-first elimination over the path's features. The result
/// is a subset-minimal entailing subset of the path literals.
Explanation one_pi_explanation_path(const DecisionTree& tree, const TreePath& path);

/// Greedy elimination over the instance's equality literals, highest
/// feature index first.
Explanation one_pi_explanation_instance(const DecisionTree& tree, const Instance& x);

/// entails(E) and no single literal of E can be dropped.
bool is_pi_explanation(const DecisionTree& tree, const LiteralSet& lits, ClassId target);

} // namespace dtx

#endif
