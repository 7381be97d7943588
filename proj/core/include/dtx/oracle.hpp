#ifndef DTX_ORACLE_HPP
#define DTX_ORACLE_HPP

#include "dtx/literal.hpp"
#include "dtx/tree.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dtx {

/// Limits for exhaustive checks. Inputs beyond either cap are refused
/// with ErrorKind::BudgetExceeded.
struct OracleBudget {
    std::uint64_t max_points = 1'000'000;
    std::size_t max_universe = 20;
};

/// Brute-force ground truth: tabulates the classifier over the whole
/// feature space once and answers every query by exhaustion.
class Oracle {
public:
    explicit Oracle(const DecisionTree& tree, OracleBudget budget = {});

    const DecisionTree& tree() const { return *tree_; }
    std::uint64_t point_count() const { return table_.size(); }

    /// True iff every point satisfying `lits` is classified `target`.
    bool entails(const LiteralSet& lits, ClassId target) const;

    /// All subset-minimal subsets of `universe` that entail `target`,
    /// ordered by cardinality, then by universe positions.
    std::vector<LiteralSet> enumerate_pi(const LiteralSet& universe, ClassId target) const;

    /// True iff dropping a single literal of the path keeps entailment.
    bool is_redundant(const TreePath& path) const;

private:
    std::uint64_t index_of(const Instance& x) const;

    const DecisionTree* tree_;
    OracleBudget budget_;
    std::vector<ClassId> table_;
};

bool bf_entails(const DecisionTree& tree, const LiteralSet& lits, ClassId target,
                OracleBudget budget = {});
std::vector<LiteralSet> bf_enumerate_pi(const DecisionTree& tree, const LiteralSet& universe,
                                        ClassId target, OracleBudget budget = {});
bool bf_is_redundant(const DecisionTree& tree, const TreePath& path, OracleBudget budget = {});

} // namespace dtx

#endif
