#include "dtx/oracle.hpp"

#include "dtx/error.hpp"

#include <algorithm>
#include <numeric>

namespace dtx {

Oracle::Oracle(const DecisionTree& tree, OracleBudget budget) : tree_(&tree), budget_(budget) {
    const BigInt points = tree.space().point_count();
    if (points > budget_.max_points)
        throw Error(ErrorKind::BudgetExceeded, "feature space has " + points.str() +
                                                   " points, oracle budget is " +
                                                   std::to_string(budget_.max_points));
    const auto n = static_cast<std::uint64_t>(points);
    table_.resize(n);

    const FeatureSpace& space = tree.space();
    Instance x{std::vector<ValueId>(space.size(), 0)};
    for (std::uint64_t i = 0; i < n; ++i) {
        table_[i] = classify(tree, x).prediction;
        // Odometer increment, feature 0 fastest.
        for (FeatureId f = 0; f < space.size(); ++f) {
            if (++x.values[f] < space[f].domain_size()) break;
            x.values[f] = 0;
        }
    }
}

std::uint64_t Oracle::index_of(const Instance& x) const {
    const FeatureSpace& space = tree_->space();
    std::uint64_t idx = 0;
    for (FeatureId f = space.size(); f-- > 0;) idx = idx * space[f].domain_size() + x.values[f];
    return idx;
}

bool Oracle::entails(const LiteralSet& lits, ClassId target) const {
    const FeatureSpace& space = tree_->space();
    std::vector<std::vector<ValueId>> choices(space.size());
    for (FeatureId f = 0; f < space.size(); ++f) {
        const Literal* l = lits.find(f);
        if (l == nullptr) {
            choices[f].resize(space[f].domain_size());
            std::iota(choices[f].begin(), choices[f].end(), ValueId{0});
        } else {
            choices[f] = l->allowed.values();
            if (choices[f].empty()) return true; // no point satisfies the literals
        }
    }
    for (const auto& l : lits)
        if (l.feature >= space.size()) throw Error(ErrorKind::UnknownFeature, "literal on unknown feature id");

    std::vector<std::size_t> pos(space.size(), 0);
    Instance x{std::vector<ValueId>(space.size())};
    while (true) {
        for (FeatureId f = 0; f < space.size(); ++f) x.values[f] = choices[f][pos[f]];
        if (table_[index_of(x)] != target) return false;
        FeatureId f = 0;
        for (; f < space.size(); ++f) {
            if (++pos[f] < choices[f].size()) break;
            pos[f] = 0;
        }
        if (f == space.size()) return true;
    }
}

std::vector<LiteralSet> Oracle::enumerate_pi(const LiteralSet& universe, ClassId target) const {
    const std::size_t m = universe.size();
    if (m > budget_.max_universe || m >= 64)
        throw Error(ErrorKind::BudgetExceeded, "universe of " + std::to_string(m) +
                                                   " literals exceeds the oracle budget of " +
                                                   std::to_string(budget_.max_universe));
    std::vector<Literal> lits(universe.begin(), universe.end());
    std::vector<std::uint64_t> found;
    std::vector<LiteralSet> out;

    for (std::size_t k = 0; k <= m; ++k) {
        // Combinations of k positions in lexicographic order.
        std::vector<std::size_t> comb(k);
        std::iota(comb.begin(), comb.end(), std::size_t{0});
        while (true) {
            std::uint64_t mask = 0;
            for (auto i : comb) mask |= std::uint64_t{1} << i;
            const bool covers_found =
                std::any_of(found.begin(), found.end(), [mask](std::uint64_t f) { return (f & mask) == f; });
            if (!covers_found) {
                std::vector<Literal> subset;
                for (auto i : comb) subset.push_back(lits[i]);
                LiteralSet s(std::move(subset));
                if (entails(s, target)) {
                    found.push_back(mask);
                    out.push_back(std::move(s));
                }
            }
            // Next combination.
            std::size_t i = k;
            while (i > 0 && comb[i - 1] == m - k + i - 1) --i;
            if (i == 0) break;
            ++comb[i - 1];
            for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return out;
}

bool Oracle::is_redundant(const TreePath& path) const {
    tree_->check_owns(path);
    return std::any_of(path.literals.begin(), path.literals.end(), [&](const Literal& l) {
        return entails(path.literals.without(l.feature), path.prediction);
    });
}

bool bf_entails(const DecisionTree& tree, const LiteralSet& lits, ClassId target, OracleBudget budget) {
    return Oracle(tree, budget).entails(lits, target);
}

std::vector<LiteralSet> bf_enumerate_pi(const DecisionTree& tree, const LiteralSet& universe, ClassId target,
                                        OracleBudget budget) {
    if (universe.size() > budget.max_universe)
        throw Error(ErrorKind::BudgetExceeded, "universe exceeds the oracle budget");
    return Oracle(tree, budget).enumerate_pi(universe, target);
}

bool bf_is_redundant(const DecisionTree& tree, const TreePath& path, OracleBudget budget) {
    return Oracle(tree, budget).is_redundant(path);
}

} // namespace dtx
