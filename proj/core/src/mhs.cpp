#include "dtx/mhs.hpp"

#include "dtx/error.hpp"

#include <algorithm>
#include <set>

namespace dtx {

HittingSetInstance build_hitting_sets(const DecisionTree& tree, const ExplanationSource& source,
                                      ExplanationMode mode) {
    HittingSetInstance out;
    LiteralSet universe;
    if (mode == ExplanationMode::PathRestricted) {
        const auto* idx = std::get_if<std::size_t>(&source);
        if (idx == nullptr)
            throw Error(ErrorKind::InvalidArgument, "path-restricted hitting sets need a path source");
        if (*idx >= tree.paths().size())
            throw Error(ErrorKind::ForeignPath, "path index " + std::to_string(*idx) + " is out of range");
        const TreePath& p = tree.paths()[*idx];
        universe = p.literals;
        out.target = p.prediction;
    } else {
        const auto* x = std::get_if<Instance>(&source);
        if (x == nullptr)
            throw Error(ErrorKind::InvalidArgument, "path-unrestricted hitting sets need an instance source");
        out.target = classify(tree, *x).prediction;
        universe = LiteralSet::from_instance(*x, tree.space());
    }
    out.universe.assign(universe.begin(), universe.end());

    for (const TreePath* q : tree.contrary_paths(out.target)) {
        std::vector<std::size_t> hit;
        for (std::size_t i = 0; i < out.universe.size(); ++i) {
            const Literal* ql = q->literals.find(out.universe[i].feature);
            if (ql != nullptr && !literals_consistent(out.universe[i], *ql)) hit.push_back(i);
        }
        if (hit.empty())
            throw Error(ErrorKind::SourceInconsistency,
                        "tree/source inconsistency: no candidate literal contradicts path " + q->id);
        out.sets.push_back(std::move(hit));
        out.origin_paths.push_back(q->index);
    }
    return out;
}

namespace {

// Branch on the first unhit set; a literal excluded in an earlier sibling
// branch is never chosen again, so each hitting set is reached once.
class MhsSearch {
public:
    MhsSearch(std::vector<IndexSet> sets, std::size_t universe_size)
        : sets_(std::move(sets)), hits_(sets_.size(), 0), chosen_(universe_size, false),
          excluded_(universe_size, false), member_of_(universe_size) {
        for (std::size_t s = 0; s < sets_.size(); ++s)
            for (auto lit : sets_[s]) member_of_[lit].push_back(s);
    }

    /// Minimal hitting sets with exactly `k` elements, sorted.
    std::vector<IndexSet> of_size(std::size_t k) {
        k_ = k;
        found_.clear();
        current_.clear();
        dfs();
        std::vector<IndexSet> out(found_.begin(), found_.end());
        return out;
    }

private:
    void dfs() {
        auto unhit = std::find(hits_.begin(), hits_.end(), 0u);
        if (unhit == hits_.end()) {
            if (current_.size() == k_ && is_minimal()) {
                IndexSet s = current_;
                std::sort(s.begin(), s.end());
                found_.insert(std::move(s));
            }
            return;
        }
        if (current_.size() == k_) return;

        const IndexSet& branch = sets_[static_cast<std::size_t>(unhit - hits_.begin())];
        std::vector<std::size_t> newly_excluded;
        for (auto lit : branch) {
            if (excluded_[lit]) continue;
            choose(lit);
            dfs();
            unchoose(lit);
            excluded_[lit] = true;
            newly_excluded.push_back(lit);
        }
        for (auto lit : newly_excluded) excluded_[lit] = false;
    }

    void choose(std::size_t lit) {
        chosen_[lit] = true;
        current_.push_back(lit);
        for (auto s : member_of_[lit]) ++hits_[s];
    }

    void unchoose(std::size_t lit) {
        chosen_[lit] = false;
        current_.pop_back();
        for (auto s : member_of_[lit]) --hits_[s];
    }

    // Every chosen literal is the sole hitter of some set.
    bool is_minimal() const {
        return std::all_of(current_.begin(), current_.end(), [&](std::size_t lit) {
            return std::any_of(member_of_[lit].begin(), member_of_[lit].end(),
                               [&](std::size_t s) { return hits_[s] == 1; });
        });
    }

    std::vector<IndexSet> sets_;
    std::vector<unsigned> hits_;
    std::vector<bool> chosen_;
    std::vector<bool> excluded_;
    std::vector<std::vector<std::size_t>> member_of_;
    IndexSet current_;
    std::size_t k_ = 0;
    std::set<IndexSet> found_;
};

} // namespace

std::vector<IndexSet> enumerate_mhs(const HittingSetInstance& family, std::optional<std::size_t> limit) {
    std::vector<IndexSet> sets = family.sets;
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (s.empty())
            throw Error(ErrorKind::SourceInconsistency, "hitting-set family contains an empty set");
        for (auto lit : s)
            if (lit >= family.universe.size())
                throw Error(ErrorKind::InvalidArgument, "hitting-set member outside the universe");
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    std::vector<IndexSet> out;
    if (limit && *limit == 0) return out;
    const std::size_t max_k = std::min(family.universe.size(), sets.size());
    MhsSearch search(std::move(sets), family.universe.size());
    for (std::size_t k = 0; k <= max_k; ++k) {
        for (auto& s : search.of_size(k)) {
            out.push_back(std::move(s));
            if (limit && out.size() == *limit) return out;
        }
    }
    return out;
}

LiteralSet to_literals(const HittingSetInstance& family, const IndexSet& chosen) {
    std::vector<Literal> lits;
    lits.reserve(chosen.size());
    for (auto i : chosen) lits.push_back(family.universe.at(i));
    return LiteralSet(std::move(lits));
}

std::vector<Explanation> enumerate_pi_explanations(const DecisionTree& tree, const ExplanationSource& source,
                                                   ExplanationMode mode, std::optional<std::size_t> limit) {
    HittingSetInstance family = build_hitting_sets(tree, source, mode);
    std::vector<Explanation> out;
    for (const auto& s : enumerate_mhs(family, limit))
        out.push_back({to_literals(family, s), family.target, mode, source, true});
    return out;
}

} // namespace dtx
