#include "dtx/xplain.hpp"

#include "dtx/error.hpp"

#include <algorithm>
#include <cassert>

namespace dtx {

UniversalSet::UniversalSet(const FeatureSpace& space, const LiteralSet& lits)
    : allowed_(space.size()) {
    for (const auto& l : lits) allowed_.at(l.feature) = l.allowed;
}

namespace {

using Domains = std::vector<ValueSet>;

// Depth-first search for a leaf predicting something other than `target`
// whose path below `node` is consistent with `allowed`. `allowed` is
// restored before returning.
bool find_contrary(const DecisionTree& tree, NodeId node, ClassId target, Domains& allowed,
                   Revisit rec, VisitMarks* visited, VisitCounter* counter) {
    if (rec == Revisit::Skip) {
        if (visited->seen(node)) return false;
        visited->mark(node);
    }
    if (counter) ++counter->examined;
    const Node& n = tree.node(node);
    if (n.is_leaf()) return n.leaf_class != target;

    const FeatureId f = *n.feature;
    for (const Edge& e : n.edges) {
        if (!allowed[f].intersects(e.values)) continue;
        ValueSet saved = allowed[f];
        allowed[f] &= e.values;
        const bool hit = find_contrary(tree, e.child, target, allowed, rec, visited, counter);
        allowed[f] = std::move(saved);
        if (hit) return true;
    }
    return false;
}

Domains domains_of(const FeatureSpace& space, const LiteralSet& lits) {
    Domains d;
    d.reserve(space.size());
    for (FeatureId f = 0; f < space.size(); ++f) {
        const Literal* l = lits.find(f);
        d.push_back(l ? l->allowed : space.full(f));
    }
    return d;
}

// Intersection of the path edges on feature `f` strictly above step `j`.
ValueSet prefix_on(const DecisionTree& tree, const TreePath& path, std::size_t j, FeatureId f) {
    ValueSet s = tree.space().full(f);
    for (std::size_t i = 0; i < j; ++i) {
        const Node& n = tree.node(path.steps[i].node);
        if (*n.feature == f) s &= n.edges[path.steps[i].edge].values;
    }
    return s;
}

// Index of the shallowest path node testing each feature.
std::vector<std::size_t> first_tests(const DecisionTree& tree, const TreePath& path) {
    std::vector<std::size_t> first(tree.space().size(), path.steps.size());
    for (std::size_t j = path.steps.size(); j-- > 0;)
        first[*tree.node(path.steps[j].node).feature] = j;
    return first;
}

// Features of the path in the order they are decided when scanning from
// the deepest node upwards: a feature is decided at its shallowest test.
std::vector<FeatureId> decision_order(const DecisionTree& tree, const TreePath& path) {
    auto first = first_tests(tree, path);
    std::vector<FeatureId> order;
    for (std::size_t j = path.steps.size(); j-- > 0;) {
        FeatureId f = *tree.node(path.steps[j].node).feature;
        if (first[f] == j) order.push_back(f);
    }
    return order;
}

std::vector<FeatureId> scan_droppable(const DecisionTree& tree, const TreePath& path,
                                      bool stop_at_first, VisitCounter* counter) {
    tree.check_owns(path);
    const auto first = first_tests(tree, path);
    const Domains base = domains_of(tree.space(), path.literals);
    VisitMarks visited(tree.node_count());
    std::vector<bool> pinned(tree.space().size(), false); // some node of f found a contrary sub-path
    std::vector<FeatureId> out;

    for (std::size_t j = path.steps.size(); j-- > 0;) {
        if (counter) ++counter->examined;
        const PathStep& step = path.steps[j];
        const Node& n = tree.node(step.node);
        const FeatureId f = *n.feature;

        if (!pinned[f]) {
            Domains allowed = base;
            allowed[f] = prefix_on(tree, path, j, f);
            const ValueSet entry = allowed[f];
            for (std::size_t e = 0; e < n.edges.size() && !pinned[f]; ++e) {
                if (e == step.edge || !entry.intersects(n.edges[e].values)) continue;
                allowed[f] = entry & n.edges[e].values;
                if (find_contrary(tree, n.edges[e].child, path.prediction, allowed, Revisit::Skip,
                                  &visited, counter))
                    pinned[f] = true;
            }
        }
        if (j == first[f] && !pinned[f]) {
            out.push_back(f);
            if (stop_at_first) break;
        }
    }
    return out;
}

// Whether some contrary leaf is consistent with the path literals once the
// features in `universal` may take any value. Only sub-paths leaving the
// path at a node testing a universal feature can be consistent.
bool contrary_reachable(const DecisionTree& tree, const TreePath& path,
                        const std::vector<bool>& universal) {
    UniversalSet u(tree.space(), path.literals);
    for (FeatureId f = 0; f < universal.size(); ++f)
        if (universal[f]) u.set_universal(f);

    VisitMarks unused(tree.node_count());
    for (const PathStep& step : path.steps) {
        const Node& n = tree.node(step.node);
        if (!universal[*n.feature]) continue;
        for (std::size_t e = 0; e < n.edges.size(); ++e) {
            if (e == step.edge) continue;
            if (chk_down(tree, n.edges[e].child, path.prediction, u, Revisit::All, unused))
                return true;
        }
    }
    return false;
}

} // namespace

bool chk_down(const DecisionTree& tree, NodeId node, ClassId target, const UniversalSet& universals,
              Revisit rec, VisitMarks& visited, VisitCounter* counter) {
    const FeatureSpace& space = tree.space();
    if (universals.size() != space.size())
        throw Error(ErrorKind::InvalidArgument, "universal set does not match the feature space");
    Domains allowed;
    allowed.reserve(space.size());
    for (FeatureId f = 0; f < space.size(); ++f)
        allowed.push_back(universals.is_universal(f) ? space.full(f) : universals.allowed(f));

    // Points entering `node` satisfy every edge from the root down to it.
    for (NodeId c = node; tree.node(c).parent != kNoNode; c = tree.node(c).parent) {
        const Node& p = tree.node(tree.node(c).parent);
        allowed[*p.feature] &= p.edges[tree.node(c).parent_edge].values;
    }
    if (std::any_of(allowed.begin(), allowed.end(), [](const ValueSet& s) { return s.empty(); }))
        return false;
    return find_contrary(tree, node, target, allowed, rec, &visited, counter);
}

RedundancyVerdict is_path_redundant(const DecisionTree& tree, const TreePath& path,
                                    VisitCounter* counter) {
    auto dropped = scan_droppable(tree, path, true, counter);
    if (dropped.empty()) return {};
    return {true, dropped.front()};
}

std::vector<FeatureId> droppable_features(const DecisionTree& tree, const TreePath& path,
                                          VisitCounter* counter) {
    return scan_droppable(tree, path, false, counter);
}

bool entails(const DecisionTree& tree, const LiteralSet& lits, ClassId target) {
    const FeatureSpace& space = tree.space();
    for (const auto& l : lits) {
        if (l.feature >= space.size())
            throw Error(ErrorKind::UnknownFeature, "literal on unknown feature id");
        if (l.allowed.domain_size() != space[l.feature].domain_size())
            throw Error(ErrorKind::InvalidArgument,
                        "literal on '" + space[l.feature].name + "' has the wrong domain size");
    }
    if (!lits.satisfiable()) return true; // no point to falsify
    Domains allowed = domains_of(space, lits);
    return !find_contrary(tree, tree.root(), target, allowed, Revisit::All, nullptr, nullptr);
}

Explanation one_pi_explanation_path(const DecisionTree& tree, const TreePath& path) {
    tree.check_owns(path);
    std::vector<bool> universal(tree.space().size(), false);
    LiteralSet kept = path.literals;
    for (FeatureId f : decision_order(tree, path)) {
        universal[f] = true;
        if (contrary_reachable(tree, path, universal)) {
            universal[f] = false;
            continue;
        }
        kept.erase(f);
        assert(entails(tree, kept, path.prediction));
    }
    return {std::move(kept), path.prediction, ExplanationMode::PathRestricted, path.index, true};
}

Explanation one_pi_explanation_instance(const DecisionTree& tree, const Instance& x) {
    const ClassId target = classify(tree, x).prediction;
    LiteralSet kept = LiteralSet::from_instance(x, tree.space());
    for (FeatureId f = tree.space().size(); f-- > 0;) {
        LiteralSet trial = kept.without(f);
        if (entails(tree, trial, target)) kept = std::move(trial);
    }
    return {std::move(kept), target, ExplanationMode::PathUnrestricted, x, true};
}

bool is_pi_explanation(const DecisionTree& tree, const LiteralSet& lits, ClassId target) {
    if (!entails(tree, lits, target)) return false;
    return std::none_of(lits.begin(), lits.end(), [&](const Literal& l) {
        return entails(tree, lits.without(l.feature), target);
    });
}

} // namespace dtx
