#include "dtx/random_tree.hpp"

#include "dtx/error.hpp"

#include <algorithm>
#include <utility>

namespace dtx {

namespace {

// std::uniform_int_distribution is implementation-defined; modulo draws
// keep generated trees identical across standard libraries.
std::size_t draw(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

class Grower {
public:
    Grower(std::mt19937_64& rng, const RandomTreeOptions& opts, TreeBuilder& builder)
        : rng_(rng), opts_(opts), b_(builder) {}

    NodeId grow(std::size_t depth, std::vector<ValueSet>& allowed) {
        std::vector<FeatureId> candidates;
        for (FeatureId f = 0; f < allowed.size(); ++f)
            if (allowed[f].count() >= 2) candidates.push_back(f);
        const bool stop = depth >= opts_.max_depth || candidates.empty() ||
                          (depth > 0 && draw(rng_, 100) < opts_.leaf_percent);
        if (stop) return b_.leaf(draw(rng_, opts_.classes));

        const FeatureId f = candidates[draw(rng_, candidates.size())];
        std::vector<ValueId> vals = allowed[f].values();
        for (std::size_t i = vals.size(); i > 1; --i) std::swap(vals[i - 1], vals[draw(rng_, i)]);

        std::size_t blocks = vals.size();
        if (draw(rng_, 100) < opts_.multi_value_percent) blocks = 2 + draw(rng_, vals.size() - 1);

        const std::size_t dsize = allowed[f].domain_size();
        std::vector<ValueSet> parts(blocks, ValueSet(dsize));
        for (std::size_t i = 0; i < vals.size(); ++i)
            parts[i < blocks ? i : draw(rng_, blocks)].insert(vals[i]);
        // Values already excluded above still have to be covered by some edge.
        for (ValueId v : (~allowed[f]).values()) parts[draw(rng_, blocks)].insert(v);

        std::vector<Edge> edges;
        for (auto& part : parts) {
            ValueSet saved = allowed[f];
            allowed[f] &= part;
            NodeId child = grow(depth + 1, allowed);
            allowed[f] = std::move(saved);
            edges.push_back({std::move(part), child});
        }
        // Edge order follows value order of each block's smallest member.
        std::sort(edges.begin(), edges.end(),
                  [](const Edge& a, const Edge& b) { return a.values.values().front() < b.values.values().front(); });
        return b_.internal(f, std::move(edges));
    }

private:
    std::mt19937_64& rng_;
    const RandomTreeOptions& opts_;
    TreeBuilder& b_;
};

} // namespace

DecisionTree random_tree(std::mt19937_64& rng, const RandomTreeOptions& opts) {
    if (opts.max_domain < 2 || opts.classes < 1 || opts.min_features > opts.max_features)
        throw Error(ErrorKind::InvalidArgument, "invalid random tree options");

    const std::size_t n = opts.min_features + draw(rng, opts.max_features - opts.min_features + 1);
    std::vector<Feature> features;
    for (std::size_t i = 0; i < n; ++i) {
        Feature f;
        f.name = "x" + std::to_string(i + 1);
        const std::size_t d = 2 + draw(rng, opts.max_domain - 1);
        for (std::size_t v = 0; v < d; ++v) f.domain.push_back(std::to_string(v));
        features.push_back(std::move(f));
    }
    std::vector<std::string> classes;
    for (std::size_t c = 0; c < opts.classes; ++c) classes.push_back(std::to_string(c));

    FeatureSpace space(std::move(features));
    std::vector<ValueSet> allowed;
    for (FeatureId f = 0; f < space.size(); ++f) allowed.push_back(space.full(f));

    TreeBuilder builder(space, std::move(classes));
    Grower grower(rng, opts, builder);
    NodeId root = grower.grow(0, allowed);
    return std::move(builder).build(root);
}

Instance random_instance(std::mt19937_64& rng, const FeatureSpace& space) {
    Instance x;
    for (FeatureId f = 0; f < space.size(); ++f) x.values.push_back(draw(rng, space[f].domain_size()));
    return x;
}

} // namespace dtx
