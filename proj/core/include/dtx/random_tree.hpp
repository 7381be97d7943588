#ifndef DTX_RANDOM_TREE_HPP
#define DTX_RANDOM_TREE_HPP

#include "dtx/feature_space.hpp"
#include "dtx/tree.hpp"

#include <cstddef>
#include <cstdint>
#include <random>

namespace dtx {

struct RandomTreeOptions {
    std::size_t min_features = 1;
    std::size_t max_features = 6;
    std::size_t max_domain = 4;
    std::size_t max_depth = 6;
    std::size_t classes = 2;
    /// Chance, in percent, that a non-root node above max_depth is a leaf.
    unsigned leaf_percent = 30;
    /// Chance, in percent, that an edge groups several values.
    unsigned multi_value_percent = 30;
};

/// Seeded generator of valid trees: edges partition each tested domain,
/// features may repeat along a path, and no path aggregates to an empty
/// literal. Reproducible across platforms for a given seed.
DecisionTree random_tree(std::mt19937_64& rng, const RandomTreeOptions& opts = {});
Instance random_instance(std::mt19937_64& rng, const FeatureSpace& space);

} // namespace dtx

#endif
