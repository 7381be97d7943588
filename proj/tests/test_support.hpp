#ifndef DTX_TESTS_TEST_SUPPORT_HPP
#define DTX_TESTS_TEST_SUPPORT_HPP

#include "dtx/feature_space.hpp"
#include "dtx/literal.hpp"
#include "dtx/tree.hpp"
#include "dtx/tree_io.hpp"

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace dtx::test {

inline std::string fixture_path(const std::string& name) {
    return std::string(DTX_FIXTURE_DIR) + "/" + name;
}

inline DecisionTree fixture(const std::string& name) { return load_tree(fixture_path(name)); }

/// Literal set from (feature name, value names) pairs.
inline LiteralSet lits(const FeatureSpace& space,
                       std::initializer_list<std::pair<std::string, std::vector<std::string>>> items) {
    std::vector<Literal> out;
    for (const auto& [fname, values] : items) {
        FeatureId f = space.find_feature(fname).value();
        ValueSet s(space[f].domain_size());
        for (const auto& v : values) s.insert(space[f].find_value(v).value());
        out.push_back({f, s});
    }
    return LiteralSet(std::move(out));
}

/// Equality literals, e.g. eq(space, {{"x3", "1"}, {"x4", "1"}}).
inline LiteralSet eq(const FeatureSpace& space, std::initializer_list<std::pair<std::string, std::string>> items) {
    std::vector<Literal> out;
    for (const auto& [fname, value] : items) {
        FeatureId f = space.find_feature(fname).value();
        out.push_back({f, space.single(f, space[f].find_value(value).value())});
    }
    return LiteralSet(std::move(out));
}

inline Instance instance(const FeatureSpace& space, std::initializer_list<std::string> values) {
    Instance x;
    FeatureId f = 0;
    for (const auto& v : values) x.values.push_back(space[f++].find_value(v).value());
    return x;
}

/// Calls `fn` on every point of the space (test-side enumeration, used to
/// derive expected values independently of the library's counting code).
inline void for_each_point(const FeatureSpace& space, const std::function<void(const Instance&)>& fn) {
    Instance x{std::vector<ValueId>(space.size(), 0)};
    while (true) {
        fn(x);
        FeatureId f = 0;
        for (; f < space.size(); ++f) {
            if (++x.values[f] < space[f].domain_size()) break;
            x.values[f] = 0;
        }
        if (f == space.size()) return;
    }
}

inline std::uint64_t count_points(const FeatureSpace& space, const LiteralSet& l) {
    std::uint64_t n = 0;
    for_each_point(space, [&](const Instance& x) {
        if (l.satisfied_by(x)) ++n;
    });
    return n;
}

} // namespace dtx::test

#endif
