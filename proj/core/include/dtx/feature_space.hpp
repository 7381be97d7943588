#ifndef DTX_FEATURE_SPACE_HPP
#define DTX_FEATURE_SPACE_HPP

#include "dtx/value_set.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dtx {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using FeatureId = std::size_t;

struct Feature {
    std::string name;
    std::vector<std::string> domain;

    std::size_t domain_size() const { return domain.size(); }
    std::optional<ValueId> find_value(std::string_view value) const;
};

/// Cartesian product of categorical feature domains.
///
/// Every domain has at least two distinct values and feature names are
/// unique; the constructor throws dtx::Error otherwise.
class FeatureSpace {
public:
    FeatureSpace() = default;
    explicit FeatureSpace(std::vector<Feature> features);

    std::size_t size() const { return features_.size(); }
    const Feature& operator[](FeatureId f) const { return features_.at(f); }
    const std::vector<Feature>& features() const { return features_; }

    std::optional<FeatureId> find_feature(std::string_view name) const;

    ValueSet full(FeatureId f) const { return ValueSet::full(features_.at(f).domain_size()); }
    ValueSet single(FeatureId f, ValueId v) const;

    /// Number of points, |D_1| * ... * |D_n|.
    BigInt point_count() const;

    friend bool operator==(const FeatureSpace&, const FeatureSpace&) = default;

private:
    std::vector<Feature> features_;
};

/// A concrete point of a feature space.
struct Instance {
    std::vector<ValueId> values;

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws ErrorKind::InvalidInstance when `x` is not a point of `space`.
void validate_instance(const FeatureSpace& space, const Instance& x);

} // namespace dtx

#endif
