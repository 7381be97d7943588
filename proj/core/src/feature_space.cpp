#include "dtx/feature_space.hpp"

#include "dtx/error.hpp"

#include <algorithm>
#include <set>

namespace dtx {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Syntax: return "syntax error";
    case ErrorKind::Schema: return "schema error";
    case ErrorKind::UnknownFeature: return "unknown feature";
    case ErrorKind::UnknownValue: return "unknown value";
    case ErrorKind::UnknownClass: return "unknown class";
    case ErrorKind::DuplicateName: return "duplicate name";
    case ErrorKind::DomainTooSmall: return "domain too small";
    case ErrorKind::OverlappingEdges: return "non-disjoint edges";
    case ErrorKind::NonCoveringEdges: return "non-covering edges";
    case ErrorKind::Cycle: return "cycle";
    case ErrorKind::DanglingChild: return "dangling child";
    case ErrorKind::MultipleParents: return "multiple parents";
    case ErrorKind::UnreachableNode: return "unreachable node";
    case ErrorKind::EmptyPath: return "empty path";
    case ErrorKind::UnsupportedLiteral: return "unsupported literal kind";
    case ErrorKind::InvalidInstance: return "invalid instance";
    case ErrorKind::InconsistentLiterals: return "inconsistent literals";
    case ErrorKind::ForeignPath: return "path not from this tree";
    case ErrorKind::SourceInconsistency: return "tree/source inconsistency";
    case ErrorKind::BudgetExceeded: return "oracle budget exceeded";
    case ErrorKind::InvalidArgument: return "invalid argument";
    }
    return "error";
}

std::optional<ValueId> Feature::find_value(std::string_view value) const {
    auto it = std::find(domain.begin(), domain.end(), value);
    if (it == domain.end()) return std::nullopt;
    return static_cast<ValueId>(it - domain.begin());
}

FeatureSpace::FeatureSpace(std::vector<Feature> features) : features_(std::move(features)) {
    std::set<std::string> names;
    for (const auto& f : features_) {
        if (!names.insert(f.name).second)
            throw Error(ErrorKind::DuplicateName, "duplicate feature name '" + f.name + "'");
        if (f.domain.size() < 2)
            throw Error(ErrorKind::DomainTooSmall,
                        "feature '" + f.name + "' needs at least two domain values");
        std::set<std::string> values(f.domain.begin(), f.domain.end());
        if (values.size() != f.domain.size())
            throw Error(ErrorKind::DuplicateName, "duplicate value in domain of '" + f.name + "'");
    }
}

std::optional<FeatureId> FeatureSpace::find_feature(std::string_view name) const {
    for (FeatureId f = 0; f < features_.size(); ++f)
        if (features_[f].name == name) return f;
    return std::nullopt;
}

ValueSet FeatureSpace::single(FeatureId f, ValueId v) const {
    return ValueSet::single(features_.at(f).domain_size(), v);
}

BigInt FeatureSpace::point_count() const {
    BigInt n = 1;
    for (const auto& f : features_) n *= f.domain_size();
    return n;
}

void validate_instance(const FeatureSpace& space, const Instance& x) {
    if (x.values.size() != space.size())
        throw Error(ErrorKind::InvalidInstance,
                    "instance has " + std::to_string(x.values.size()) + " values, expected " +
                        std::to_string(space.size()));
    for (FeatureId f = 0; f < space.size(); ++f)
        if (x.values[f] >= space[f].domain_size())
            throw Error(ErrorKind::InvalidInstance,
                        "value index out of range for feature '" + space[f].name + "'");
}

} // namespace dtx
