#ifndef DTX_LITERAL_HPP
#define DTX_LITERAL_HPP

#include "dtx/feature_space.hpp"
#include "dtx/value_set.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dtx {

/// `x_f in allowed`. Equality and disequality literals are the special
/// cases |allowed| == 1 and |allowed| == |D_f| - 1.
struct Literal {
    FeatureId feature = 0;
    ValueSet allowed;

    bool satisfied_by(const Instance& x) const { return allowed.contains(x.values.at(feature)); }

    friend bool operator==(const Literal&, const Literal&) = default;
    friend bool operator<(const Literal& a, const Literal& b) {
        if (a.feature != b.feature) return a.feature < b.feature;
        return a.allowed < b.allowed;
    }
};

/// Two literals are inconsistent iff they constrain the same feature to
/// disjoint value sets.
bool literals_consistent(const Literal& a, const Literal& b);

/// Conjunction of literals with at most one literal per feature, kept
/// sorted by feature id.
class LiteralSet {
public:
    using const_iterator = std::vector<Literal>::const_iterator;

    LiteralSet() = default;
    /// Throws InconsistentLiterals if two literals share a feature.
    explicit LiteralSet(std::vector<Literal> literals);

    /// Equality literals {x_i = v_i} for every feature of the instance.
    static LiteralSet from_instance(const Instance& x, const FeatureSpace& space);

    std::size_t size() const { return lits_.size(); }
    bool empty() const { return lits_.empty(); }
    const_iterator begin() const { return lits_.begin(); }
    const_iterator end() const { return lits_.end(); }
    const Literal& operator[](std::size_t i) const { return lits_[i]; }

    const Literal* find(FeatureId f) const;
    bool constrains(FeatureId f) const { return find(f) != nullptr; }

    /// Conjoins `lit`: intersects with an existing literal on the same
    /// feature. The result may be an empty allowed set.
    void conjoin(const Literal& lit);
    /// Removes the literal on `f`, if any.
    void erase(FeatureId f);
    LiteralSet without(FeatureId f) const;

    bool is_subset_of(const LiteralSet& other) const;
    bool satisfied_by(const Instance& x) const;
    /// True iff no literal has an empty allowed set.
    bool satisfiable() const;
    std::vector<FeatureId> features() const;

    friend bool operator==(const LiteralSet&, const LiteralSet&) = default;
    friend bool operator<(const LiteralSet& a, const LiteralSet& b) { return a.lits_ < b.lits_; }

private:
    std::vector<Literal> lits_;
};

/// Number of points of `space` satisfying every literal in `lits`.
/// Throws InconsistentLiterals when a literal admits no value.
BigInt path_point_count(const FeatureSpace& space, const LiteralSet& lits);

/// Human-readable rendering, e.g. `{Outlook=overcast, Wind in {strong,weak}}`.
std::string to_string(const Literal& lit, const FeatureSpace& space);
std::string to_string(const LiteralSet& lits, const FeatureSpace& space);

} // namespace dtx

#endif
