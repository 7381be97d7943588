#include "dtx/literal.hpp"

#include "dtx/error.hpp"

#include <algorithm>

namespace dtx {

bool literals_consistent(const Literal& a, const Literal& b) {
    return a.feature != b.feature || a.allowed.intersects(b.allowed);
}

LiteralSet::LiteralSet(std::vector<Literal> literals) : lits_(std::move(literals)) {
    std::sort(lits_.begin(), lits_.end(),
              [](const Literal& a, const Literal& b) { return a.feature < b.feature; });
    for (std::size_t i = 1; i < lits_.size(); ++i)
        if (lits_[i].feature == lits_[i - 1].feature)
            throw Error(ErrorKind::InconsistentLiterals,
                        "more than one literal on feature " + std::to_string(lits_[i].feature));
}

LiteralSet LiteralSet::from_instance(const Instance& x, const FeatureSpace& space) {
    validate_instance(space, x);
    LiteralSet out;
    out.lits_.reserve(space.size());
    for (FeatureId f = 0; f < space.size(); ++f)
        out.lits_.push_back({f, space.single(f, x.values[f])});
    return out;
}

const Literal* LiteralSet::find(FeatureId f) const {
    auto it = std::lower_bound(lits_.begin(), lits_.end(), f,
                               [](const Literal& l, FeatureId id) { return l.feature < id; });
    return (it != lits_.end() && it->feature == f) ? &*it : nullptr;
}

void LiteralSet::conjoin(const Literal& lit) {
    auto it = std::lower_bound(lits_.begin(), lits_.end(), lit.feature,
                               [](const Literal& l, FeatureId id) { return l.feature < id; });
    if (it != lits_.end() && it->feature == lit.feature)
        it->allowed &= lit.allowed;
    else
        lits_.insert(it, lit);
}

void LiteralSet::erase(FeatureId f) {
    std::erase_if(lits_, [f](const Literal& l) { return l.feature == f; });
}

LiteralSet LiteralSet::without(FeatureId f) const {
    LiteralSet out(*this);
    out.erase(f);
    return out;
}

bool LiteralSet::is_subset_of(const LiteralSet& other) const {
    return std::all_of(lits_.begin(), lits_.end(), [&](const Literal& l) {
        const Literal* o = other.find(l.feature);
        return o != nullptr && o->allowed == l.allowed;
    });
}

bool LiteralSet::satisfied_by(const Instance& x) const {
    return std::all_of(lits_.begin(), lits_.end(),
                       [&](const Literal& l) { return l.satisfied_by(x); });
}

bool LiteralSet::satisfiable() const {
    return std::none_of(lits_.begin(), lits_.end(),
                        [](const Literal& l) { return l.allowed.empty(); });
}

std::vector<FeatureId> LiteralSet::features() const {
    std::vector<FeatureId> out;
    out.reserve(lits_.size());
    for (const auto& l : lits_) out.push_back(l.feature);
    return out;
}

BigInt path_point_count(const FeatureSpace& space, const LiteralSet& lits) {
    BigInt n = 1;
    for (FeatureId f = 0; f < space.size(); ++f) {
        const Literal* l = lits.find(f);
        if (l == nullptr) {
            n *= space[f].domain_size();
            continue;
        }
        if (l->allowed.domain_size() != space[f].domain_size())
            throw Error(ErrorKind::InvalidArgument,
                        "literal on '" + space[f].name + "' has the wrong domain size");
        auto c = l->allowed.count();
        if (c == 0)
            throw Error(ErrorKind::InconsistentLiterals,
                        "literal on '" + space[f].name + "' admits no value");
        n *= c;
    }
    for (const auto& l : lits)
        if (l.feature >= space.size())
            throw Error(ErrorKind::UnknownFeature, "literal on unknown feature id");
    return n;
}

std::string to_string(const Literal& lit, const FeatureSpace& space) {
    const Feature& f = space[lit.feature];
    auto vals = lit.allowed.values();
    if (vals.size() == 1) return f.name + "=" + f.domain[vals.front()];
    std::string s = f.name + " in {";
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) s += ",";
        s += f.domain[vals[i]];
    }
    return s + "}";
}

std::string to_string(const LiteralSet& lits, const FeatureSpace& space) {
    std::string s = "{";
    bool first = true;
    for (const auto& l : lits) {
        if (!first) s += ", ";
        first = false;
        s += to_string(l, space);
    }
    return s + "}";
}

} // namespace dtx
