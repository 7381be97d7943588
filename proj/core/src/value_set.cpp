#include "dtx/value_set.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace dtx {

namespace {
constexpr std::size_t kBits = 64;
}

ValueSet::ValueSet(std::size_t domain_size)
    : size_(domain_size), words_((domain_size + kBits - 1) / kBits, 0) {}

ValueSet ValueSet::full(std::size_t domain_size) {
    ValueSet s(domain_size);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    s.trim();
    return s;
}

ValueSet ValueSet::single(std::size_t domain_size, ValueId value) {
    ValueSet s(domain_size);
    s.insert(value);
    return s;
}

ValueSet ValueSet::of(std::size_t domain_size, const std::vector<ValueId>& values) {
    ValueSet s(domain_size);
    for (auto v : values) s.insert(v);
    return s;
}

std::size_t ValueSet::count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool ValueSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool ValueSet::contains(ValueId v) const {
    if (v >= size_) return false;
    return (words_[v / kBits] >> (v % kBits)) & 1u;
}

void ValueSet::insert(ValueId v) {
    assert(v < size_);
    words_[v / kBits] |= std::uint64_t{1} << (v % kBits);
}

void ValueSet::erase(ValueId v) {
    if (v >= size_) return;
    words_[v / kBits] &= ~(std::uint64_t{1} << (v % kBits));
}

bool ValueSet::intersects(const ValueSet& other) const {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i]) return true;
    return false;
}

bool ValueSet::is_subset_of(const ValueSet& other) const {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

ValueSet& ValueSet::operator&=(const ValueSet& other) {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

ValueSet& ValueSet::operator|=(const ValueSet& other) {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

ValueSet ValueSet::operator~() const {
    ValueSet s(*this);
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
}

std::vector<ValueId> ValueSet::values() const {
    std::vector<ValueId> out;
    for (ValueId v = 0; v < size_; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

bool operator<(const ValueSet& a, const ValueSet& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    // Compare as sorted member lists.
    return a.values() < b.values();
}

void ValueSet::trim() {
    if (size_ % kBits != 0 && !words_.empty())
        words_.back() &= (std::uint64_t{1} << (size_ % kBits)) - 1;
}

} // namespace dtx
