#ifndef DTX_VALUE_SET_HPP
#define DTX_VALUE_SET_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dtx {

using ValueId = std::size_t;

/// Subset of a categorical domain {0, ..., domain_size-1}, stored as a bitset.
class ValueSet {
public:
    ValueSet() = default;
    explicit ValueSet(std::size_t domain_size);

    static ValueSet full(std::size_t domain_size);
    static ValueSet single(std::size_t domain_size, ValueId value);
    static ValueSet of(std::size_t domain_size, const std::vector<ValueId>& values);

    std::size_t domain_size() const { return size_; }
    std::size_t count() const;
    bool empty() const;
    bool is_full() const { return count() == size_; }
    bool contains(ValueId v) const;

    void insert(ValueId v);
    void erase(ValueId v);

    bool intersects(const ValueSet& other) const;
    bool is_subset_of(const ValueSet& other) const;
    ValueSet& operator&=(const ValueSet& other);
    ValueSet& operator|=(const ValueSet& other);
    friend ValueSet operator&(ValueSet a, const ValueSet& b) { return a &= b; }
    friend ValueSet operator|(ValueSet a, const ValueSet& b) { return a |= b; }
    /// Complement within the domain.
    ValueSet operator~() const;

    /// Members in ascending order.
    std::vector<ValueId> values() const;

    friend bool operator==(const ValueSet&, const ValueSet&) = default;
    friend bool operator<(const ValueSet& a, const ValueSet& b);

private:
    void trim();

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace dtx

#endif
