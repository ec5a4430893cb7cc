#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stcore {

using Int = std::int64_t;

/// Weakly decreasing tuple of positive integers. The empty partition is a
/// legal value and is the minimum under partition-wise containment.
class Partition {
public:
    Partition() = default;
    /// Parts must be weakly decreasing and every part >= 1.
    explicit Partition(std::vector<Int> parts);

    const std::vector<Int>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    Int at(std::size_t i) const { return parts_.at(i); }
    Int total() const noexcept;

    std::string str() const;  // "(7, 6, 4, 4, 1)"

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<Int> parts_;
};

/// Strictly decreasing set of positive integers: the first-column hook
/// lengths of a partition. Always stored descending; the empty set is legal.
class BetaSet {
public:
    BetaSet() = default;
    /// Accepts elements in any order; rejects duplicates and entries < 1.
    explicit BetaSet(std::vector<Int> elements);

    const std::vector<Int>& elements() const noexcept { return elems_; }
    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    Int at(std::size_t i) const { return elems_.at(i); }  // descending
    bool contains(Int x) const noexcept;
    Int max() const;  // throws on empty
    Int min() const;

    std::string str() const;  // "{11, 9, 6, 5, 1}"

    friend bool operator==(const BetaSet&, const BetaSet&) = default;

private:
    std::vector<Int> elems_;
};

/// One row of a hook diagram: the hook numbers in the row of beta_i.
/// Within a row the hook numbers are distinct.
struct HookRow {
    Int row = 0;  // 1-based
    BetaSet hooks;
};

/// Fixed order for collections of beta-sets: size ascending, then
/// lexicographic on the descending element vectors.
bool canonical_less(const BetaSet& a, const BetaSet& b);

/// Set-wise containment (every element of a is an element of b).
bool subset_setwise(const BetaSet& a, const BetaSet& b);

/// P(b)_i = b_i - (n - i). Inverse of beta_of_partition.
Partition partition_of_beta(const BetaSet& b);
/// beta(p)_i = p_i + (n - i).
BetaSet beta_of_partition(const Partition& p);

/// H_i = {1, ..., b_i} minus the differences b_i - b_j for j > i.
HookRow hook_row(const BetaSet& b, Int i);
/// All hook numbers of the partition, with multiplicity, descending.
std::vector<Int> hook_multiset(const Partition& p);

/// Element-wise shift by a positive amount.
Partition operator+(const Partition& p, Int a);
BetaSet operator+(const BetaSet& b, Int a);
/// Element-wise decrease by a positive amount; entries that would drop below
/// 1 are deleted, so + and - do not commute.
Partition operator-(const Partition& p, Int a);
BetaSet operator-(const BetaSet& b, Int a);

/// Partition-wise containment: |a| <= |b| and a_i <= b_i for all i <= |a|.
/// The beta-set overload compares the associated partitions.
bool contains_partitionwise(const Partition& a, const Partition& b);
bool contains_partitionwise(const BetaSet& a, const BetaSet& b);

/// P(b ∪ g) for min(b) > max(g), checked against the concatenation identity
/// P(b - |g|) followed by P(g).
Partition concat_split_check(const BetaSet& b, const BetaSet& g);

/// Replace the j-th element (1-based) by b_j + a; requires b_j + a absent.
/// The input is always contained partition-wise in the result.
BetaSet bump_element(const BetaSet& b, Int j, Int a);

}  // namespace stcore
