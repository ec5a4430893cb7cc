#include "stcore/partition.hpp"

#include "internal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stcore {

using detail::checked_add;

namespace {

std::string join(const std::vector<Int>& v, char open, char close) {
    std::ostringstream os;
    os << open;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << close;
    return os.str();
}

}  // namespace

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Int Partition::total() const noexcept {
    Int sum = 0;
    for (Int p : parts_) sum += p;
    return sum;
}

std::string Partition::str() const { return join(parts_, '(', ')'); }

BetaSet::BetaSet(std::vector<Int> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end(), std::greater<Int>());
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (elems_[i] < 1)
            throw std::invalid_argument("beta-set elements must be positive");
        if (i > 0 && elems_[i] == elems_[i - 1])
            throw std::invalid_argument("beta-set elements must be distinct");
    }
}

bool BetaSet::contains(Int x) const noexcept {
    return std::binary_search(elems_.begin(), elems_.end(), x, std::greater<Int>());
}

Int BetaSet::max() const {
    if (empty()) throw std::out_of_range("empty beta-set has no maximum");
    return elems_.front();
}

Int BetaSet::min() const {
    if (empty()) throw std::out_of_range("empty beta-set has no minimum");
    return elems_.back();
}

std::string BetaSet::str() const { return join(elems_, '{', '}'); }

bool canonical_less(const BetaSet& a, const BetaSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.elements().begin(), a.elements().end(),
                                        b.elements().begin(), b.elements().end());
}

bool subset_setwise(const BetaSet& a, const BetaSet& b) {
    // both descending
    auto it = b.elements().begin();
    for (Int x : a.elements()) {
        while (it != b.elements().end() && *it > x) ++it;
        if (it == b.elements().end() || *it != x) return false;
        ++it;
    }
    return true;
}

Partition partition_of_beta(const BetaSet& b) {
    const Int n = static_cast<Int>(b.size());
    std::vector<Int> parts;
    parts.reserve(b.size());
    for (Int i = 0; i < n; ++i) parts.push_back(b.at(i) - (n - 1 - i));
    return Partition(std::move(parts));
}

BetaSet beta_of_partition(const Partition& p) {
    const Int n = static_cast<Int>(p.size());
    std::vector<Int> elems;
    elems.reserve(p.size());
    for (Int i = 0; i < n; ++i) elems.push_back(checked_add(p.at(i), n - 1 - i));
    return BetaSet(std::move(elems));
}

HookRow hook_row(const BetaSet& b, Int i) {
    if (i < 1 || i > static_cast<Int>(b.size()))
        throw std::out_of_range("hook row index out of range");
    const Int bi = b.at(static_cast<std::size_t>(i - 1));
    std::vector<Int> hooks;
    for (Int v = bi; v >= 1; --v) {
        // v is excluded exactly when bi - v is a later (smaller) element
        if (!b.contains(bi - v)) hooks.push_back(v);
    }
    return HookRow{i, BetaSet(std::move(hooks))};
}

std::vector<Int> hook_multiset(const Partition& p) {
    const BetaSet b = beta_of_partition(p);
    std::vector<Int> all;
    for (Int i = 1; i <= static_cast<Int>(b.size()); ++i) {
        const HookRow row = hook_row(b, i);
        all.insert(all.end(), row.hooks.elements().begin(), row.hooks.elements().end());
    }
    std::sort(all.begin(), all.end(), std::greater<Int>());
    return all;
}

namespace {

void require_positive_shift(Int a) {
    if (a < 1) throw std::invalid_argument("shift must be a positive integer");
}

std::vector<Int> shifted_up(const std::vector<Int>& v, Int a) {
    std::vector<Int> out;
    out.reserve(v.size());
    for (Int x : v) out.push_back(checked_add(x, a));
    return out;
}

std::vector<Int> shifted_down(const std::vector<Int>& v, Int a) {
    std::vector<Int> out;
    for (Int x : v)
        if (x > a) out.push_back(x - a);
    return out;
}

}  // namespace

Partition operator+(const Partition& p, Int a) {
    require_positive_shift(a);
    return Partition(shifted_up(p.parts(), a));
}

BetaSet operator+(const BetaSet& b, Int a) {
    require_positive_shift(a);
    return BetaSet(shifted_up(b.elements(), a));
}

Partition operator-(const Partition& p, Int a) {
    require_positive_shift(a);
    return Partition(shifted_down(p.parts(), a));
}

BetaSet operator-(const BetaSet& b, Int a) {
    require_positive_shift(a);
    return BetaSet(shifted_down(b.elements(), a));
}

bool contains_partitionwise(const Partition& a, const Partition& b) {
    if (a.size() > b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.at(i) > b.at(i)) return false;
    return true;
}

bool contains_partitionwise(const BetaSet& a, const BetaSet& b) {
    const Int n = static_cast<Int>(a.size());
    const Int m = static_cast<Int>(b.size());
    if (n > m) return false;
    // a_i <= b_i - (m - n) is the same comparison on the partitions
    for (Int i = 0; i < n; ++i)
        if (a.at(i) > b.at(i) - (m - n)) return false;
    return true;
}

Partition concat_split_check(const BetaSet& b, const BetaSet& g) {
    if (!b.empty() && !g.empty() && b.min() <= g.max())
        throw std::invalid_argument(
            "every element of the left beta-set must exceed every element of the right");
    std::vector<Int> merged = b.elements();
    merged.insert(merged.end(), g.elements().begin(), g.elements().end());
    const Partition whole = partition_of_beta(BetaSet(std::move(merged)));

    const Int m = static_cast<Int>(g.size());
    const BetaSet left_shifted = (m == 0) ? b : (b - m);
    std::vector<Int> concat = partition_of_beta(left_shifted).parts();
    const std::vector<Int> right = partition_of_beta(g).parts();
    concat.insert(concat.end(), right.begin(), right.end());
    if (concat != whole.parts())
        throw std::logic_error("concatenation identity failed");
    return whole;
}

BetaSet bump_element(const BetaSet& b, Int j, Int a) {
    if (j < 1 || j > static_cast<Int>(b.size()))
        throw std::out_of_range("bump index out of range");
    require_positive_shift(a);
    const Int bumped = checked_add(b.at(static_cast<std::size_t>(j - 1)), a);
    if (b.contains(bumped))
        throw std::invalid_argument("bumped value is already present");
    std::vector<Int> elems = b.elements();
    elems[static_cast<std::size_t>(j - 1)] = bumped;
    BetaSet result(std::move(elems));
    if (!contains_partitionwise(b, result))
        throw std::logic_error("bump lost partition-wise containment");
    return result;
}

}  // namespace stcore
