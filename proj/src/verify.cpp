#include "stcore/verify.hpp"

#include "ideal_enum.hpp"
#include "internal.hpp"

#include <algorithm>
#include <stdexcept>

namespace stcore {

namespace detail {

IdealWalker::IdealWalker(std::vector<Int> values,
                         const std::function<std::vector<Int>(Int)>& down_values)
    : values_(std::move(values)) {
    if (values_.size() > kMaxUniverse)
        throw std::invalid_argument("enumeration universe exceeds 64 elements");
    std::sort(values_.begin(), values_.end(), std::greater<Int>());
    index_by_value_.reserve(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) index_by_value_[values_[i]] = i;
    down_.resize(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        std::uint64_t mask = 0;
        for (Int v : down_values(values_[i])) {
            const auto it = index_by_value_.find(v);
            if (it == index_by_value_.end())
                throw std::logic_error("down-set left the universe");
            mask |= std::uint64_t{1} << it->second;
        }
        down_[i] = mask;
    }
}

BetaSet IdealWalker::to_beta(std::uint64_t mask) const {
    std::vector<Int> elems;
    elems.reserve(static_cast<std::size_t>(__builtin_popcountll(mask)));
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) elems.push_back(values_[i]);
    return BetaSet(std::move(elems));
}

void IdealWalker::walk(std::size_t idx, std::uint64_t in, std::uint64_t out,
                       const std::function<void(const BetaSet&)>& emit) const {
    while (idx < values_.size() && ((in | out) & (std::uint64_t{1} << idx))) ++idx;
    if (idx == values_.size()) {
        emit(to_beta(in));
        return;
    }
    walk(idx + 1, in, out | (std::uint64_t{1} << idx), emit);
    walk(idx + 1, in | down_[idx], out, emit);
}

void IdealWalker::walk_sized(std::size_t idx, std::uint64_t in, std::uint64_t out, Int n,
                             const std::function<void(const BetaSet&)>& emit) const {
    const Int have = __builtin_popcountll(in);
    if (have > n) return;
    const std::uint64_t decided = in | out;
    while (idx < values_.size() && (decided & (std::uint64_t{1} << idx))) ++idx;
    if (idx == values_.size()) {
        if (have == n) emit(to_beta(in));
        return;
    }
    const std::uint64_t undecided_mask = ~std::uint64_t{0} << idx;  // idx <= 63 here
    const Int undecided =
        static_cast<Int>(values_.size() - idx) - __builtin_popcountll(decided & undecided_mask);
    if (have + undecided < n) return;
    walk_sized(idx + 1, in, out | (std::uint64_t{1} << idx), n, emit);
    walk_sized(idx + 1, in | down_[idx], out, n, emit);
}

void IdealWalker::for_each(const std::function<void(const BetaSet&)>& emit) const {
    walk(0, 0, 0, emit);
}

void IdealWalker::for_each_of_size(Int n, const std::function<void(const BetaSet&)>& emit) const {
    walk_sized(0, 0, 0, n, emit);
}

}  // namespace detail

namespace {

detail::IdealWalker make_pair_walker(const CoreParams& params, const BetaSet& universe) {
    return detail::IdealWalker(universe.elements(), [&](Int v) {
        const BetaSet below = closure(params, BetaSet({v}));
        std::vector<Int> down;
        for (Int x : below.elements())
            if (universe.contains(x)) down.push_back(x);
        return down;
    });
}

}  // namespace

void for_each_closed_subset(const CoreParams& params, const BetaSet& universe,
                            const std::function<void(const BetaSet&)>& emit) {
    make_pair_walker(params, universe).for_each(emit);
}

std::vector<BetaSet> closed_subsets(const CoreParams& params, const BetaSet& universe) {
    std::vector<BetaSet> out;
    for_each_closed_subset(params, universe, [&](const BetaSet& b) { out.push_back(b); });
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<BetaSet> enumerate_core(const CoreParams& params, Int guard) {
    const BetaSet bm = maximal_beta(params);
    if (static_cast<Int>(bm.size()) > guard)
        throw std::invalid_argument("maximal beta-set has " + std::to_string(bm.size()) +
                                    " elements, exceeding the guard of " +
                                    std::to_string(guard));
    return closed_subsets(params, bm);
}

std::vector<BetaSet> enumerate_closed_of_size(const CoreParams& params, Int n) {
    if (n < 0) throw std::invalid_argument("size must be nonnegative");
    if (n == 0) return {BetaSet{}};
    // the maximum element m of any such set forces closure({m}) inside it,
    // so delta_size(m) <= n bounds the universe
    Int m_bound = 0;
    for (Int m = 1;; ++m) {
        if (delta_size(params, m) > n) {
            m_bound = m - 1;
            break;
        }
        if (m > static_cast<Int>(detail::kMaxUniverse))
            throw std::invalid_argument("size bound exceeds the enumeration guard");
    }
    std::vector<Int> universe(static_cast<std::size_t>(m_bound));
    for (Int v = 1; v <= m_bound; ++v) universe[static_cast<std::size_t>(v - 1)] = v;
    const BetaSet interval{std::move(universe)};
    std::vector<BetaSet> out;
    make_pair_walker(params, interval)
        .for_each_of_size(n, [&](const BetaSet& b) { out.push_back(b); });
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

EnumerationReport check_maximal_theorem(const CoreParams& params, Int guard) {
    EnumerationReport report{params};
    const BetaSet bm = maximal_beta(params);
    if (static_cast<Int>(bm.size()) > guard)
        throw std::invalid_argument("maximal beta-set exceeds the guard");
    for_each_closed_subset(params, bm, [&](const BetaSet& b) {
        ++report.count;
        ++report.by_size[static_cast<Int>(b.size())];
        if (!contains_partitionwise(b, bm))
            report.violations.push_back({"maximal-theorem", b, bm});
    });
    return report;
}

EnumerationReport check_first_generalization(const CoreParams& params, Int gen_bound) {
    if (gen_bound < 1) throw std::invalid_argument("generator bound must be positive");
    EnumerationReport report{params};
    report.tallies["delta_sets_checked"] = gen_bound;
    for (Int g = 1; g <= gen_bound; ++g) {
        const DeltaSet d = delta(params, g);
        if (d.elements.size() > detail::kMaxUniverse)
            throw std::invalid_argument("delta-set exceeds the enumeration guard");
        for_each_closed_subset(params, d.elements, [&](const BetaSet& b) {
            ++report.count;
            ++report.by_size[static_cast<Int>(b.size())];
            if (!contains_partitionwise(b, d.elements))
                report.violations.push_back({"first-generalization", b, d.elements});
        });
    }
    return report;
}

EnumerationReport check_second_generalization(const CoreParams& params, Int n_max) {
    if (n_max < 0) throw std::invalid_argument("size bound must be nonnegative");
    EnumerationReport report{params};
    report.tallies["no_shift_failures"] = 0;
    for (Int n = 0; n <= n_max; ++n) {
        const DeltaSet md = max_delta_with_size(params, n);
        const BetaSet bound =
            md.elements.empty() ? BetaSet{} : closure(params, md.elements + params.s());
        for (const BetaSet& b : enumerate_closed_of_size(params, n)) {
            ++report.count;
            ++report.by_size[n];
            if (!contains_partitionwise(b, bound))
                report.violations.push_back({"second-generalization", b, bound});
            if (!contains_partitionwise(b, md.elements)) {
                report.witnesses.push_back(b);
                ++report.tallies["no_shift_failures"];
            }
        }
    }
    return report;
}

bool shift_pad_containment(const BetaSet& b, const BetaSet& g, Int k,
                           const BetaSet& A, const BetaSet& B) {
    if (k < 1) throw std::invalid_argument("shift_pad_containment: k must be positive");
    if (!A.empty() && A.max() > k)
        throw std::invalid_argument("shift_pad_containment: A must lie inside {1..k}");
    if (!B.empty() && B.max() > k)
        throw std::invalid_argument("shift_pad_containment: B must lie inside {1..k}");
    if (A.size() < B.size())
        throw std::invalid_argument("shift_pad_containment: |A| must be at least |B|");
    if (!contains_partitionwise(b, g))
        throw std::invalid_argument("shift_pad_containment: b must be contained partition-wise in g");
    if (g.size() < b.size() + A.size())
        throw std::invalid_argument("shift_pad_containment: |g| must be at least |(b+k) ∪ A|");
    const auto unite = [](const BetaSet& shifted, const BetaSet& low) {
        std::vector<Int> all = shifted.elements();
        all.insert(all.end(), low.elements().begin(), low.elements().end());
        return BetaSet(std::move(all));
    };
    return contains_partitionwise(unite(b + k, A), unite(g + k, B));
}

bool closure_shift_containment(const CoreParams& params, const BetaSet& b,
                               const BetaSet& g, Int k) {
    if (k < 1) throw std::invalid_argument("closure_shift_containment: k must be positive");
    if (!is_closed(params, b) || !is_closed(params, g))
        throw std::invalid_argument("closure_shift_containment: both beta-sets must be closed");
    if (!contains_partitionwise(b, g))
        throw std::invalid_argument("closure_shift_containment: b must be contained partition-wise in g");
    const BetaSet cb = closure(params, b + k);
    const BetaSet cg = closure(params, g + k);
    if (cb.size() - b.size() < cg.size() - g.size())
        throw std::invalid_argument("closure_shift_containment: the left closure must add at least as much");
    if (g.size() < cb.size())
        throw std::invalid_argument("closure_shift_containment: |g| must be at least |closure(b+k)|");
    return contains_partitionwise(cb, cg);
}

bool width_gap_containment(const CoreParams& params, const DeltaSet& d, const BetaSet& b) {
    if (!is_closed(params, b))
        throw std::invalid_argument("width_gap_containment: b must be closed");
    if (!subset_setwise(b, d.elements))
        throw std::invalid_argument("width_gap_containment: b must be a subset of the delta-set");
    if (static_cast<Int>(d.elements.size() - b.size()) > width(params, d.elements))
        throw std::invalid_argument("width_gap_containment: the size gap must be at most the width");
    return contains_partitionwise(b, d.elements);
}

bool disjoint_height_bound(const CoreParams& params, const std::vector<DeltaSet>& deltas) {
    if (deltas.size() <= 2)
        throw std::invalid_argument("disjoint_height_bound: needs more than two delta-sets");
    Int n = 0;
    Int height_sum = 0;
    bool wide = false;
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        if (deltas[i].generator < 1)
            throw std::invalid_argument("disjoint_height_bound: delta-sets must be nonempty");
        n += static_cast<Int>(deltas[i].elements.size());
        height_sum += height(params, deltas[i].elements);
        if (width(params, deltas[i].elements) > 1) wide = true;
        for (std::size_t j = i + 1; j < deltas.size(); ++j)
            for (Int x : deltas[i].elements.elements())
                if (deltas[j].elements.contains(x))
                    throw std::invalid_argument("disjoint_height_bound: delta-sets must be disjoint");
    }
    if (!wide)
        throw std::invalid_argument("disjoint_height_bound: at least one delta-set must have width > 1");
    return height(params, max_delta_with_size(params, n).elements) < height_sum;
}

bool tight_delta_dimensions(const CoreParams& params, const BetaSet& b, Int n) {
    if (static_cast<Int>(b.size()) != n)
        throw std::invalid_argument("tight_delta_dimensions: |b| must equal n");
    if (!is_closed(params, b))
        throw std::invalid_argument("tight_delta_dimensions: b must be closed");
    const DeltaSet md = max_delta_with_size(params, n);
    if (width(params, b) != width(params, md.elements) ||
        width(params, b) >= params.s())
        throw std::invalid_argument("tight_delta_dimensions: width must match the maximal delta-set and stay below s");
    if (height(params, b) != height(params, md.elements))
        throw std::invalid_argument("tight_delta_dimensions: height must match the maximal delta-set");
    const DeltaSet d = smallest_containing_delta(params, b);
    return width(params, d.elements) == width(params, b) &&
           height(params, d.elements) == height(params, b);
}

DeltaSet smallest_containing_delta(const CoreParams& params, const BetaSet& b) {
    if (b.empty())
        throw std::invalid_argument("smallest containing delta-set needs a nonempty input");
    if (!is_closed(params, b))
        throw std::invalid_argument("smallest containing delta-set needs a closed input");
    // beyond max(b) + (s-1)(t-1) every difference is representable
    const Int last = b.max() + (params.s() - 1) * (params.t() - 1);
    for (Int g = b.max(); g <= last; ++g) {
        const DeltaSet d = delta(params, g);
        if (subset_setwise(b, d.elements)) return d;
    }
    throw std::logic_error("no containing delta-set found under the Frobenius bound");
}

}  // namespace stcore
