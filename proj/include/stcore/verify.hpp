#pragma once

#include "stcore/closure.hpp"

#include <functional>
#include <map>

namespace stcore {

struct Violation {
    std::string claim;
    BetaSet witness;  // the offending beta-set
    BetaSet bound;    // what it was compared against
};

struct EnumerationReport {
    explicit EnumerationReport(const CoreParams& p) : params(p) {}

    CoreParams params;
    Int count = 0;
    std::map<Int, Int> by_size;
    std::map<std::string, Int> tallies;
    std::vector<BetaSet> witnesses;
    std::vector<Violation> violations;
};

/// Walk every subset S of the universe with closure(S) ∩ universe = S, each
/// exactly once (as order ideals of the divisibility-free poset with covers
/// x -> x-s, x -> x-t). For a closed universe these are exactly the closed
/// beta-sets inside it. Universes are limited to 64 elements.
void for_each_closed_subset(const CoreParams&, const BetaSet& universe,
                            const std::function<void(const BetaSet&)>& emit);
std::vector<BetaSet> closed_subsets(const CoreParams&, const BetaSet& universe);

/// Every core beta-set, in canonical order. guard bounds |maximal_beta|.
std::vector<BetaSet> enumerate_core(const CoreParams&, Int guard = 40);

/// Every closed beta-set with exactly n elements, in canonical order. The
/// universe is bounded by the largest m with delta_size(m) <= n.
std::vector<BetaSet> enumerate_closed_of_size(const CoreParams&, Int n);

/// Every core beta-set is contained partition-wise in maximal_beta.
EnumerationReport check_maximal_theorem(const CoreParams&, Int guard = 40);

/// Every closed subset of a delta-set is contained partition-wise in it,
/// for all generators up to gen_bound.
EnumerationReport check_first_generalization(const CoreParams&, Int gen_bound);

/// Every closed beta-set of size n is contained partition-wise in the closure
/// of the largest size-n delta-set shifted up by s, for n <= n_max. Also
/// records the sets for which containment fails without the shift.
EnumerationReport check_second_generalization(const CoreParams&, Int n_max);

/// (b + k) ∪ A is contained partition-wise in (g + k) ∪ B, given b ≺ g,
/// A, B ⊆ {1..k}, |A| >= |B| and |g| >= |b| + |A|. Precondition violations
/// throw; the return value is the conclusion itself.
bool shift_pad_containment(const BetaSet& b, const BetaSet& g, Int k,
                           const BetaSet& A, const BetaSet& B);
/// Closure form: closure(b + k) ≺ closure(g + k) for closed b ≺ g when the
/// closures add at least as many elements on the left and |g| >= |closure(b+k)|.
bool closure_shift_containment(const CoreParams&, const BetaSet& b,
                               const BetaSet& g, Int k);
/// b ≺ d for closed b ⊆ d when d has at most width(d) more elements than b.
bool width_gap_containment(const CoreParams&, const DeltaSet& d, const BetaSet& b);
/// For more than two pairwise disjoint delta-sets, one of width > 1, with
/// total size n: height(MΔ_n) < sum of the heights.
bool disjoint_height_bound(const CoreParams&, const std::vector<DeltaSet>& deltas);
/// For closed b of size n with the width (< s) and height of MΔ_n, the
/// smallest containing delta-set has the same width and height.
bool tight_delta_dimensions(const CoreParams&, const BetaSet& b, Int n);

/// The delta-set with the smallest generator containing b set-wise.
/// b must be nonempty and closed.
DeltaSet smallest_containing_delta(const CoreParams&, const BetaSet& b);

}  // namespace stcore
