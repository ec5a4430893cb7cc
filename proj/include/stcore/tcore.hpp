#pragma once

#include "stcore/verify.hpp"

namespace stcore {

/// A tuple t_1 < t_2 < ... < t_n of pairwise relatively prime positive
/// integers, n >= 2.
class TParams {
public:
    explicit TParams(std::vector<Int> ts);
    const std::vector<Int>& ts() const noexcept { return ts_; }
    std::size_t arity() const noexcept { return ts_.size(); }
    std::string str() const;  // "(5,6,7)"
    friend bool operator==(const TParams&, const TParams&) = default;

private:
    std::vector<Int> ts_;
};

/// The positive integers not representable as a nonnegative combination of
/// the t_i (the gap set), computed by dynamic programming up to
/// (t_1 - 1)(t_n - 1). For two parameters this equals maximal_beta.
BetaSet beta_T(const TParams&);

/// Closed under subtracting each t_i whenever the result stays positive.
bool is_T_closed(const TParams&, const BetaSet&);
/// T-closed and contained set-wise in beta_T.
bool is_T_core(const TParams&, const BetaSet&);

/// Every T-core beta-set (the T-closed subsets of beta_T), canonical order.
std::vector<BetaSet> enumerate_T_core(const TParams&, Int guard = 40);

struct MaximalSetReport {
    TParams params;
    Int total = 0;                        // number of T-core beta-sets
    std::vector<BetaSet> maximal;         // the ≺-maximal ones, an antichain
    bool unique = false;                  // exactly one maximal element?
};

/// The partition-wise maximal T-core beta-sets. For two parameters the
/// report is always the single set maximal_beta; for more it can split into
/// several incomparable maxima.
MaximalSetReport maximal_elements(const TParams&, Int guard = 40);

/// Open-conjecture harness (pair case): does every closed beta-set b of size
/// n satisfy b ≺ closure(MΔ_n + (s - width(b)))? A zero shift is applied as
/// no shift and tallied separately; n = 0 is skipped. Violations in the
/// report are findings about the conjecture, not errors.
EnumerationReport conjecture_error_term(const CoreParams&, Int n_max);

}  // namespace stcore
