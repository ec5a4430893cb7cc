#pragma once

#include "stcore/partition.hpp"

namespace stcore {

/// A coprime pair s < t. Every closure/core notion is relative to one pair.
class CoreParams {
public:
    CoreParams(Int s, Int t);  // requires 1 <= s < t and gcd(s, t) = 1
    Int s() const noexcept { return s_; }
    Int t() const noexcept { return t_; }
    /// st - s - t, the largest integer not of the form a*s + b*t
    /// (negative when s = 1, where everything is representable).
    Int frobenius() const noexcept { return s_ * t_ - s_ - t_; }
    std::string str() const;  // "(5,7)"
    friend bool operator==(const CoreParams&, const CoreParams&) = default;

private:
    Int s_, t_;
};

/// The closure of a single generator. Delta-sets are totally ordered by
/// partition-wise containment. generator == 0 encodes the empty delta-set.
struct DeltaSet {
    CoreParams params;
    Int generator = 0;
    BetaSet elements;
};

/// Smallest closed superset: {x - a*s - b*t | x in b, a,b >= 0, result >= 1}.
BetaSet closure(const CoreParams&, const BetaSet&);
/// Closed under subtracting s and t whenever the result stays positive.
bool is_closed(const CoreParams&, const BetaSet&);
/// Minimal generating set: the elements with x+s and x+t both absent.
/// The input must be closed.
BetaSet generators(const CoreParams&, const BetaSet&);
/// Closed and contained set-wise in maximal_beta.
bool is_core(const CoreParams&, const BetaSet&);
/// The positive integers not representable as a*s + b*t; equals the closure
/// of {st - s - t}. Every core beta-set is a subset of it.
BetaSet maximal_beta(const CoreParams&);
/// Is x = a*s + b*t for some a, b >= 0?
bool representable(const CoreParams&, Int x);

DeltaSet delta(const CoreParams&, Int generator);  // generator >= 1
DeltaSet empty_delta(const CoreParams&);
/// Shift a delta-set's generator by j of either sign. A downward shift that
/// reaches or passes the generator collapses to the empty delta-set.
DeltaSet delta_shift(const DeltaSet&, Int j);
/// |closure({g})|, with 0 for g = 0. Nondecreasing in g, steps by at most 1;
/// the step is +1 exactly when s or t lies in the previous delta-set.
Int delta_size(const CoreParams&, Int g);
/// The largest delta-set with exactly n elements (largest such generator).
DeltaSet max_delta_with_size(const CoreParams&, Int n);

/// Number of residue classes mod t hit by b (rows of the bead diagram).
Int height(const CoreParams&, const BetaSet&);
/// Number of residue classes mod s hit by b (columns of the bead diagram).
Int width(const CoreParams&, const BetaSet&);

}  // namespace stcore
