#pragma once

#include "stcore/closure.hpp"

#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>

namespace stcore {

/// Triangular block {apex - a*s - b*t | a, b >= 0, a + b <= depth}.
/// The depth is capped at s and at (apex-1)/t, so every cell is positive,
/// each cell has a unique (a, b) representation, and diagonal j holds exactly
/// j+1 cells.
class TriangleRegion {
public:
    TriangleRegion(const CoreParams&, Int apex, Int depth);

    const CoreParams& params() const noexcept { return params_; }
    Int apex() const noexcept { return apex_; }
    /// Effective depth after capping.
    Int depth() const noexcept { return depth_; }
    const BetaSet& cells() const noexcept { return cells_; }
    bool contains(Int v) const { return coords_.count(v) != 0; }
    /// Unique coordinates (a, b) of a cell; throws for non-cells.
    std::pair<Int, Int> coords(Int v) const;
    Int diagonal_of(Int v) const;  // a + b

private:
    CoreParams params_;
    Int apex_;
    Int depth_;
    BetaSet cells_;
    std::unordered_map<Int, std::pair<Int, Int>> coords_;
};

/// The diagonals D_0, ..., D_depth; D_j = cells with a + b = j, |D_j| = j+1.
std::vector<BetaSet> diagonals(const TriangleRegion&);

/// closure(b) meets the region in exactly b. Throws if b has values outside
/// the region.
bool is_closed_in_region(const TriangleRegion&, const BetaSet&);

/// Per diagonal, replace b's cells by the same number of largest cells of
/// that diagonal. Input must be closed in the region; so is the output, and
/// the input is contained partition-wise in it.
BetaSet top_justify(const TriangleRegion&, const BetaSet&);

/// The sliding pass over a top-justified, closed-in-region set: the minimum
/// x_j of each diagonal is pushed to a shallower diagonal while a free slot
/// {x_j + t - s + b*t} exists, the inserted cell then slides up its diagonal.
/// on_move (optional) observes (set after the move, removed, inserted).
BetaSet slide_step2(const TriangleRegion&, const BetaSet&,
                    const std::function<void(const BetaSet&, Int, Int)>& on_move = {});

struct CanonicalForm {
    TriangleRegion region;
    BetaSet elements;
    /// The element y whose position determines the whole set, with its
    /// coordinates; absent for the empty set.
    std::optional<Int> anchor;
    Int anchor_a = 0;
    Int anchor_b = 0;
};

/// Top-justification followed by the sliding pass. Depends only on |b| among
/// the closed-in-region sets of the region.
CanonicalForm canonical_form(const TriangleRegion&, const BetaSet&);

/// Closed-form construction of the canonical set from its size alone: a full
/// sub-triangle of the k-th triangular size plus a partial diagonal. Used as
/// a cross-check for the constructive route.
BetaSet canonical_by_formula(const TriangleRegion&, Int size);

/// The cells with the `size` smallest values; always closed in the region.
/// Convenient seed when only the size of the canonical form matters.
BetaSet smallest_closed_in_region(const TriangleRegion&, Int size);

enum class CanonicalType { type_i, type_ii };

/// Defined for t = s+1 only: type I when the size is triangular (the set is a
/// full triangle, the closure of a single generator), type II otherwise.
CanonicalType classify_type(const CanonicalForm&);

/// Bead-style text rendering of the region with circled values.
std::string render_region(const TriangleRegion&, const BetaSet& circled);

}  // namespace stcore
