#pragma once

#include "stcore/closure.hpp"

namespace stcore {

/// Grid layout of maximal_beta: above each value sits value - s, to its right
/// value - t, largest value at the bottom left. extra_rows extends the grid
/// downward by +s per row, extra_cols leftward by +t per column; an extended
/// grid repeats values, the unextended one holds each element exactly once.
class BeadDiagram {
public:
    BeadDiagram(const CoreParams&, Int extra_rows, Int extra_cols);

    const CoreParams& params() const noexcept { return params_; }
    Int extra_rows() const noexcept { return extra_rows_; }
    Int extra_cols() const noexcept { return extra_cols_; }
    /// Rows top to bottom; all rows start at the same leftmost column.
    const std::vector<std::vector<Int>>& grid() const noexcept { return rows_; }
    /// Values of the unextended block: exactly the elements of maximal_beta.
    const BetaSet& base_values() const noexcept { return base_; }
    /// Does grid()[i][j] belong to the unextended block?
    bool is_base_cell(std::size_t i, std::size_t j) const;

private:
    CoreParams params_;
    Int extra_rows_, extra_cols_;
    Int top_row_;  // grid coordinate of rows_[0]; the base bottom row is 0
    std::vector<std::vector<Int>> rows_;
    BetaSet base_;
};

BeadDiagram build(const CoreParams&, Int extra_rows = 0, Int extra_cols = 0);

/// Fixed-width text grid. Every occurrence of a circled value is wrapped in
/// parentheses; output is byte-stable for golden tests.
std::string render(const BeadDiagram&, const BetaSet& circled);

/// Visual core test: all circled values lie in the unextended block and every
/// circled cell has its upper and right neighbours circled (when present).
/// Agrees with is_core on every input.
bool diagram_core_check(const BeadDiagram&, const BetaSet& circled);

}  // namespace stcore
