#include "stcore/bead.hpp"

#include "internal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stcore {

using detail::floor_div;

namespace detail {

std::string format_grid(const std::vector<std::vector<Int>>& rows,
                        const std::function<bool(Int)>& circled) {
    std::size_t width = 1;
    for (const auto& row : rows)
        for (Int v : row)
            width = std::max(width, std::to_string(v).size());
    std::ostringstream os;
    for (const auto& row : rows) {
        std::string line;
        for (Int v : row) {
            std::string num = std::to_string(v);
            num.insert(num.begin(), width - num.size(), ' ');
            const bool c = circled && circled(v);
            line += c ? '(' : ' ';
            line += num;
            line += c ? ')' : ' ';
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

}  // namespace detail

BeadDiagram::BeadDiagram(const CoreParams& params, Int extra_rows, Int extra_cols)
    : params_(params), extra_rows_(extra_rows), extra_cols_(extra_cols) {
    if (extra_rows < 0 || extra_cols < 0)
        throw std::invalid_argument("diagram extensions must be nonnegative");
    const Int f = params.frobenius();
    const Int s = params.s();
    const Int t = params.t();
    // topmost grid row still holding a positive value in the leftmost column
    top_row_ = floor_div(f - 1 + extra_cols * t, s);
    if (top_row_ < -extra_rows) top_row_ = -extra_rows - 1;  // empty grid
    for (Int r = top_row_; r >= -extra_rows; --r) {
        std::vector<Int> row;
        for (Int c = -extra_cols;; ++c) {
            const Int v = f - r * s - c * t;
            if (v < 1) break;
            row.push_back(v);
        }
        rows_.push_back(std::move(row));
    }
    base_ = maximal_beta(params);
}

bool BeadDiagram::is_base_cell(std::size_t i, std::size_t j) const {
    const Int r = top_row_ - static_cast<Int>(i);
    const Int c = static_cast<Int>(j) - extra_cols_;
    return r >= 0 && c >= 0;
}

BeadDiagram build(const CoreParams& params, Int extra_rows, Int extra_cols) {
    return BeadDiagram(params, extra_rows, extra_cols);
}

std::string render(const BeadDiagram& d, const BetaSet& circled) {
    return detail::format_grid(d.grid(), [&](Int v) { return circled.contains(v); });
}

bool diagram_core_check(const BeadDiagram& d, const BetaSet& circled) {
    if (!subset_setwise(circled, d.base_values())) return false;
    const auto& rows = d.grid();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (!d.is_base_cell(i, j) || !circled.contains(rows[i][j])) continue;
            // neighbour above
            if (i > 0 && j < rows[i - 1].size() && !circled.contains(rows[i - 1][j]))
                return false;
            // neighbour to the right
            if (j + 1 < rows[i].size() && !circled.contains(rows[i][j + 1]))
                return false;
        }
    }
    return true;
}

}  // namespace stcore
