#pragma once

#include "stcore/partition.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stcore::detail {

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow");
    return r;
}

inline Int floor_div(Int a, Int b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Fixed-width grid text shared by the bead and region renderers. Each cell
/// is the value right-justified to the width of the largest value, wrapped in
/// parentheses when circled and padded with spaces otherwise. Lines are
/// right-trimmed; the result ends with a newline unless empty.
std::string format_grid(const std::vector<std::vector<Int>>& rows,
                        const std::function<bool(Int)>& circled);

}  // namespace stcore::detail
