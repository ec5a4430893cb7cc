#pragma once

#include "stcore/partition.hpp"

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

namespace stcore::detail {

inline constexpr std::size_t kMaxUniverse = 64;

/// Order-ideal walker over a finite universe with per-element down-sets,
/// bitmask-based. Emits every down-closed subset exactly once: elements are
/// decided largest first, and including one forces its whole down-set in.
class IdealWalker {
public:
    IdealWalker(std::vector<Int> values,
                const std::function<std::vector<Int>(Int)>& down_values);

    void for_each(const std::function<void(const BetaSet&)>& emit) const;
    void for_each_of_size(Int n, const std::function<void(const BetaSet&)>& emit) const;

private:
    BetaSet to_beta(std::uint64_t mask) const;
    void walk(std::size_t idx, std::uint64_t in, std::uint64_t out,
              const std::function<void(const BetaSet&)>& emit) const;
    void walk_sized(std::size_t idx, std::uint64_t in, std::uint64_t out, Int n,
                    const std::function<void(const BetaSet&)>& emit) const;

    std::vector<Int> values_;  // descending
    std::vector<std::uint64_t> down_;
    std::unordered_map<Int, std::size_t> index_by_value_;
};

}  // namespace stcore::detail
