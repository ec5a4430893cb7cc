#include "stcore/tcore.hpp"

#include "ideal_enum.hpp"
#include "internal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stcore {

TParams::TParams(std::vector<Int> ts) : ts_(std::move(ts)) {
    if (ts_.size() < 2)
        throw std::invalid_argument("need at least two parameters");
    std::sort(ts_.begin(), ts_.end());
    for (std::size_t i = 0; i < ts_.size(); ++i) {
        if (ts_[i] < 1)
            throw std::invalid_argument("parameters must be positive");
        if (i > 0 && ts_[i] == ts_[i - 1])
            throw std::invalid_argument("parameters must be distinct");
    }
    for (std::size_t i = 0; i < ts_.size(); ++i)
        for (std::size_t j = i + 1; j < ts_.size(); ++j)
            if (std::gcd(ts_[i], ts_[j]) != 1)
                throw std::invalid_argument("parameters must be pairwise relatively prime");
}

std::string TParams::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < ts_.size(); ++i) {
        if (i) os << ',';
        os << ts_[i];
    }
    os << ')';
    return os.str();
}

BetaSet beta_T(const TParams& params) {
    const Int bound =
        detail::checked_mul(params.ts().front() - 1, params.ts().back() - 1);
    if (bound < 1) return BetaSet{};
    std::vector<char> rep(static_cast<std::size_t>(bound) + 1, 0);
    rep[0] = 1;
    for (Int x = 1; x <= bound; ++x)
        for (Int t : params.ts())
            if (t <= x && rep[static_cast<std::size_t>(x - t)]) {
                rep[static_cast<std::size_t>(x)] = 1;
                break;
            }
    std::vector<Int> gaps;
    for (Int x = 1; x <= bound; ++x)
        if (!rep[static_cast<std::size_t>(x)]) gaps.push_back(x);
    return BetaSet(std::move(gaps));
}

bool is_T_closed(const TParams& params, const BetaSet& b) {
    for (Int x : b.elements())
        for (Int t : params.ts())
            if (x > t && !b.contains(x - t)) return false;
    return true;
}

bool is_T_core(const TParams& params, const BetaSet& b) {
    return is_T_closed(params, b) && subset_setwise(b, beta_T(params));
}

namespace {

std::vector<Int> t_closure_values(const TParams& params, Int v) {
    std::vector<Int> out;
    std::vector<Int> stack{v};
    std::vector<char> seen;  // indexed by value, small
    seen.resize(static_cast<std::size_t>(v) + 1, 0);
    seen[static_cast<std::size_t>(v)] = 1;
    while (!stack.empty()) {
        const Int x = stack.back();
        stack.pop_back();
        out.push_back(x);
        for (Int t : params.ts()) {
            const Int y = x - t;
            if (y >= 1 && !seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                stack.push_back(y);
            }
        }
    }
    return out;
}

}  // namespace

std::vector<BetaSet> enumerate_T_core(const TParams& params, Int guard) {
    const BetaSet bt = beta_T(params);
    if (static_cast<Int>(bt.size()) > guard)
        throw std::invalid_argument("gap set has " + std::to_string(bt.size()) +
                                    " elements, exceeding the guard of " +
                                    std::to_string(guard));
    detail::IdealWalker walker(bt.elements(), [&](Int v) {
        std::vector<Int> down;
        for (Int x : t_closure_values(params, v))
            if (bt.contains(x)) down.push_back(x);
        return down;
    });
    std::vector<BetaSet> out;
    walker.for_each([&](const BetaSet& b) { out.push_back(b); });
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

MaximalSetReport maximal_elements(const TParams& params, Int guard) {
    const std::vector<BetaSet> all = enumerate_T_core(params, guard);
    MaximalSetReport report{params, static_cast<Int>(all.size()), {}, false};
    for (const BetaSet& cand : all) {
        bool dominated = false;
        for (const BetaSet& other : all) {
            if (other == cand) continue;
            if (contains_partitionwise(cand, other)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) report.maximal.push_back(cand);
    }
    std::sort(report.maximal.begin(), report.maximal.end(), canonical_less);
    report.unique = report.maximal.size() == 1;
    return report;
}

EnumerationReport conjecture_error_term(const CoreParams& params, Int n_max) {
    if (n_max < 0) throw std::invalid_argument("size bound must be nonnegative");
    EnumerationReport report{params};
    report.tallies["zero_shift_checked"] = 0;
    report.tallies["shifted_checked"] = 0;
    for (Int n = 1; n <= n_max; ++n) {  // the empty set has no width to shrink by
        const DeltaSet md = max_delta_with_size(params, n);
        for (const BetaSet& b : enumerate_closed_of_size(params, n)) {
            ++report.count;
            ++report.by_size[n];
            const Int shift = params.s() - width(params, b);
            if (shift > 0) {
                ++report.tallies["shifted_checked"];
                const BetaSet bound = closure(params, md.elements + shift);
                if (!contains_partitionwise(b, bound))
                    report.violations.push_back({"error-term-conjecture", b, bound});
            } else {
                ++report.tallies["zero_shift_checked"];
                if (!contains_partitionwise(b, md.elements))
                    report.violations.push_back(
                        {"error-term-conjecture-zero-shift", b, md.elements});
            }
        }
    }
    return report;
}

}  // namespace stcore
