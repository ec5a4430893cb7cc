#include "stcore/closure.hpp"

#include "internal.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace stcore {

using detail::checked_add;
using detail::checked_mul;

CoreParams::CoreParams(Int s, Int t) : s_(s), t_(t) {
    if (s < 1 || t <= s)
        throw std::invalid_argument("need 1 <= s < t");
    if (std::gcd(s, t) != 1)
        throw std::invalid_argument("s and t must be relatively prime");
    checked_mul(s, t);
}

std::string CoreParams::str() const {
    std::ostringstream os;
    os << '(' << s_ << ',' << t_ << ')';
    return os.str();
}

BetaSet closure(const CoreParams& params, const BetaSet& b) {
    // breadth-first descent x -> x-s, x -> x-t with a visited set
    std::vector<Int> out;
    std::unordered_set<Int> seen;
    std::vector<Int> stack(b.elements());
    seen.insert(stack.begin(), stack.end());
    while (!stack.empty()) {
        const Int x = stack.back();
        stack.pop_back();
        out.push_back(x);
        for (Int step : {params.s(), params.t()}) {
            const Int y = x - step;
            if (y >= 1 && seen.insert(y).second) stack.push_back(y);
        }
    }
    return BetaSet(std::move(out));
}

bool is_closed(const CoreParams& params, const BetaSet& b) {
    for (Int x : b.elements()) {
        if (x > params.s() && !b.contains(x - params.s())) return false;
        if (x > params.t() && !b.contains(x - params.t())) return false;
    }
    return true;
}

BetaSet generators(const CoreParams& params, const BetaSet& b) {
    if (!is_closed(params, b))
        throw std::invalid_argument("generators require a closed beta-set");
    std::vector<Int> gens;
    for (Int x : b.elements())
        if (!b.contains(checked_add(x, params.s())) &&
            !b.contains(checked_add(x, params.t())))
            gens.push_back(x);
    BetaSet result(std::move(gens));
    if (closure(params, result) != b)
        throw std::logic_error("generating set does not regenerate its closure");
    return result;
}

BetaSet maximal_beta(const CoreParams& params) {
    const Int f = params.frobenius();
    if (f < 1) return BetaSet{};
    return closure(params, BetaSet({f}));
}

bool is_core(const CoreParams& params, const BetaSet& b) {
    return is_closed(params, b) && subset_setwise(b, maximal_beta(params));
}

namespace {

// smallest representable value in each residue class mod s (Apery-style)
std::vector<Int> min_representative_table(const CoreParams& params) {
    std::vector<Int> ap(static_cast<std::size_t>(params.s()), 0);
    for (Int b = 0; b < params.s(); ++b)
        ap[static_cast<std::size_t>((b * params.t()) % params.s())] = b * params.t();
    return ap;
}

}  // namespace

bool representable(const CoreParams& params, Int x) {
    if (x < 0) return false;
    const auto ap = min_representative_table(params);
    return x >= ap[static_cast<std::size_t>(x % params.s())];
}

DeltaSet delta(const CoreParams& params, Int generator) {
    if (generator < 1)
        throw std::invalid_argument("delta-set generators must be positive");
    return DeltaSet{params, generator, closure(params, BetaSet({generator}))};
}

DeltaSet empty_delta(const CoreParams& params) {
    return DeltaSet{params, 0, BetaSet{}};
}

DeltaSet delta_shift(const DeltaSet& d, Int j) {
    const CoreParams& params = d.params;
    if (d.generator == 0 || j == 0) return d;
    if (j > 0) {
        DeltaSet shifted = delta(params, checked_add(d.generator, j));
        if (closure(params, d.elements + j) != shifted.elements)
            throw std::logic_error("upward shift broke the closure identity");
        return shifted;
    }
    const Int k = -j;
    const BetaSet dropped = d.elements - k;
    if (k >= d.generator) {
        if (!dropped.empty())
            throw std::logic_error("collapsed shift left elements behind");
        return empty_delta(params);
    }
    DeltaSet shifted = delta(params, d.generator - k);
    if (dropped != shifted.elements)
        throw std::logic_error("downward shift broke the subtraction identity");
    return shifted;
}

Int delta_size(const CoreParams& params, Int g) {
    if (g < 0) throw std::invalid_argument("generator must be nonnegative");
    if (g == 0) return 0;
    return static_cast<Int>(closure(params, BetaSet({g})).size());
}

DeltaSet max_delta_with_size(const CoreParams& params, Int n) {
    if (n < 0) throw std::invalid_argument("size must be nonnegative");
    if (n == 0) return empty_delta(params);
    const auto ap = min_representative_table(params);
    const auto has = [&](Int set_generator, Int member) {
        // member ∈ closure({g})  <=>  g - member is representable
        const Int diff = set_generator - member;
        return diff >= 0 && diff >= ap[static_cast<std::size_t>(diff % params.s())];
    };
    Int size = 1;  // |closure({1})|
    Int best = (n == 1) ? 1 : 0;
    const Int limit = checked_mul(checked_add(n, 2), checked_mul(params.s(), params.t()));
    for (Int g = 2; g <= limit; ++g) {
        if (has(g - 1, params.s()) || has(g - 1, params.t())) ++size;
        if (size == n) best = g;
        if (size > n) break;
    }
    if (best == 0)
        throw std::logic_error("delta-set size scan never reached the requested size");
    return delta(params, best);
}

namespace {

Int residue_count(const BetaSet& b, Int mod) {
    std::set<Int> classes;
    for (Int x : b.elements()) classes.insert(x % mod);
    return static_cast<Int>(classes.size());
}

}  // namespace

Int height(const CoreParams& params, const BetaSet& b) {
    return residue_count(b, params.t());
}

Int width(const CoreParams& params, const BetaSet& b) {
    return residue_count(b, params.s());
}

}  // namespace stcore
