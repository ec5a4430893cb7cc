#include "stcore/canonical.hpp"

#include "internal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace stcore {

TriangleRegion::TriangleRegion(const CoreParams& params, Int apex, Int depth)
    : params_(params), apex_(apex) {
    if (apex < 1) throw std::invalid_argument("region apex must be positive");
    if (depth < 0) throw std::invalid_argument("region depth must be nonnegative");
    // cap so every cell stays positive and representations stay unique
    depth_ = std::min({depth, params.s(), (apex - 1) / params.t()});
    std::vector<Int> values;
    for (Int a = 0; a <= depth_; ++a) {
        for (Int b = 0; a + b <= depth_; ++b) {
            const Int v = apex_ - a * params.s() - b * params.t();
            if (!coords_.emplace(v, std::make_pair(a, b)).second)
                throw std::logic_error("region cells collided");
            values.push_back(v);
        }
    }
    cells_ = BetaSet(std::move(values));
}

std::pair<Int, Int> TriangleRegion::coords(Int v) const {
    const auto it = coords_.find(v);
    if (it == coords_.end()) throw std::out_of_range("value is not a region cell");
    return it->second;
}

Int TriangleRegion::diagonal_of(Int v) const {
    const auto [a, b] = coords(v);
    return a + b;
}

std::vector<BetaSet> diagonals(const TriangleRegion& r) {
    std::vector<std::vector<Int>> diags(static_cast<std::size_t>(r.depth() + 1));
    for (Int v : r.cells().elements())
        diags[static_cast<std::size_t>(r.diagonal_of(v))].push_back(v);
    std::vector<BetaSet> out;
    out.reserve(diags.size());
    for (auto& d : diags) out.emplace_back(std::move(d));
    return out;
}

namespace {

void require_inside(const TriangleRegion& r, const BetaSet& b) {
    for (Int v : b.elements())
        if (!r.contains(v))
            throw std::invalid_argument("beta-set is not inside the region");
}

BetaSet intersect_with_region(const TriangleRegion& r, const BetaSet& b) {
    std::vector<Int> kept;
    for (Int v : b.elements())
        if (r.contains(v)) kept.push_back(v);
    return BetaSet(std::move(kept));
}

bool is_top_justified(const TriangleRegion& r, const BetaSet& b) {
    for (const BetaSet& diag : diagonals(r)) {
        std::size_t count = 0;
        for (Int v : diag.elements())
            if (b.contains(v)) ++count;
        // the chosen cells must be the `count` largest of the diagonal
        for (std::size_t i = 0; i < count; ++i)
            if (!b.contains(diag.at(i))) return false;
    }
    return true;
}

}  // namespace

bool is_closed_in_region(const TriangleRegion& r, const BetaSet& b) {
    require_inside(r, b);
    return intersect_with_region(r, closure(r.params(), b)) == b;
}

BetaSet top_justify(const TriangleRegion& r, const BetaSet& b) {
    if (!is_closed_in_region(r, b))
        throw std::invalid_argument("top_justify requires a set closed in the region");
    std::vector<Int> out;
    for (const BetaSet& diag : diagonals(r)) {
        std::size_t count = 0;
        for (Int v : diag.elements())
            if (b.contains(v)) ++count;
        for (std::size_t i = 0; i < count; ++i) out.push_back(diag.at(i));
    }
    BetaSet result(std::move(out));
    if (!is_closed_in_region(r, result))
        throw std::logic_error("top justification lost closedness in the region");
    if (!contains_partitionwise(b, result))
        throw std::logic_error("top justification lost partition-wise containment");
    return result;
}

BetaSet slide_step2(const TriangleRegion& r, const BetaSet& b,
                    const std::function<void(const BetaSet&, Int, Int)>& on_move) {
    if (!is_closed_in_region(r, b) || !is_top_justified(r, b))
        throw std::invalid_argument(
            "slide_step2 requires a top-justified set closed in the region");
    const Int s = r.params().s();
    const Int t = r.params().t();
    std::set<Int> cur(b.elements().begin(), b.elements().end());
    const auto in_cur = [&](Int v) { return cur.count(v) != 0; };
    const auto snapshot = [&] {
        return BetaSet(std::vector<Int>(cur.begin(), cur.end()));
    };

    Int j = 2;
    while (j <= r.depth()) {
        // minimum of the j-th diagonal, if it meets the current set
        Int xj = 0;
        for (Int v : cur) {
            if (r.diagonal_of(v) == j) {
                xj = v;
                break;
            }
        }
        if (xj == 0 || in_cur(xj + t)) {
            ++j;
            continue;
        }
        // first free slot of the form x_j + t - s + b*t, b >= 1
        Int slot = 0;
        for (Int v = xj + 2 * t - s; v <= r.apex(); v += t) {
            if (r.contains(v) && !in_cur(v)) {
                slot = v;
                break;
            }
        }
        if (slot == 0) {
            ++j;
            continue;
        }
        cur.erase(xj);
        while (r.contains(slot + (t - s)) && !in_cur(slot + (t - s)))
            slot += t - s;
        cur.insert(slot);
        if (on_move) on_move(snapshot(), xj, slot);
        j = 2;
    }

    BetaSet result = snapshot();
    if (result.size() != b.size())
        throw std::logic_error("sliding changed the number of elements");
    if (!is_closed_in_region(r, result))
        throw std::logic_error("sliding lost closedness in the region");
    if (!contains_partitionwise(b, result))
        throw std::logic_error("sliding lost partition-wise containment");
    return result;
}

CanonicalForm canonical_form(const TriangleRegion& r, const BetaSet& b) {
    const BetaSet justified = top_justify(r, b);
    const BetaSet final_set = slide_step2(r, justified);
    if (!contains_partitionwise(b, final_set))
        throw std::logic_error("canonical form is not above its input");
    CanonicalForm form{r, final_set, std::nullopt, 0, 0};
    if (!final_set.empty()) {
        // the anchor y: smallest column coordinate of the per-diagonal minima,
        // ties broken by the smallest row coordinate
        Int best_a = -1, best_b = -1;
        for (const BetaSet& diag : diagonals(r)) {
            Int xj = 0;
            for (std::size_t i = diag.size(); i-- > 0;) {
                if (final_set.contains(diag.at(i))) {
                    xj = diag.at(i);
                    break;
                }
            }
            if (xj == 0) continue;
            const auto [a, bb] = r.coords(xj);
            if (best_a == -1 || a < best_a || (a == best_a && bb < best_b)) {
                best_a = a;
                best_b = bb;
            }
        }
        form.anchor = r.apex() - best_a * r.params().s() - best_b * r.params().t();
        form.anchor_a = best_a;
        form.anchor_b = best_b;
    }
    return form;
}

BetaSet canonical_by_formula(const TriangleRegion& r, Int size) {
    if (size < 0 || size > static_cast<Int>(r.cells().size()))
        throw std::invalid_argument("size out of range for the region");
    const Int s = r.params().s();
    const Int t = r.params().t();
    const Int i = r.depth();
    Int k = 0;
    while ((k + 1) * (k + 2) / 2 <= size) ++k;  // largest k with T_k <= size
    const Int t_k = k * (k + 1) / 2;
    std::vector<Int> out;
    for (Int a = 0; a <= k - 1; ++a)
        for (Int b = 0; a + b <= k - 1; ++b)
            out.push_back(r.apex() - (i - k + 1) * s - a * s - b * t);
    if (size > t_k)
        for (Int b = k + t_k - size + 1; b <= k; ++b)
            out.push_back(r.apex() - (i - k) * s - b * t);
    return BetaSet(std::move(out));
}

BetaSet smallest_closed_in_region(const TriangleRegion& r, Int size) {
    if (size < 0 || size > static_cast<Int>(r.cells().size()))
        throw std::invalid_argument("size out of range for the region");
    const auto& all = r.cells().elements();
    return BetaSet(std::vector<Int>(all.end() - size, all.end()));
}

CanonicalType classify_type(const CanonicalForm& form) {
    const CoreParams& params = form.region.params();
    if (params.t() != params.s() + 1)
        throw std::invalid_argument("type classification is defined for t = s + 1");
    const Int size = static_cast<Int>(form.elements.size());
    Int k = 0;
    while ((k + 1) * (k + 2) / 2 <= size) ++k;
    return (k * (k + 1) / 2 == size) ? CanonicalType::type_i : CanonicalType::type_ii;
}

std::string render_region(const TriangleRegion& r, const BetaSet& circled) {
    std::vector<std::vector<Int>> rows;
    for (Int a = r.depth(); a >= 0; --a) {
        std::vector<Int> row;
        for (Int b = 0; a + b <= r.depth(); ++b)
            row.push_back(r.apex() - a * r.params().s() - b * r.params().t());
        rows.push_back(std::move(row));
    }
    return detail::format_grid(rows, [&](Int v) { return circled.contains(v); });
}

}  // namespace stcore
