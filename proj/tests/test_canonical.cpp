#include "stcore/canonical.hpp"

#include "stcore/verify.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace stcore;
using testutil::bs;

namespace {

TriangleRegion full_region(const CoreParams& params) {
    return TriangleRegion(params, params.frobenius(), params.s());
}

// all sets closed in the region, grouped by size
std::map<Int, std::vector<BetaSet>> closed_in_region_by_size(const TriangleRegion& r) {
    std::map<Int, std::vector<BetaSet>> by_size;
    for (const BetaSet& b : closed_subsets(r.params(), r.cells()))
        by_size[static_cast<Int>(b.size())].push_back(b);
    return by_size;
}

}  // namespace

TEST_CASE("region construction caps the depth for positivity") {
    const TriangleRegion r(CoreParams(5, 6), 19, 4);
    CHECK(r.depth() == 3);  // 19 - 4*6 would go negative
    CHECK(r.cells() == maximal_beta(CoreParams(5, 6)));
    CHECK(r.coords(19) == std::pair<Int, Int>{0, 0});
    CHECK(r.coords(8) == std::pair<Int, Int>{1, 1});
    CHECK_THROWS_AS(r.coords(5), std::out_of_range);
    CHECK_THROWS_AS(TriangleRegion(CoreParams(5, 6), 0, 1), std::invalid_argument);

    const TriangleRegion deep(CoreParams(2, 3), 7, 5);
    CHECK(deep.depth() == 2);  // capped at s
}

TEST_CASE("diagonals partition the region with one more cell each") {
    const TriangleRegion r56(CoreParams(5, 6), 19, 4);
    const std::vector<BetaSet> d56 = diagonals(r56);
    REQUIRE(d56.size() == 4);
    CHECK(d56[0] == bs({19}));
    CHECK(d56[1] == bs({14, 13}));
    CHECK(d56[2] == bs({9, 8, 7}));
    CHECK(d56[3] == bs({4, 3, 2, 1}));

    const TriangleRegion r57(CoreParams(5, 7), 23, 4);
    CHECK(diagonals(r57)[1] == bs({18, 16}));
    for (std::size_t j = 0; j < diagonals(r57).size(); ++j)
        CHECK(diagonals(r57)[j].size() == j + 1);
}

TEST_CASE("closedness inside the region") {
    const TriangleRegion r = full_region(CoreParams(5, 6));
    CHECK(is_closed_in_region(r, bs({7, 3, 2, 1})));
    CHECK_FALSE(is_closed_in_region(r, bs({9})));  // 4 = 9 - 5 is a cell
    CHECK(is_closed_in_region(r, BetaSet{}));
    CHECK_THROWS_AS(is_closed_in_region(r, bs({5})), std::invalid_argument);
}

TEST_CASE("top justification reproduces the worked figures") {
    const TriangleRegion r = full_region(CoreParams(5, 6));
    CHECK(top_justify(r, bs({7, 3, 2, 1})) == bs({9, 4, 3, 2}));
    CHECK(top_justify(r, bs({7, 4, 2, 1})) == bs({9, 4, 3, 2}));  // same output
    CHECK(top_justify(r, bs({9, 4, 3, 2})) == bs({9, 4, 3, 2}));  // idempotent
    CHECK(top_justify(r, BetaSet{}) == BetaSet{});
    CHECK_THROWS_AS(top_justify(r, bs({9})), std::invalid_argument);
}

TEST_CASE("the sliding pass reproduces the worked trace") {
    const TriangleRegion r = full_region(CoreParams(5, 6));

    std::vector<BetaSet> frames;
    const BetaSet result = slide_step2(r, bs({9, 4, 3, 2, 1}),
                                       [&](const BetaSet& cur, Int, Int) {
                                           frames.push_back(cur);
                                       });
    CHECK(result == bs({9, 8, 4, 3, 2}));
    REQUIRE(!frames.empty());
    CHECK(frames.back() == result);

    CHECK(slide_step2(r, bs({9, 4, 3, 2})) == bs({9, 4, 3, 2}));  // fixed point
    CHECK_THROWS_AS(slide_step2(r, bs({7, 3, 2, 1})), std::invalid_argument);
}

TEST_CASE("every sliding move increases the set partition-wise") {
    const TriangleRegion r = full_region(CoreParams(5, 6));
    const std::map<Int, std::vector<BetaSet>> by_size = closed_in_region_by_size(r);
    for (const auto& [size, sets] : by_size) {
        for (const BetaSet& b : sets) {
            const BetaSet justified = top_justify(r, b);
            BetaSet previous = justified;
            slide_step2(r, justified, [&](const BetaSet& cur, Int, Int) {
                CHECK(contains_partitionwise(previous, cur));
                previous = cur;
            });
        }
    }
}

TEST_CASE("canonical form of the worked sizes") {
    const TriangleRegion r = full_region(CoreParams(5, 6));
    CHECK(canonical_form(r, smallest_closed_in_region(r, 5)).elements ==
          bs({9, 8, 4, 3, 2}));
    CHECK(canonical_form(r, smallest_closed_in_region(r, 3)).elements ==
          bs({9, 4, 3}));
    CHECK(canonical_form(r, BetaSet{}).elements == BetaSet{});
    CHECK_FALSE(canonical_form(r, BetaSet{}).anchor.has_value());

    const CanonicalForm five = canonical_form(r, bs({9, 4, 3, 2, 1}));
    CHECK(five.elements == bs({9, 8, 4, 3, 2}));
    CHECK(five.anchor == 8);
    CHECK(five.anchor_a == 1);
    CHECK(five.anchor_b == 1);
}

TEST_CASE("the anchor element reconstructs the canonical set") {
    for (const CoreParams params : {CoreParams(5, 6), CoreParams(5, 7)}) {
        const TriangleRegion r = full_region(params);
        for (Int m = 1; m <= static_cast<Int>(r.cells().size()); ++m) {
            const CanonicalForm form =
                canonical_form(r, smallest_closed_in_region(r, m));
            REQUIRE(form.anchor.has_value());
            std::vector<Int> rebuilt;
            for (Int v : r.cells().elements())
                if (r.coords(v).first > form.anchor_a) rebuilt.push_back(v);
            const Int chain = r.depth() - form.anchor_a - form.anchor_b;
            for (Int k = 0; k <= chain; ++k)
                rebuilt.push_back(*form.anchor - k * params.t());
            CHECK(BetaSet(std::move(rebuilt)) == form.elements);
        }
    }
}

TEST_CASE("one canonical set per size, exhaustively") {
    for (const CoreParams params :
         {CoreParams(4, 5), CoreParams(5, 6), CoreParams(6, 7), CoreParams(5, 7)}) {
        const TriangleRegion r = full_region(params);
        const std::map<Int, std::vector<BetaSet>> by_size = closed_in_region_by_size(r);
        for (const auto& [size, sets] : by_size) {
            std::set<std::vector<Int>> outputs;
            for (const BetaSet& b : sets) {
                const CanonicalForm form = canonical_form(r, b);
                CHECK(static_cast<Int>(form.elements.size()) == size);
                CHECK(contains_partitionwise(b, form.elements));
                CHECK(subset_setwise(form.elements, r.cells()));
                outputs.insert(form.elements.elements());
            }
            CHECK(outputs.size() == 1);
            // the closed form rebuilds the same set from the size alone
            CHECK(*outputs.begin() == canonical_by_formula(r, size).elements());
        }
    }
}

TEST_CASE("type classification for neighbouring parameters") {
    const CoreParams p56(5, 6);
    const TriangleRegion r = full_region(p56);
    const auto canon_of_size = [&](Int m) {
        return canonical_form(r, smallest_closed_in_region(r, m));
    };
    CHECK(classify_type(canon_of_size(3)) == CanonicalType::type_i);
    CHECK(classify_type(canon_of_size(1)) == CanonicalType::type_i);
    CHECK(classify_type(canon_of_size(5)) == CanonicalType::type_ii);
    CHECK(classify_type(canon_of_size(0)) == CanonicalType::type_i);
    CHECK(canon_of_size(3).elements == closure(p56, bs({9})));  // 9 = 2s - 1

    const TriangleRegion r57 = full_region(CoreParams(5, 7));
    CHECK_THROWS_AS(classify_type(canonical_form(r57, bs({23, 18, 16}))),
                    std::invalid_argument);
}

TEST_CASE("canonical sets chain up to the full triangle") {
    // type I sets are single-generator closures and each type II set sits
    // under the next type I set
    for (Int s : {3, 4, 5}) {
        const CoreParams params(s, s + 1);
        const TriangleRegion r = full_region(params);
        for (Int n = 1; n * s - 1 <= params.frobenius(); ++n) {
            const BetaSet type_one = closure(params, bs({n * s - 1}));
            const Int size = static_cast<Int>(type_one.size());
            CHECK(size == n * (n + 1) / 2);
            CHECK(canonical_by_formula(r, size) == type_one);
            CHECK(contains_partitionwise(type_one,
                                         closure(params, bs({(n + 1) * s - 1}))));
        }
        for (Int m = 1; m <= static_cast<Int>(r.cells().size()); ++m) {
            const CanonicalForm form =
                canonical_form(r, smallest_closed_in_region(r, m));
            if (classify_type(form) == CanonicalType::type_i) continue;
            Int k = 0;
            while ((k + 1) * (k + 2) / 2 <= m) ++k;
            const BetaSet next_type_one = closure(params, bs({(k + 1) * s - 1}));
            CHECK(contains_partitionwise(form.elements, next_type_one));
            // type II sets are two-generator closures
            const BetaSet gens = generators(params, form.elements);
            CHECK(gens.size() == 2);
            CHECK(gens.contains(k * s - 1));
        }
    }
}

TEST_CASE("region rendering matches the bead layout for full triangles") {
    const TriangleRegion r = full_region(CoreParams(5, 6));
    CHECK(render_region(r, BetaSet{}) ==
          testutil::read_file(std::string(STCORE_GOLDEN_DIR) + "/bead_5_6.txt"));
    const std::string marked = render_region(r, bs({9, 4, 3, 2}));
    CHECK(marked.find("( 9)") != std::string::npos);
    CHECK(marked.find("(19)") == std::string::npos);
}
