#include <doctest.h>

#include <set>

#include "mhl/oracles.hpp"
#include "mhl/type_c.hpp"

using namespace mhl;

namespace {

CFilling worked_cfilling() {
    return CFilling{Partition({3, 2, 1}), 3,
                    {{-1}, {3, -2}, {2, -3}, {2, -3}, {2, 1, 3}, {2, 1, 3}, {2, 1, 3}}};
}

} // namespace

TEST_CASE("doubled shape column multiplicities") {
    DoubledShape shape = doubled_shape(Partition({3, 2, 1}), 3);
    REQUIRE(shape.column_count() == 7);
    std::vector<std::tuple<int, int, bool, int>> expected = {
        {3, 1, false, 1}, {2, 2, true, 2}, {2, 1, false, 2}, {2, 2, false, 2},
        {1, 2, true, 3},  {1, 3, true, 3}, {1, 1, false, 3}};
    for (std::size_t c = 0; c < expected.size(); ++c) {
        CHECK(std::tuple(shape.columns[c].i, shape.columns[c].index, shape.columns[c].primed,
                         shape.columns[c].height) == expected[c]);
    }
    DoubledShape small = doubled_shape(Partition({2, 1}), 2);
    REQUIRE(small.column_count() == 3);
    CHECK(small.columns[0].height == 1);
    CHECK(small.columns[1].height == 2);
    CHECK(small.columns[2].height == 2);
    CHECK_THROWS_AS(doubled_shape(Partition({1}), 1), shape_error);
}

TEST_CASE("column reflections") {
    CHECK(column_reflect({-2, -3, 1}, RootLabel::barred(1, 2)) == Column({3, 2, 1}));
    CHECK(column_reflect({2, 1}, RootLabel::long_root(1)) == Column({-2, 1}));
    Column c = {-2, -3, 1};
    for (const RootLabel& r : {RootLabel::barred(1, 3), RootLabel::plain(2, 3), RootLabel::long_root(2)})
        CHECK(column_reflect(column_reflect(c, r), r) == c);
    CHECK_THROWS_AS(column_reflect({1, 2}, RootLabel::barred(1, 3)), internal_error);
}

TEST_CASE("adjacent column decomposition") {
    // Case 0
    auto same = try_match_adjacent({2, -3}, {2, -3}, true, 1, 3);
    REQUIRE(same.has_value());
    CHECK(same->fold_positions.empty());
    CHECK(!same->final_changed);

    // columns 5 -> 6 of the worked filling
    auto c56 = try_match_adjacent({2, 1, 3}, {2, 1, 3}, false, 2, 3);
    REQUIRE(c56.has_value());
    CHECK(c56->fold_positions.empty());

    // columns 2 -> 3 of the worked filling: single fold (1,-2)
    auto c23 = try_match_adjacent({3, -2}, {2, -3}, false, 2, 3);
    REQUIRE(c23.has_value());
    CHECK(c23->fold_positions == std::vector<int>({1}));
    CHECK(c23->folded == Column({2, -3}));

    // no decomposition: differs below the distinguished position
    CHECK(!try_match_adjacent({2, 1, 3}, {2, 1, -3}, true, 1, 3).has_value());
    CHECK_THROWS_AS(match_adjacent({2, 1, 3}, {2, 1, -3}, true, 1, 3), adjacency_error);
}

TEST_CASE("pair statistics") {
    // Case 0 contributes nothing
    auto same = try_match_adjacent({2, 1}, {2, 1}, true, 1, 2);
    REQUIRE(same.has_value());
    PairStats zero = stat_pair({2, 1}, *same, 2);
    CHECK(zero.n_stat == 0);
    CHECK(zero.des == 0);

    // single fold (1,-2) on D = [-2,-3,1]: interval (3,-2) = {-3}, all of it
    // excluded, sigma_ab = 1
    Column d1 = {-2, -3, 1};
    Column c1 = column_reflect(d1, RootLabel::barred(1, 2));
    REQUIRE(c1 == Column({3, 2, 1}));
    auto m1 = try_match_adjacent(d1, c1, false, 2, 3);
    REQUIRE(m1.has_value());
    PairStats s1 = stat_pair(d1, *m1, 3);
    CHECK(s1.n_stat == 1);
    CHECK(s1.des == 1);

    // single fold (1,-2) on D = [2,1]: empty interval, sigma_ab = 0
    Column d2 = {2, 1};
    Column c2 = column_reflect(d2, RootLabel::barred(1, 2));
    REQUIRE(c2 == Column({-1, -2}));
    auto m2 = try_match_adjacent(d2, c2, false, 2, 2);
    REQUIRE(m2.has_value());
    PairStats s2 = stat_pair(d2, *m2, 2);
    CHECK(s2.n_stat == 0);
    CHECK(s2.des == 1);
}

TEST_CASE("column inversions use the signed alphabet order") {
    CHECK(column_inversions({1, 2, 3}, 3) == 0);
    CHECK(column_inversions({2, 1, 3}, 3) == 1);
    CHECK(column_inversions({2, -1}, 2) == 0); // 2 < -1 in the alphabet
    CHECK(column_inversions({-1, 2}, 2) == 1);
}

TEST_CASE("filling statistics") {
    CFilling id_image{Partition({2, 1}), 2, {{1}, {1, 2}, {1, 2}}};
    PairStats st = stat_filling(id_image);
    CHECK(st.n_stat == 0);
    CHECK(st.des == 0);

    PairStats ws = stat_filling(worked_cfilling());
    CHECK(ws.n_stat == 1);
    CHECK(ws.des == 3);
}

TEST_CASE("compressed filling and content") {
    CFilling id_image{Partition({2, 1}), 2, {{1}, {1, 2}, {1, 2}}};
    std::vector<Column> bar = compress_filling(id_image);
    CHECK(bar == std::vector<Column>({{1}, {1}, {1, 2}, {1, 2}}));
    CHECK(content_c(id_image) == std::vector<int>({2, 1}));

    std::vector<Column> wbar = compress_filling(worked_cfilling());
    CHECK(wbar == std::vector<Column>({{-1}, {-1}, {3, -2}, {2, -3}, {2, 1, 3}, {2, 1, 3}}));
    CHECK(content_c(worked_cfilling()) == std::vector<int>({0, 1, 1}));
}

TEST_CASE("filling map on positive pairs") {
    LambdaChain chain = chain_type_c(Partition({3, 2, 1}), 3);
    CFilling image = filling_map_c(chain, {{GroupKind::TypeC, {-1, -2, -3}}, {2, 6, 12, 13}});
    CHECK(image == worked_cfilling());

    for (const GroupElement& w : enumerate_group(GroupKind::TypeC, 3)) {
        CFilling plain = filling_map_c(chain, {w, {}});
        for (std::size_t c = 0; c < plain.columns.size(); ++c)
            for (std::size_t r = 0; r < plain.columns[c].size(); ++r)
                CHECK(plain.columns[c][r] == w.window[r]);
    }
}

TEST_CASE("enumerated fillings pass the membership checks and contain the worked one") {
    auto fillings = enumerate_cfillings(Partition({3, 2, 1}), 3);
    std::set<CFilling> as_set(fillings.begin(), fillings.end());
    CHECK(as_set.size() == fillings.size());
    CHECK(as_set.count(worked_cfilling()) == 1);
    for (const CFilling& f : fillings) CHECK(cfilling_is_valid(f));
}

TEST_CASE("filling map images are valid fillings") {
    LambdaChain chain = chain_type_c(Partition({2, 1}), 2);
    enumerate_positive_folding_pairs(chain, [&](const FoldingPair& pair) {
        CHECK(cfilling_is_valid(filling_map_c(chain, pair)));
    });
}

TEST_CASE("image equality for the small shape") {
    LambdaChain chain = chain_type_c(Partition({2, 1}), 2);
    std::set<CFilling> image;
    enumerate_positive_folding_pairs(chain,
                                     [&](const FoldingPair& pair) { image.insert(filling_map_c(chain, pair)); });
    auto listed = enumerate_cfillings(Partition({2, 1}), 2);
    std::set<CFilling> expected(listed.begin(), listed.end());
    CHECK(image == expected);
}

TEST_CASE("Schwer term weights") {
    LambdaChain chain = chain_type_c(Partition({2, 1}), 2);
    for (const GroupElement& w : enumerate_group(GroupKind::TypeC, 2)) {
        TPoly term = schwer_term(chain, {w, {}});
        REQUIRE(term.term_count() == 1);
        CHECK(term.terms().begin()->first == act_on_weight(w, {2, 1}));
        CHECK(term.terms().begin()->second ==
              IntPoly2::monomial(1, 0, coxeter_length(w)));
    }
    TPoly id_term = schwer_term(chain, {GroupElement::identity(GroupKind::TypeC, 2), {}});
    CHECK(id_term.terms().begin()->second.is_one());
}

TEST_CASE("the worked fiber collapses to t(1-t)^3") {
    LambdaChain chain = chain_type_c(Partition({3, 2, 1}), 3);
    auto groups = fibers_c(chain);
    auto it = groups.find(worked_cfilling());
    REQUIRE(it != groups.end());
    CHECK(it->second.size() == 5);
    bool has_paper_member = false;
    for (const FoldingPair& p : it->second)
        if (p.w.window == std::vector<int>({-1, -2, -3}) && p.positions == std::vector<int>({2, 6, 12, 13}))
            has_paper_member = true;
    CHECK(has_paper_member);
    IntPoly2 sum;
    for (const FoldingPair& p : it->second) sum += schwer_weight(chain, p);
    CHECK(sum == IntPoly2::one_minus(0, 1).pow(3).times_monomial(1, 0, 1));
    FiberReport report = verify_fiber_c(chain, it->first, it->second);
    CHECK_MESSAGE(report.ok, report.detail);
}

TEST_CASE("all small fibers verify and statistics stay nonnegative") {
    LambdaChain chain = chain_type_c(Partition({2, 1}), 2);
    auto groups = fibers_c(chain);
    for (const auto& [sigma, members] : groups) {
        FiberReport report = verify_fiber_c(chain, sigma, members);
        CHECK_MESSAGE(report.ok, report.detail);
    }
    for (const CFilling& sigma : enumerate_cfillings(Partition({2, 1}), 2)) {
        PairStats st = stat_filling(sigma);
        CHECK(st.n_stat >= 0);
        CHECK(st.des >= 0);
    }
}

TEST_CASE("both formulas agree on the small shape") {
    CHECK(equal(hl_schwer(Partition({2, 1}), 2), hl_compressed(Partition({2, 1}), 2)));
}

// lambda = (3,1) and (4,2) have consecutive factors of equal column height,
// so the column following C_{i,lambda'_i} is the unprimed C_{i-1,1} rather
// than a primed one; (2,1) and (3,2,1) never reach that branch.
TEST_CASE("shapes with repeated factor heights") {
    for (Partition lambda : {Partition({3, 1}), Partition({4, 2})}) {
        LambdaChain chain = chain_type_c(lambda, 2);
        auto groups = fibers_c(chain);
        for (const auto& [sigma, members] : groups) {
            FiberReport report = verify_fiber_c(chain, sigma, members);
            CHECK_MESSAGE(report.ok, report.detail);
        }
        std::set<CFilling> image;
        for (const auto& [sigma, members] : groups) image.insert(sigma);
        auto listed = enumerate_cfillings(lambda, 2);
        CHECK(image == std::set<CFilling>(listed.begin(), listed.end()));
        CHECK(equal(hl_schwer(lambda, 2), hl_compressed(lambda, 2)));
        TPoly p = hl_compressed(lambda, 2);
        CHECK(specialize(p, 0) == as_rational_map(weyl_character_c(lambda, 2)));
    }
}

TEST_CASE("content identity holds for every positive pair") {
    LambdaChain chain = chain_type_c(Partition({2, 1}), 2);
    enumerate_positive_folding_pairs(chain, [&](const FoldingPair& pair) {
        CHECK(content_c(filling_map_c(chain, pair)) == act_on_weight(pair.w, mu_of(chain, pair.positions)));
    });
}

TEST_CASE("specializations of the small Hall-Littlewood polynomial") {
    Partition lambda({2, 1});
    TPoly p = hl_compressed(lambda, 2);
    CHECK(specialize(p, 0) == as_rational_map(weyl_character_c(lambda, 2)));
    ZPoly orbit(2);
    for (const auto& e : exponent_orbit(lambda.padded(2), GroupKind::TypeC)) orbit.add_term(e, 1);
    CHECK(specialize(p, 1) == as_rational_map(orbit));
    for (const GroupElement& w : enumerate_group(GroupKind::TypeC, 2)) CHECK(equal(p, p.relabeled(w.window)));
}
