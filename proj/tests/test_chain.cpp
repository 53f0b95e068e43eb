#include <doctest.h>

#include <map>
#include <set>

#include "mhl/chain.hpp"
#include "mhl/io.hpp"

using namespace mhl;

namespace {

// Number of affine walls between the origin alcove and its lambda-translate:
// each positive root beta is crossed <lambda, beta^vee> times.
std::map<std::string, long> wall_multiplicities(const Partition& lambda, int n) {
    std::map<std::string, long> mult;
    std::vector<int> lam = lambda.padded(n);
    for (const RootLabel& beta : positive_roots(GroupKind::TypeC, n)) {
        long pairing = beta.pair_coroot(lam);
        if (pairing > 0) mult[beta.to_string()] = pairing;
    }
    return mult;
}

} // namespace

TEST_CASE("type A chain reproduces the explicit construction") {
    LambdaChain chain = chain_type_a(Partition({4, 3, 1}), 4);
    CHECK(chain_tokens(chain) == "(1,4),(1,3) | (2,4),(2,3),(1,4),(1,3) | (2,4),(1,4)");
    CHECK(chain.length() == 8);
    CHECK(chain_type_a(Partition({1}), 2).length() == 0);
    CHECK(chain_tokens(chain_type_a(Partition({2, 1}), 3)) == "(1,3)");
    CHECK_THROWS_AS(chain_type_a(Partition({2, 1}), 4), shape_error);
    CHECK_THROWS_AS(Partition({2, 2, 1}), regularity_error);
    CHECK_THROWS_AS(Partition({3, 0}), regularity_error);
}

TEST_CASE("type C chain reproduces the explicit construction") {
    LambdaChain chain = chain_type_c(Partition({3, 2, 1}), 3);
    CHECK(chain.length() == 22);
    CHECK(chain_tokens(chain) ==
          "(1,-2),(1,-3),(1,-1),(1,3),(1,2) || "
          "(1,-2) | (1,-3),(1,-1),(1,3) | (1,-2),(2,-3),(2,-2),(2,3) || "
          "(1,-2) | (1,-3),(2,-3) | (1,-1) | (1,-2),(2,-2) | (1,-3),(2,-3),(3,-3)");
    // factor blocks: Gamma_31 || Gamma'_22 Gamma_21 Gamma_22 || Gamma'_12 Gamma'_13 Gamma_11 Gamma_12 Gamma_13
    REQUIRE(chain.blocks.size() == 9);
    auto tag = [&](std::size_t b) {
        return std::tuple<int, int, bool>{chain.blocks[b].factor, chain.blocks[b].index, chain.blocks[b].primed};
    };
    CHECK(tag(0) == std::tuple<int, int, bool>{3, 1, false});
    CHECK(tag(1) == std::tuple<int, int, bool>{2, 2, true});
    CHECK(tag(2) == std::tuple<int, int, bool>{2, 1, false});
    CHECK(tag(3) == std::tuple<int, int, bool>{2, 2, false});
    CHECK(tag(4) == std::tuple<int, int, bool>{1, 2, true});
    CHECK(tag(5) == std::tuple<int, int, bool>{1, 3, true});
    CHECK(tag(6) == std::tuple<int, int, bool>{1, 1, false});
    CHECK(tag(7) == std::tuple<int, int, bool>{1, 2, false});
    CHECK(tag(8) == std::tuple<int, int, bool>{1, 3, false});

    CHECK(chain_tokens(chain_type_c(Partition({2, 1}), 2)) ==
          "(1,-2),(1,-1),(1,2) || (1,-2) | (1,-1) | (1,-2),(2,-2)");
    CHECK_THROWS_AS(chain_type_c(Partition({1}), 1), shape_error);
    CHECK_THROWS_AS(chain_type_c(Partition({2, 1}), 3), shape_error);
}

TEST_CASE("extended chains cross each wall the right number of times") {
    for (auto [lambda, n] : {std::pair<Partition, int>{Partition({2, 1}), 2}, {Partition({3, 2, 1}), 3}}) {
        LambdaChain chain = chain_type_c(lambda, n);
        std::map<std::string, long> seen;
        for (const RootLabel& r : chain.roots) ++seen[r.to_string()];
        CHECK(seen == wall_multiplicities(lambda, n));
    }
}

TEST_CASE("levels count occurrences") {
    for (const LambdaChain& chain :
         {chain_type_a(Partition({4, 3, 1}), 4), chain_type_c(Partition({3, 2, 1}), 3)}) {
        for (int pos = 1; pos <= chain.length(); ++pos) {
            int count = 0;
            for (int p = 1; p <= pos; ++p)
                if (chain.root_at(p) == chain.root_at(pos)) ++count;
            CHECK(chain.level_at(pos) == count);
        }
    }
}

TEST_CASE("phi is the ordered product of reflections") {
    LambdaChain chain = chain_type_a(Partition({4, 3, 1}), 4);
    CHECK(phi_of(chain, {}).is_identity());
    CHECK(phi_of(chain, {1, 4, 6, 7}) == GroupElement{GroupKind::TypeA, {2, 1, 4, 3}});
    for (int pos = 1; pos <= chain.length(); ++pos)
        CHECK(phi_of(chain, {pos}) ==
              compose(GroupElement::identity(GroupKind::TypeA, 4), chain.root_at(pos)));
}

TEST_CASE("mu applies affine reflections rightmost first") {
    LambdaChain chain = chain_type_a(Partition({4, 3, 1}), 4);
    CHECK(mu_of(chain, {}) == std::vector<int>({4, 3, 1, 0}));
    CHECK(mu_of(chain, {1, 4, 6, 7}) == std::vector<int>({2, 3, 1, 2}));
    CHECK(mu_of(chain, {1}) == std::vector<int>({1, 3, 1, 3}));

    LambdaChain cc = chain_type_c(Partition({3, 2, 1}), 3);
    CHECK(mu_of(cc, {2, 6, 12, 13}) == std::vector<int>({0, -1, -1}));
}

TEST_CASE("folding classification follows the running element") {
    LambdaChain chain = chain_type_a(Partition({4, 3, 1}), 4);
    FoldingPair pair{{GroupKind::TypeA, {2, 3, 4, 1}}, {1, 4, 6, 7}};
    FoldClassification split = classify_foldings(chain, pair);
    CHECK(split.positive == std::vector<int>({1, 7}));
    CHECK(split.negative == std::vector<int>({4, 6}));

    FoldClassification empty = classify_foldings(chain, {{GroupKind::TypeA, {2, 3, 4, 1}}, {}});
    CHECK(empty.positive.empty());
    CHECK(empty.negative.empty());

    LambdaChain cc = chain_type_c(Partition({3, 2, 1}), 3);
    FoldClassification pos = classify_foldings(cc, {{GroupKind::TypeC, {-1, -2, -3}}, {2, 6, 12, 13}});
    CHECK(pos.negative.empty());
    CHECK(pos.positive == std::vector<int>({2, 6, 12, 13}));

    // rerunning on the recombined split reproduces it
    std::vector<int> again = pos.positive;
    FoldClassification rerun = classify_foldings(cc, {{GroupKind::TypeC, {-1, -2, -3}}, again});
    CHECK(rerun.positive == pos.positive);
    CHECK(rerun.negative == pos.negative);
}

TEST_CASE("full enumeration covers W x 2^[m] exactly once") {
    CHECK(enumerate_folding_pairs(chain_type_a(Partition({1}), 2)).size() == 2);
    CHECK(enumerate_folding_pairs(chain_type_a(Partition({2, 1}), 3)).size() == 12);
    LambdaChain big = chain_type_a(Partition({4, 3, 1}), 4);
    auto pairs = enumerate_folding_pairs(big);
    CHECK(pairs.size() == 6144);
    std::set<std::pair<std::vector<int>, std::vector<int>>> distinct;
    for (const FoldingPair& p : pairs) distinct.insert({p.w.window, p.positions});
    CHECK(distinct.size() == pairs.size());
}

TEST_CASE("positive enumeration equals the brute filter") {
    for (const LambdaChain& chain :
         {chain_type_c(Partition({2, 1}), 2), chain_type_a(Partition({2, 1}), 3)}) {
        std::set<std::pair<std::vector<int>, std::vector<int>>> expected;
        for (const FoldingPair& p : enumerate_folding_pairs(chain))
            if (classify_foldings(chain, p).negative.empty()) expected.insert({p.w.window, p.positions});
        std::set<std::pair<std::vector<int>, std::vector<int>>> actual;
        for (const FoldingPair& p : enumerate_positive_folding_pairs(chain))
            actual.insert({p.w.window, p.positions});
        CHECK(actual == expected);
        // (w, {}) is always yielded
        for (const GroupElement& w : enumerate_group(chain.kind, chain.n))
            CHECK(actual.count({w.window, {}}) == 1);
    }
}

TEST_CASE("length parity and Schwer positivity invariants") {
    LambdaChain chain = chain_type_a(Partition({2, 1}), 3);
    for (const FoldingPair& p : enumerate_folding_pairs(chain)) {
        GroupElement end = p.w;
        for (int pos : p.positions) end = compose(end, chain.root_at(pos));
        int diff = coxeter_length(p.w) - coxeter_length(end);
        CHECK((diff - p.size()) % 2 == 0);
    }
    LambdaChain cc = chain_type_c(Partition({2, 1}), 2);
    for (const FoldingPair& p : enumerate_positive_folding_pairs(cc)) {
        GroupElement end = p.w;
        for (int pos : p.positions) end = compose(end, cc.root_at(pos));
        int twice = coxeter_length(p.w) + coxeter_length(end) - p.size();
        CHECK(twice >= 0);
        CHECK(twice % 2 == 0);
        CHECK(coxeter_length(end) <= coxeter_length(p.w) - p.size());
    }
}
