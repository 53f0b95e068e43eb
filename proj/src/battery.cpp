#include "mhl/battery.hpp"

#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "mhl/io.hpp"
#include "mhl/oracles.hpp"
#include "mhl/type_a.hpp"
#include "mhl/type_c.hpp"

namespace mhl {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
    bool ok = true;
    std::ostringstream detail;

    void fail(const std::string& msg) {
        ok = false;
        detail << msg << "; ";
    }
    void expect(bool cond, const std::string& msg) {
        if (!cond) fail(msg);
    }
};

const char* kChainA431 = "(1,4),(1,3) | (2,4),(2,3),(1,4),(1,3) | (2,4),(1,4)";
const char* kChainC321 =
    "(1,-2),(1,-3),(1,-1),(1,3),(1,2) || "
    "(1,-2) | (1,-3),(1,-1),(1,3) | (1,-2),(2,-3),(2,-2),(2,3) || "
    "(1,-2) | (1,-3),(2,-3) | (1,-1) | (1,-2),(2,-2) | (1,-3),(2,-3),(3,-3)";

CriterionResult criterion_chains() {
    Checker c;
    auto t0 = Clock::now();
    LambdaChain a = chain_type_a(Partition({4, 3, 1}), 4);
    auto t1 = Clock::now();
    LambdaChain ch = chain_type_c(Partition({3, 2, 1}), 3);
    auto t2 = Clock::now();
    double ms_a = std::chrono::duration<double, std::milli>(t1 - t0).count();
    double ms_c = std::chrono::duration<double, std::milli>(t2 - t1).count();
    c.expect(chain_tokens(a) == kChainA431, "type A chain listing differs");
    c.expect(ch.length() == 22, "type C chain length is not 22");
    c.expect(chain_tokens(ch) == kChainC321, "type C chain listing differs");
    c.expect(ms_a < 1.0, "type A chain construction took over 1 ms");
    c.expect(ms_c < 1.0, "type C chain construction took over 1 ms");
    if (c.ok) {
        std::ostringstream os;
        os << "both chains reproduced token-for-token (" << ms_a << " ms, " << ms_c << " ms)";
        c.detail << os.str();
    }
    return {1, "chain reproduction", c.ok, c.detail.str(), 0.0};
}

CriterionResult criterion_worked_examples() {
    Checker c;
    LambdaChain a = chain_type_a(Partition({4, 3, 1}), 4);
    FoldingPair pa{{GroupKind::TypeA, {2, 3, 4, 1}}, {1, 4, 6, 7}};
    Filling fa = filling_map(a, pa);
    std::vector<std::vector<int>> expect_a = {{3, 3, 1, 2}, {2, 4, 3}, {1}};
    c.expect(fa.rows == expect_a, "type A worked filling differs");
    FoldClassification split = classify_foldings(a, pa);
    c.expect(split.positive == std::vector<int>({1, 7}), "J+ differs from {1,7}");
    c.expect(split.negative == std::vector<int>({4, 6}), "J- differs from {4,6}");
    LambdaChain ch = chain_type_c(Partition({3, 2, 1}), 3);
    FoldingPair pc{{GroupKind::TypeC, {-1, -2, -3}}, {2, 6, 12, 13}};
    CFilling fc = filling_map_c(ch, pc);
    std::vector<Column> expect_c = {{-1}, {3, -2}, {2, -3}, {2, -3}, {2, 1, 3}, {2, 1, 3}, {2, 1, 3}};
    c.expect(fc.columns == expect_c, "type C worked filling differs");
    if (c.ok) c.detail << "both worked fillings and the {1,7}/{4,6} classification reproduced";
    return {2, "worked-example fidelity", c.ok, c.detail.str(), 0.0};
}

std::vector<Partition> type_a_shapes(Suite suite, std::vector<int>& ns) {
    if (suite == Suite::Quick) {
        ns = {3};
        return {Partition({2, 1})};
    }
    ns = {3, 4, 4};
    return {Partition({2, 1}), Partition({3, 2, 1}), Partition({4, 3, 1})};
}

CriterionResult criterion_compression_a(Suite suite) {
    Checker c;
    std::vector<int> ns;
    std::vector<Partition> shapes = type_a_shapes(suite, ns);
    long fiber_total = 0;
    for (std::size_t s = 0; s < shapes.size(); ++s) {
        const Partition& lambda = shapes[s];
        int n = ns[s];
        LambdaChain chain = chain_type_a(lambda, n);
        auto groups = fibers(chain);
        for (const auto& [sigma, members] : groups) {
            FiberReport r = verify_fiber(chain, sigma, members);
            if (!r.ok) {
                c.fail("fiber fails for lambda=" + lambda.to_string() + ": " + r.detail);
                break;
            }
        }
        fiber_total += static_cast<long>(groups.size());
        if (!equal(macdonald_ramyip(lambda, n), macdonald_compressed(lambda, n)))
            c.fail("formulas differ for lambda=" + lambda.to_string() + ", n=" + std::to_string(n));
    }
    if (c.ok) c.detail << fiber_total << " fibers verified; both formulas agree on all shapes";
    return {3, "type A compression (fiberwise + full polynomials)", c.ok, c.detail.str(), 0.0};
}

CriterionResult criterion_specializations_a(Suite suite) {
    Checker c;
    std::vector<int> ns;
    std::vector<Partition> shapes = type_a_shapes(suite, ns);
    std::mt19937 rng(20260809u);
    for (std::size_t s = 0; s < shapes.size(); ++s) {
        const Partition& lambda = shapes[s];
        int n = ns[s];
        QtPoly p = macdonald_compressed(lambda, n);
        ZPoly schur = schur_ssyt(lambda, n);
        for (int trial = 0; trial < 5; ++trial) {
            int num = static_cast<int>(rng() % 7) + 2;
            int den = num;
            while (den == num) den = static_cast<int>(rng() % 7) + 2;
            Rational t0(num, den);
            if (trial % 2 == 1) t0 = -t0;
            if (specialize(p, t0, t0) != as_rational_map(schur)) {
                c.fail("q=t specialization differs from Schur at t=" + t0.str() + " for lambda=" +
                       lambda.to_string());
                break;
            }
        }
        for (int i = 1; i < n; ++i) {
            std::vector<int> images;
            for (int v = 1; v <= n; ++v) images.push_back(v);
            std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(i)]);
            if (!equal(p, p.relabeled(images))) {
                c.fail("not symmetric under swap of x" + std::to_string(i) + ",x" + std::to_string(i + 1));
                break;
            }
        }
        try {
            auto expansion = monomial_expand(p, GroupKind::TypeA);
            std::vector<int> lam = lambda.padded(n);
            bool lead_ok = false;
            for (const auto& [rep, coeff] : expansion) {
                if (!dominance_leq(rep, lam)) c.fail("support outside dominance for " + lambda.to_string());
                if (rep == lam) lead_ok = frac_equal(coeff, QTFraction::one());
            }
            c.expect(lead_ok, "coefficient of m_lambda is not 1 for " + lambda.to_string());
        } catch (const symmetry_error& e) {
            c.fail(e.what());
        }
    }
    if (c.ok) c.detail << "q=t Schur checks (5 points/shape), symmetry and dominance triangularity hold";
    return {4, "type A specializations", c.ok, c.detail.str(), 0.0};
}

std::vector<Partition> type_c_shapes(Suite suite, std::vector<int>& ns) {
    if (suite == Suite::Quick) {
        ns = {2};
        return {Partition({2, 1})};
    }
    ns = {2, 3};
    return {Partition({2, 1}), Partition({3, 2, 1})};
}

CriterionResult criterion_compression_c(Suite suite) {
    Checker c;
    std::vector<int> ns;
    std::vector<Partition> shapes = type_c_shapes(suite, ns);
    long fiber_total = 0;
    for (std::size_t s = 0; s < shapes.size(); ++s) {
        const Partition& lambda = shapes[s];
        int n = ns[s];
        LambdaChain chain = chain_type_c(lambda, n);
        auto groups = fibers_c(chain);
        for (const auto& [sigma, members] : groups) {
            FiberReport r = verify_fiber_c(chain, sigma, members);
            if (!r.ok) {
                c.fail("fiber fails for lambda=" + lambda.to_string() + ": " + r.detail);
                break;
            }
        }
        fiber_total += static_cast<long>(groups.size());
        if (!equal(hl_schwer(lambda, n), hl_compressed(lambda, n)))
            c.fail("formulas differ for lambda=" + lambda.to_string() + ", n=" + std::to_string(n));
    }
    if (c.ok) c.detail << fiber_total << " fibers verified; both formulas agree on all shapes";
    return {5, "type C compression (fiberwise + full polynomials)", c.ok, c.detail.str(), 0.0};
}

CriterionResult criterion_specializations_c(Suite suite) {
    Checker c;
    std::vector<int> ns;
    std::vector<Partition> shapes = type_c_shapes(suite, ns);
    for (std::size_t s = 0; s < shapes.size(); ++s) {
        const Partition& lambda = shapes[s];
        int n = ns[s];
        TPoly p = hl_compressed(lambda, n);
        if (specialize(p, 0) != as_rational_map(weyl_character_c(lambda, n)))
            c.fail("t=0 does not match the Weyl character for " + lambda.to_string());
        ZPoly orbit_sum(n);
        for (const auto& e : exponent_orbit(lambda.padded(n), GroupKind::TypeC)) orbit_sum.add_term(e, 1);
        if (specialize(p, 1) != as_rational_map(orbit_sum))
            c.fail("t=1 does not match the orbit sum for " + lambda.to_string());
        bool invariant = true;
        for (const GroupElement& w : enumerate_group(GroupKind::TypeC, n))
            if (!equal(p, p.relabeled(w.window))) {
                invariant = false;
                break;
            }
        c.expect(invariant, "not invariant under the signed permutation action for " + lambda.to_string());
    }
    if (c.ok) c.detail << "t=0 Weyl character, t=1 orbit sum and full B_n invariance hold";
    return {6, "type C specializations", c.ok, c.detail.str(), 0.0};
}

CriterionResult criterion_images(Suite suite) {
    Checker c;
    {
        std::vector<std::pair<Partition, int>> shapes = {{Partition({2, 1}), 3}};
        if (suite == Suite::Full) shapes.emplace_back(Partition({3, 2, 1}), 4);
        for (const auto& [lambda, n] : shapes) {
            LambdaChain chain = chain_type_a(lambda, n);
            std::set<Filling> image;
            enumerate_folding_pairs(chain,
                                    [&](const FoldingPair& pair) { image.insert(filling_map(chain, pair)); });
            std::vector<Filling> all = enumerate_nonattacking(lambda, n);
            std::set<Filling> expected(all.begin(), all.end());
            c.expect(image == expected, "type A image differs from the non-attacking set for " +
                                            lambda.to_string() + ", n=" + std::to_string(n));
        }
    }
    {
        LambdaChain chain = chain_type_c(Partition({2, 1}), 2);
        std::set<CFilling> image;
        enumerate_positive_folding_pairs(
            chain, [&](const FoldingPair& pair) { image.insert(filling_map_c(chain, pair)); });
        std::vector<CFilling> all = enumerate_cfillings(Partition({2, 1}), 2);
        std::set<CFilling> expected(all.begin(), all.end());
        c.expect(image == expected, "type C image differs from the enumerated filling set");
    }
    if (c.ok) c.detail << "filling-map images equal the independently enumerated filling sets";
    return {7, "image equality (surjectivity)", c.ok, c.detail.str(), 0.0};
}

CriterionResult criterion_structural(Suite suite) {
    Checker c;
    {
        std::vector<std::pair<Partition, int>> shapes = {{Partition({2, 1}), 3}};
        if (suite == Suite::Full) {
            shapes.emplace_back(Partition({3, 2, 1}), 4);
            shapes.emplace_back(Partition({4, 3, 1}), 4);
        }
        for (const auto& [lambda, n] : shapes) {
            LambdaChain chain = chain_type_a(lambda, n);
            bool parity_ok = true, content_ok = true;
            enumerate_folding_pairs(chain, [&](const FoldingPair& pair) {
                GroupElement end = pair.w;
                for (int pos : pair.positions) end = compose(end, chain.root_at(pos));
                int diff = coxeter_length(pair.w) - coxeter_length(end);
                if (((diff - pair.size()) % 2 + 2) % 2 != 0) parity_ok = false;
                if (filling_map(chain, pair).content() != act_on_weight(pair.w, mu_of(chain, pair.positions)))
                    content_ok = false;
            });
            c.expect(parity_ok, "length parity fails on a type A pair for " + lambda.to_string());
            c.expect(content_ok, "content identity fails on a type A pair for " + lambda.to_string());
        }
    }
    {
        std::vector<std::pair<Partition, int>> shapes = {{Partition({2, 1}), 2}};
        if (suite == Suite::Full) shapes.emplace_back(Partition({3, 2, 1}), 3);
        for (const auto& [lambda, n] : shapes) {
            LambdaChain chain = chain_type_c(lambda, n);
            bool schwer_ok = true, content_ok = true;
            enumerate_positive_folding_pairs(chain, [&](const FoldingPair& pair) {
                GroupElement end = pair.w;
                for (int pos : pair.positions) end = compose(end, chain.root_at(pos));
                int twice = coxeter_length(pair.w) + coxeter_length(end) - pair.size();
                if (twice < 0 || twice % 2 != 0) schwer_ok = false;
                if (content_c(filling_map_c(chain, pair)) != act_on_weight(pair.w, mu_of(chain, pair.positions)))
                    content_ok = false;
            });
            c.expect(schwer_ok, "Schwer exponent not a nonnegative integer for " + lambda.to_string());
            c.expect(content_ok, "content identity fails on a type C pair for " + lambda.to_string());
        }
    }
    if (c.ok) c.detail << "parity, Schwer exponent and content identities hold on every enumerated pair";
    return {8, "structural invariants per pair", c.ok, c.detail.str(), 0.0};
}

} // namespace

std::vector<CriterionResult> run_battery(Suite suite) {
    std::vector<CriterionResult> results;
    auto run = [&](auto&& fn) {
        auto start = Clock::now();
        CriterionResult r = fn();
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        results.push_back(std::move(r));
    };
    run([&] { return criterion_chains(); });
    run([&] { return criterion_worked_examples(); });
    run([&] { return criterion_compression_a(suite); });
    run([&] { return criterion_specializations_a(suite); });
    run([&] { return criterion_compression_c(suite); });
    run([&] { return criterion_specializations_c(suite); });
    run([&] { return criterion_images(suite); });
    run([&] { return criterion_structural(suite); });
    // stated runtime ceilings
    for (CriterionResult& r : results) {
        if (r.id == 3 && r.seconds >= 10.0) {
            r.pass = false;
            r.detail += "; exceeded 10 s";
        }
        if (r.id == 5 && r.seconds >= 60.0) {
            r.pass = false;
            r.detail += "; exceeded 60 s";
        }
    }
    return results;
}

} // namespace mhl
