#include "mhl/chain.hpp"

#include <algorithm>
#include <map>

namespace mhl {

const ChainBlock& LambdaChain::block_of(int pos) const {
    for (const ChainBlock& b : blocks)
        if (pos >= b.begin && pos < b.end) return b;
    throw internal_error("block_of: position outside chain");
}

namespace {

void finish_levels(LambdaChain& chain) {
    std::map<std::pair<RootLabel::Kind, std::pair<int, int>>, int> seen;
    chain.levels.reserve(chain.roots.size());
    for (const RootLabel& r : chain.roots)
        chain.levels.push_back(++seen[{r.kind, {r.i, r.k}}]);
}

} // namespace

LambdaChain chain_type_a(const Partition& lambda, int n) {
    lambda.require_parts(n - 1, "chain_type_a");
    LambdaChain chain;
    chain.kind = GroupKind::TypeA;
    chain.n = n;
    chain.lambda = lambda;
    for (int j = lambda.first(); j >= 2; --j) {
        int k = lambda.conjugate(j);
        // Gamma_j is the primed chain exactly at the smallest column index
        // of its height.
        bool primed = true;
        for (int jj = 1; jj < j; ++jj)
            if (lambda.conjugate(jj) == k) {
                primed = false;
                break;
            }
        ChainBlock block{j, 0, primed, chain.length() + 1, 0};
        for (int row = k; row >= 1; --row) {
            int last = primed ? k + 2 : k + 1;
            for (int col = n; col >= last; --col) chain.roots.push_back(RootLabel::plain(row, col));
        }
        block.end = chain.length() + 1;
        chain.blocks.push_back(block);
    }
    finish_levels(chain);
    return chain;
}

LambdaChain chain_type_c(const Partition& lambda, int n) {
    if (n < 2) throw shape_error("chain_type_c: rank must be at least 2");
    lambda.require_parts(n, "chain_type_c");
    LambdaChain chain;
    chain.kind = GroupKind::TypeC;
    chain.n = n;
    chain.lambda = lambda;
    for (int i = lambda.first(); i >= 1; --i) {
        int k = lambda.conjugate(i);
        // Gamma'_{ik'} for k' = 2..k
        for (int kk = 2; kk <= k; ++kk) {
            ChainBlock block{i, kk, true, chain.length() + 1, 0};
            for (int r = 1; r < kk; ++r) chain.roots.push_back(RootLabel::barred(r, kk));
            block.end = chain.length() + 1;
            chain.blocks.push_back(block);
        }
        // Gamma_{ij} = Gamma_j(k) for j = 1..k
        for (int j = 1; j <= k; ++j) {
            ChainBlock block{i, j, false, chain.length() + 1, 0};
            for (int r = 1; r < j; ++r) chain.roots.push_back(RootLabel::barred(r, j));
            for (int c = k + 1; c <= n; ++c) chain.roots.push_back(RootLabel::barred(j, c));
            chain.roots.push_back(RootLabel::long_root(j));
            for (int c = n; c >= k + 1; --c) chain.roots.push_back(RootLabel::plain(j, c));
            block.end = chain.length() + 1;
            chain.blocks.push_back(block);
        }
    }
    finish_levels(chain);
    return chain;
}

GroupElement phi_of(const LambdaChain& chain, const std::vector<int>& positions) {
    GroupElement u = GroupElement::identity(chain.kind, chain.n);
    for (int pos : positions) u = compose(u, chain.root_at(pos));
    return u;
}

std::vector<int> mu_of(const LambdaChain& chain, const std::vector<int>& positions) {
    std::vector<int> mu = chain.lambda.padded(chain.n);
    for (auto it = positions.rbegin(); it != positions.rend(); ++it) {
        const RootLabel& beta = chain.root_at(*it);
        long level = chain.level_at(*it);
        long d = beta.pair_coroot(mu) - level;
        std::vector<int> alpha = beta.vec(chain.n);
        for (std::size_t c = 0; c < mu.size(); ++c) mu[c] -= static_cast<int>(d) * alpha[c];
    }
    return mu;
}

FoldClassification classify_foldings(const LambdaChain& chain, const FoldingPair& pair) {
    FoldClassification split;
    GroupElement u = pair.w;
    for (int pos : pair.positions) {
        const RootLabel& r = chain.root_at(pos);
        if (is_length_decreasing(u, r))
            split.positive.push_back(pos);
        else
            split.negative.push_back(pos);
        u = compose(u, r);
    }
    return split;
}

void enumerate_folding_pairs(const LambdaChain& chain, const std::function<void(const FoldingPair&)>& sink) {
    int m = chain.length();
    if (m > 30) throw internal_error("enumerate_folding_pairs: chain too long for subset enumeration");
    for (const GroupElement& w : enumerate_group(chain.kind, chain.n)) {
        for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
            FoldingPair pair{w, {}};
            for (int pos = 1; pos <= m; ++pos)
                if (mask & (1ul << (pos - 1))) pair.positions.push_back(pos);
            sink(pair);
        }
    }
}

std::vector<FoldingPair> enumerate_folding_pairs(const LambdaChain& chain) {
    std::vector<FoldingPair> out;
    enumerate_folding_pairs(chain, [&](const FoldingPair& p) { out.push_back(p); });
    return out;
}

namespace {

void positive_dfs(const LambdaChain& chain, int pos, const GroupElement& u, std::vector<int>& folds,
                  const GroupElement& w, const std::function<void(const FoldingPair&)>& sink) {
    if (pos > chain.length()) {
        sink(FoldingPair{w, folds});
        return;
    }
    positive_dfs(chain, pos + 1, u, folds, w, sink);
    const RootLabel& r = chain.root_at(pos);
    if (is_length_decreasing(u, r)) {
        folds.push_back(pos);
        positive_dfs(chain, pos + 1, compose(u, r), folds, w, sink);
        folds.pop_back();
    }
}

} // namespace

void enumerate_positive_folding_pairs(const LambdaChain& chain,
                                      const std::function<void(const FoldingPair&)>& sink) {
    for (const GroupElement& w : enumerate_group(chain.kind, chain.n)) {
        std::vector<int> folds;
        positive_dfs(chain, 1, w, folds, w, sink);
    }
}

std::vector<FoldingPair> enumerate_positive_folding_pairs(const LambdaChain& chain) {
    std::vector<FoldingPair> out;
    enumerate_positive_folding_pairs(chain, [&](const FoldingPair& p) { out.push_back(p); });
    return out;
}

} // namespace mhl
