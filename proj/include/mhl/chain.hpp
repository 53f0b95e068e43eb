#ifndef MHL_CHAIN_HPP
#define MHL_CHAIN_HPP

#include <functional>
#include <string>
#include <vector>

#include "mhl/partition.hpp"
#include "mhl/weyl.hpp"

namespace mhl {

// One contiguous block of chain positions belonging to a single factor.
// Type A: factor = j of Gamma_j, index unused (0).
// Type C: factor = i of Gamma^i, index = j of Gamma_{ij} or k of Gamma'_{ik}.
struct ChainBlock {
    int factor = 0;
    int index = 0;
    bool primed = false;
    int begin = 0; // first position, 1-based
    int end = 0;   // one past the last position
};

// A lambda-chain: ordered positive roots with occurrence levels and the
// factor structure of the defining concatenation.
struct LambdaChain {
    GroupKind kind = GroupKind::TypeA;
    int n = 0;
    Partition lambda;
    std::vector<RootLabel> roots;  // positions 1..m stored 0-based
    std::vector<int> levels;       // levels[j-1] = l_j
    std::vector<ChainBlock> blocks;

    int length() const { return static_cast<int>(roots.size()); }
    const RootLabel& root_at(int pos) const { return roots[static_cast<std::size_t>(pos - 1)]; }
    int level_at(int pos) const { return levels[static_cast<std::size_t>(pos - 1)]; }
    const ChainBlock& block_of(int pos) const;
};

// The explicit lambda-chain Gamma_{lambda_1} ... Gamma_2 of the type A
// construction. lambda must have n-1 strictly decreasing positive parts.
LambdaChain chain_type_a(const Partition& lambda, int n);

// The extended lambda-chain Gamma^{lambda_1} ... Gamma^1 of the type C
// construction. lambda must have n strictly decreasing positive parts.
LambdaChain chain_type_c(const Partition& lambda, int n);

// A group element together with a set of fold positions.
struct FoldingPair {
    GroupElement w;
    std::vector<int> positions; // strictly increasing, 1-based

    int size() const { return static_cast<int>(positions.size()); }
    friend bool operator==(const FoldingPair&, const FoldingPair&) = default;
};

// Product of the reflections at the positions of J, left to right.
GroupElement phi_of(const LambdaChain& chain, const std::vector<int>& positions);

// The weight mu(J): affine reflections s_{beta_j, l_j} applied to lambda,
// rightmost first.
std::vector<int> mu_of(const LambdaChain& chain, const std::vector<int>& positions);

struct FoldClassification {
    std::vector<int> positive; // J+
    std::vector<int> negative; // J-
};

// Walk J in increasing order and split each position by whether the running
// element's length decreases there.
FoldClassification classify_foldings(const LambdaChain& chain, const FoldingPair& pair);

// Every (w, J) with w in the ambient group and J a subset of chain
// positions; w lexicographic, subsets in binary counter order.
std::vector<FoldingPair> enumerate_folding_pairs(const LambdaChain& chain);
void enumerate_folding_pairs(const LambdaChain& chain, const std::function<void(const FoldingPair&)>& sink);

// Exactly the pairs with J- empty, by depth-first search over positions
// ("no fold" branch before "fold" branch).
std::vector<FoldingPair> enumerate_positive_folding_pairs(const LambdaChain& chain);
void enumerate_positive_folding_pairs(const LambdaChain& chain, const std::function<void(const FoldingPair&)>& sink);

// Outcome of one fiberwise identity check.
struct FiberReport {
    bool ok = true;
    std::string detail;
};

} // namespace mhl

#endif
