#ifndef MHL_TYPE_A_HPP
#define MHL_TYPE_A_HPP

#include <map>
#include <string>
#include <vector>

#include "mhl/chain.hpp"
#include "mhl/partition.hpp"
#include "mhl/weight_poly.hpp"

namespace mhl {

struct Cell {
    int i = 0; // row
    int j = 0; // column, 1 = rightmost in the Japanese drawing
    auto operator<=>(const Cell&) const = default;
};

// A filling of the Young diagram of lambda with entries in 1..n.
// rows[i-1][j-1] = sigma(i,j).
struct Filling {
    Partition lambda;
    int n = 0;
    std::vector<std::vector<int>> rows;

    int entry(int i, int j) const { return rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; }
    std::vector<int> content() const;
    std::string to_text() const; // display rows, columns reversed for reading

    friend bool operator==(const Filling& a, const Filling& b) { return a.rows == b.rows; }
    friend bool operator<(const Filling& a, const Filling& b) { return a.rows < b.rows; }
};

struct FillingStats {
    std::vector<Cell> des;
    std::vector<Cell> diff;
    int inv_count = 0;   // |Inv|
    long maj = 0;        // sum of arms over Des
    long inv_stat = 0;   // |Inv| - sum of legs over Des
    std::vector<int> content;
};

// Cells attack when they share a column, or sit in consecutive columns with
// the left-column cell strictly above the right-column cell.
bool attacks(const Cell& u, const Cell& v);

int arm(const Partition& lambda, const Cell& u);
int leg(const Partition& lambda, const Cell& u);

// Cells ordered columns right to left (j ascending), top to bottom.
std::vector<Cell> reading_order(const Partition& lambda);

FillingStats stats(const Filling& sigma);

// All fillings of lambda with entries in 1..n and distinct values on every
// attacking pair, in deterministic order.
std::vector<Filling> enumerate_nonattacking(const Partition& lambda, int n);

// Scalar weight of one compressed term:
//   t^{n(lambda)-inv} q^{maj} prod_{Diff} (1-t)/(1-q^{arm} t^{leg+1}).
QTFraction compressed_weight(const Filling& sigma);
// The full term, weight times x^{content}.
QtPoly compressed_term(const Filling& sigma);

QtPoly macdonald_compressed(const Partition& lambda, int n);

// One Ram-Yip term for a folding pair on a type A chain.
QTFraction ramyip_weight(const LambdaChain& chain, const FoldingPair& pair);
QtPoly ramyip_term(const LambdaChain& chain, const FoldingPair& pair);

QtPoly macdonald_ramyip(const Partition& lambda, int n);

// The filling map sigma(i,j) = pi_j(i) with pi_j = w T_{lambda_1} ... T_{j+1}.
Filling filling_map(const LambdaChain& chain, const FoldingPair& pair);

// All folding pairs grouped by their image under the filling map.
std::map<Filling, std::vector<FoldingPair>> fibers(const LambdaChain& chain);

// Exact identity check for one fiber: sum of Ram-Yip scalar weights equals
// the compressed scalar weight, and content(sigma) = w(mu(T)) per member.
FiberReport verify_fiber(const LambdaChain& chain, const Filling& sigma, const std::vector<FoldingPair>& fiber);

} // namespace mhl

#endif
