#ifndef MHL_TYPE_C_HPP
#define MHL_TYPE_C_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mhl/chain.hpp"
#include "mhl/partition.hpp"
#include "mhl/weight_poly.hpp"

namespace mhl {

// A column of the doubled diagram: signed entries, no two equal up to sign.
using Column = std::vector<int>;

// Label of one column of the doubled shape: C_{ij} (primed = false) or
// C'_{ik} (primed = true); the index field holds j resp. k.
struct ColumnLabel {
    int i = 0;
    int index = 0;
    bool primed = false;
    int height = 0;
};

// The doubled shape: column i of lambda replicated lambda'_i times when
// i = 1 and 2 lambda'_i - 1 times when i > 1, ordered C^{lambda_1}...C^1.
struct DoubledShape {
    Partition lambda;
    int n = 0;
    std::vector<ColumnLabel> columns; // left to right

    int column_count() const { return static_cast<int>(columns.size()); }
};

DoubledShape doubled_shape(const Partition& lambda, int n);

// A filling of the doubled shape.
struct CFilling {
    Partition lambda;
    int n = 0;
    std::vector<Column> columns; // left to right, matching the shape heights

    std::string to_text() const; // rows top to bottom, barred entries negative

    friend bool operator==(const CFilling& a, const CFilling& b) { return a.columns == b.columns; }
    friend bool operator<(const CFilling& a, const CFilling& b) { return a.columns < b.columns; }
};

// Right action of a reflection on a column: BarredPair(a,b) transposes
// positions a,b and negates both, Long(a) negates position a, Plain(a,b)
// transposes.
Column column_reflect(const Column& c, const RootLabel& label);

// The reflection decomposition relating two adjacent columns.
struct CaseDescriptor {
    std::vector<int> fold_positions; // r_1 < ... < r_p < j
    bool unprimed_context = false;
    int j = 0;            // the distinguished position
    Column folded;        // D' = D (r_1,j) ... (r_p,j)
    int final_entry = 0;  // C(j)
    bool final_changed = false; // unprimed context: C(j) != D'(j)
};

// Reconstructs the fold positions linking D to C (C truncated to the height
// of D when taller by one). context j is the column index of the left
// column within its block. Returns nullopt when the pair violates the
// adjacency relation.
std::optional<CaseDescriptor> try_match_adjacent(const Column& D, const Column& C, bool unprimed_context, int j,
                                                 int n);
// Same, but throws adjacency_error instead of returning nullopt.
CaseDescriptor match_adjacent(const Column& D, const Column& C, bool unprimed_context, int j, int n);

struct PairStats {
    long n_stat = 0;
    int des = 0;
};

// The statistics N(D,C), des(D,C) of one adjacent pair.
PairStats stat_pair(const Column& D, const CaseDescriptor& desc, int n);

// N(sigma) = sum over adjacent pairs + inv(rightmost column);
// des(sigma) = sum over adjacent pairs.
PairStats stat_filling(const CFilling& sigma);

// Number of alphabet-order inversions of a single column.
int column_inversions(const Column& c, int n);

// The compressed filling of 2*lambda (eq. columns C'_{i2} C_{i1} per factor,
// with the wrap conventions).
std::vector<Column> compress_filling(const CFilling& sigma);
// content: m_i = (count of i - count of -i)/2 over the compressed filling.
std::vector<int> content_c(const CFilling& sigma);

// All fillings of the doubled shape satisfying the row, column and
// adjacency conditions, generated column by column.
std::vector<CFilling> enumerate_cfillings(const Partition& lambda, int n);

// Membership test used both by the enumerator and as an independent check
// on filling-map images.
bool cfilling_is_valid(const CFilling& sigma);

IntPoly2 hl_term_weight(const CFilling& sigma); // t^{N} (1-t)^{des}

TPoly hl_compressed(const Partition& lambda, int n);

IntPoly2 schwer_weight(const LambdaChain& chain, const FoldingPair& pair);
TPoly schwer_term(const LambdaChain& chain, const FoldingPair& pair);
TPoly hl_schwer(const Partition& lambda, int n);

// The filling map for positive folding pairs on a type C chain.
CFilling filling_map_c(const LambdaChain& chain, const FoldingPair& pair);

// Positive folding pairs grouped by their image.
std::map<CFilling, std::vector<FoldingPair>> fibers_c(const LambdaChain& chain);

// Exact identity in Z[t]: sum of Schwer weights over the fiber equals
// t^{N(sigma)} (1-t)^{des(sigma)}; content identity per member.
FiberReport verify_fiber_c(const LambdaChain& chain, const CFilling& sigma, const std::vector<FoldingPair>& fiber);

} // namespace mhl

#endif
