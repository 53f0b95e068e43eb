#include "mhl/type_c.hpp"

#include <algorithm>

namespace mhl {

DoubledShape doubled_shape(const Partition& lambda, int n) {
    if (n < 2) throw shape_error("doubled_shape: rank must be at least 2");
    lambda.require_parts(n, "doubled_shape");
    DoubledShape shape;
    shape.lambda = lambda;
    shape.n = n;
    for (int i = lambda.first(); i >= 1; --i) {
        int h = lambda.conjugate(i);
        for (int k = 2; k <= h; ++k) shape.columns.push_back({i, k, true, h});
        if (i > 1) {
            for (int j = 1; j <= h; ++j) shape.columns.push_back({i, j, false, h});
        } else {
            shape.columns.push_back({i, 1, false, h});
        }
    }
    return shape;
}

std::string CFilling::to_text() const {
    int max_h = 0;
    for (const Column& c : columns) max_h = std::max(max_h, static_cast<int>(c.size()));
    std::string out;
    for (int r = 1; r <= max_h; ++r) {
        bool first = true;
        for (const Column& c : columns) {
            if (static_cast<int>(c.size()) < r) continue;
            if (!first) out += " ";
            first = false;
            out += std::to_string(c[static_cast<std::size_t>(r - 1)]);
        }
        out += "\n";
    }
    return out;
}

Column column_reflect(const Column& c, const RootLabel& label) {
    Column out = c;
    std::size_t i = static_cast<std::size_t>(label.i - 1);
    std::size_t k = static_cast<std::size_t>(label.k - 1);
    if (i >= out.size() || k >= out.size()) throw internal_error("column_reflect: position out of range");
    switch (label.kind) {
        case RootLabel::Kind::Plain:
            std::swap(out[i], out[k]);
            break;
        case RootLabel::Kind::BarredPair: {
            int a = out[i], b = out[k];
            out[i] = -b;
            out[k] = -a;
            break;
        }
        case RootLabel::Kind::Long:
            out[i] = -out[i];
            break;
    }
    return out;
}

std::optional<CaseDescriptor> try_match_adjacent(const Column& D, const Column& C_full, bool unprimed_context,
                                                 int j, int n) {
    int d = static_cast<int>(D.size());
    if (static_cast<int>(C_full.size()) < d) return std::nullopt;
    Column C(C_full.begin(), C_full.begin() + d);
    if (j < 1 || j > d) return std::nullopt;

    CaseDescriptor desc;
    desc.unprimed_context = unprimed_context;
    desc.j = j;
    for (int p = 1; p < j; ++p)
        if (D[static_cast<std::size_t>(p - 1)] != C[static_cast<std::size_t>(p - 1)])
            desc.fold_positions.push_back(p);
    for (int p = j + 1; p <= d; ++p)
        if (D[static_cast<std::size_t>(p - 1)] != C[static_cast<std::size_t>(p - 1)]) return std::nullopt;

    Column folded = D;
    for (int r : desc.fold_positions) folded = column_reflect(folded, RootLabel::barred(r, j));
    for (int p = 1; p <= d; ++p)
        if (p != j && folded[static_cast<std::size_t>(p - 1)] != C[static_cast<std::size_t>(p - 1)])
            return std::nullopt;

    int c_j = C[static_cast<std::size_t>(j - 1)];
    int dp_j = folded[static_cast<std::size_t>(j - 1)];
    if (!unprimed_context) {
        if (c_j != dp_j) return std::nullopt;
    } else {
        if (!alph_leq(c_j, dp_j, n)) return std::nullopt;
        for (int p = 1; p <= d; ++p) {
            if (p == j) continue;
            int v = folded[static_cast<std::size_t>(p - 1)];
            if (c_j == v || c_j == -v) return std::nullopt;
        }
    }
    desc.folded = std::move(folded);
    desc.final_entry = c_j;
    desc.final_changed = unprimed_context && c_j != dp_j;
    return desc;
}

CaseDescriptor match_adjacent(const Column& D, const Column& C, bool unprimed_context, int j, int n) {
    auto desc = try_match_adjacent(D, C, unprimed_context, j, n);
    if (!desc) throw adjacency_error("match_adjacent: columns are not related by the reflection calculus");
    return *desc;
}

namespace {

// Entries of w strictly inside the alphabet interval (a, b).
int count_in_interval(const Column& w, std::size_t from, std::size_t to_excl, int a, int b, int n) {
    int lo = alph_key(a, n), hi = alph_key(b, n);
    int count = 0;
    for (std::size_t p = from; p < to_excl && p < w.size(); ++p) {
        int k = alph_key(w[p], n);
        if (lo < k && k < hi) ++count;
    }
    return count;
}

// Alphabet values strictly inside (a, b) avoiding +/- the first j entries.
int count_interval_complement(const Column& D, int j, int a, int b, int n) {
    int lo = alph_key(a, n), hi = alph_key(b, n);
    int count = 0;
    for (int v = -n; v <= n; ++v) {
        if (v == 0) continue;
        int k = alph_key(v, n);
        if (!(lo < k && k < hi)) continue;
        bool excluded = false;
        for (int p = 1; p <= j && !excluded; ++p) {
            int e = D[static_cast<std::size_t>(p - 1)];
            if (v == e || v == -e) excluded = true;
        }
        if (!excluded) ++count;
    }
    return count;
}

} // namespace

PairStats stat_pair(const Column& D, const CaseDescriptor& desc, int n) {
    PairStats st;
    int j = desc.j;
    Column running = D;
    for (int r : desc.fold_positions) {
        int a = running[static_cast<std::size_t>(r - 1)];
        int b = running[static_cast<std::size_t>(j - 1)];
        st.n_stat += count_in_interval(running, static_cast<std::size_t>(r), static_cast<std::size_t>(j - 1),
                                       -b, a, n);
        st.n_stat += count_interval_complement(running, j, -b, a, n);
        if (a < 0 && b < 0) st.n_stat += 1;
        running = column_reflect(running, RootLabel::barred(r, j));
    }
    st.des = static_cast<int>(desc.fold_positions.size());
    if (desc.unprimed_context) {
        st.n_stat += count_in_interval(D, static_cast<std::size_t>(j), D.size(), desc.final_entry,
                                       desc.folded[static_cast<std::size_t>(j - 1)], n);
        if (desc.final_changed) st.des += 1;
    }
    return st;
}

int column_inversions(const Column& c, int n) {
    int inv = 0;
    for (std::size_t p = 0; p < c.size(); ++p)
        for (std::size_t q = p + 1; q < c.size(); ++q)
            if (alph_key(c[p], n) > alph_key(c[q], n)) ++inv;
    return inv;
}

PairStats stat_filling(const CFilling& sigma) {
    DoubledShape shape = doubled_shape(sigma.lambda, sigma.n);
    PairStats total;
    for (std::size_t c = 0; c + 1 < sigma.columns.size(); ++c) {
        const ColumnLabel& left = shape.columns[c];
        CaseDescriptor desc = match_adjacent(sigma.columns[c], sigma.columns[c + 1], !left.primed,
                                             left.index, sigma.n);
        PairStats st = stat_pair(sigma.columns[c], desc, sigma.n);
        total.n_stat += st.n_stat;
        total.des += st.des;
    }
    total.n_stat += column_inversions(sigma.columns.back(), sigma.n);
    return total;
}

std::vector<Column> compress_filling(const CFilling& sigma) {
    DoubledShape shape = doubled_shape(sigma.lambda, sigma.n);
    // physical index of C_{i1} and of C'_{i2} per factor
    std::vector<Column> out;
    for (int i = sigma.lambda.first(); i >= 1; --i) {
        int c11 = -1, cp2 = -1;
        for (int c = 0; c < shape.column_count(); ++c) {
            const ColumnLabel& lab = shape.columns[static_cast<std::size_t>(c)];
            if (lab.i != i) continue;
            if (lab.primed && lab.index == 2) cp2 = c;
            if (!lab.primed && lab.index == 1) c11 = c;
        }
        if (c11 < 0) throw internal_error("compress_filling: missing column C_{i1}");
        // convention: C'_{i2} wraps to C_{i1} when the factor has no primed columns
        out.push_back(sigma.columns[static_cast<std::size_t>(cp2 >= 0 ? cp2 : c11)]);
        out.push_back(sigma.columns[static_cast<std::size_t>(c11)]);
    }
    return out;
}

std::vector<int> content_c(const CFilling& sigma) {
    std::vector<Column> bar = compress_filling(sigma);
    std::vector<int> plus(static_cast<std::size_t>(sigma.n), 0);
    std::vector<int> minus(static_cast<std::size_t>(sigma.n), 0);
    for (const Column& col : bar)
        for (int v : col) {
            if (v > 0)
                ++plus[static_cast<std::size_t>(v - 1)];
            else
                ++minus[static_cast<std::size_t>(-v - 1)];
        }
    std::vector<int> content(static_cast<std::size_t>(sigma.n), 0);
    for (std::size_t i = 0; i < content.size(); ++i) {
        int diff = plus[i] - minus[i];
        if (diff % 2 != 0) throw internal_error("content_c: odd entry multiplicity difference");
        content[i] = diff / 2;
    }
    return content;
}

namespace {

void candidate_columns_rec(int n, int height, Column& partial, std::vector<bool>& used_abs,
                           std::vector<Column>& out) {
    if (static_cast<int>(partial.size()) == height) {
        out.push_back(partial);
        return;
    }
    for (int v = -n; v <= n; ++v) {
        if (v == 0) continue;
        int a = v > 0 ? v : -v;
        if (used_abs[static_cast<std::size_t>(a)]) continue;
        used_abs[static_cast<std::size_t>(a)] = true;
        partial.push_back(v);
        candidate_columns_rec(n, height, partial, used_abs, out);
        partial.pop_back();
        used_abs[static_cast<std::size_t>(a)] = false;
    }
}

std::vector<Column> candidate_columns(int n, int height) {
    std::vector<Column> out;
    Column partial;
    std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
    candidate_columns_rec(n, height, partial, used, out);
    return out;
}

bool rows_weakly_decreasing(const Column& left, const Column& right, int n) {
    for (std::size_t r = 0; r < left.size() && r < right.size(); ++r)
        if (!alph_leq(right[r], left[r], n)) return false;
    return true;
}

void enumerate_rec(const DoubledShape& shape, const std::vector<std::vector<Column>>& candidates_by_height,
                   std::size_t at, CFilling& partial, std::vector<CFilling>& out) {
    if (at == shape.columns.size()) {
        out.push_back(partial);
        return;
    }
    const ColumnLabel& lab = shape.columns[at];
    for (const Column& cand : candidates_by_height[static_cast<std::size_t>(lab.height)]) {
        if (at > 0) {
            const Column& prev = partial.columns.back();
            const ColumnLabel& prev_lab = shape.columns[at - 1];
            if (!rows_weakly_decreasing(prev, cand, shape.n)) continue;
            if (!try_match_adjacent(prev, cand, !prev_lab.primed, prev_lab.index, shape.n)) continue;
        }
        partial.columns.push_back(cand);
        enumerate_rec(shape, candidates_by_height, at + 1, partial, out);
        partial.columns.pop_back();
    }
}

} // namespace

std::vector<CFilling> enumerate_cfillings(const Partition& lambda, int n) {
    DoubledShape shape = doubled_shape(lambda, n);
    std::vector<std::vector<Column>> by_height(static_cast<std::size_t>(n + 1));
    for (int h = 1; h <= n; ++h) by_height[static_cast<std::size_t>(h)] = candidate_columns(n, h);
    CFilling partial{lambda, n, {}};
    std::vector<CFilling> out;
    enumerate_rec(shape, by_height, 0, partial, out);
    return out;
}

bool cfilling_is_valid(const CFilling& sigma) {
    DoubledShape shape = doubled_shape(sigma.lambda, sigma.n);
    if (sigma.columns.size() != shape.columns.size()) return false;
    for (std::size_t c = 0; c < sigma.columns.size(); ++c) {
        const Column& col = sigma.columns[c];
        if (static_cast<int>(col.size()) != shape.columns[c].height) return false;
        for (std::size_t p = 0; p < col.size(); ++p) {
            int v = col[p];
            if (v == 0 || v > sigma.n || v < -sigma.n) return false;
            for (std::size_t q = p + 1; q < col.size(); ++q)
                if (col[q] == v || col[q] == -v) return false;
        }
    }
    for (std::size_t c = 0; c + 1 < sigma.columns.size(); ++c) {
        if (!rows_weakly_decreasing(sigma.columns[c], sigma.columns[c + 1], sigma.n)) return false;
        if (!try_match_adjacent(sigma.columns[c], sigma.columns[c + 1], !shape.columns[c].primed,
                                shape.columns[c].index, sigma.n))
            return false;
    }
    return true;
}

IntPoly2 hl_term_weight(const CFilling& sigma) {
    PairStats st = stat_filling(sigma);
    return IntPoly2::one_minus(0, 1).pow(st.des).times_monomial(1, 0, static_cast<int>(st.n_stat));
}

TPoly hl_compressed(const Partition& lambda, int n) {
    TPoly p(n);
    for (const CFilling& sigma : enumerate_cfillings(lambda, n))
        p.add_term(content_c(sigma), hl_term_weight(sigma));
    return p;
}

IntPoly2 schwer_weight(const LambdaChain& chain, const FoldingPair& pair) {
    GroupElement end = pair.w;
    for (int pos : pair.positions) end = compose(end, chain.root_at(pos));
    return geometry_weight_schwer(coxeter_length(pair.w), coxeter_length(end), pair.size());
}

TPoly schwer_term(const LambdaChain& chain, const FoldingPair& pair) {
    TPoly p(chain.n);
    p.add_term(act_on_weight(pair.w, mu_of(chain, pair.positions)), schwer_weight(chain, pair));
    return p;
}

TPoly hl_schwer(const Partition& lambda, int n) {
    LambdaChain chain = chain_type_c(lambda, n);
    TPoly p(n);
    enumerate_positive_folding_pairs(chain, [&](const FoldingPair& pair) {
        p.add_term(act_on_weight(pair.w, mu_of(chain, pair.positions)), schwer_weight(chain, pair));
    });
    return p;
}

CFilling filling_map_c(const LambdaChain& chain, const FoldingPair& pair) {
    if (chain.kind != GroupKind::TypeC) throw kind_mismatch_error("filling_map_c: type C chain required");
    CFilling sigma{chain.lambda, chain.n, {}};
    GroupElement u = pair.w;
    std::size_t fold_at = 0;
    for (const ChainBlock& block : chain.blocks) {
        int h = chain.lambda.conjugate(block.factor);
        bool record = block.primed || block.factor > 1 || block.index == 1;
        if (record)
            sigma.columns.emplace_back(u.window.begin(), u.window.begin() + h);
        for (int pos = block.begin; pos < block.end; ++pos) {
            while (fold_at < pair.positions.size() && pair.positions[fold_at] < pos) ++fold_at;
            if (fold_at < pair.positions.size() && pair.positions[fold_at] == pos)
                u = compose(u, chain.root_at(pos));
        }
    }
    return sigma;
}

std::map<CFilling, std::vector<FoldingPair>> fibers_c(const LambdaChain& chain) {
    std::map<CFilling, std::vector<FoldingPair>> groups;
    enumerate_positive_folding_pairs(chain, [&](const FoldingPair& pair) {
        groups[filling_map_c(chain, pair)].push_back(pair);
    });
    return groups;
}

FiberReport verify_fiber_c(const LambdaChain& chain, const CFilling& sigma, const std::vector<FoldingPair>& fiber) {
    FiberReport report;
    std::vector<int> expected_content = content_c(sigma);
    IntPoly2 total;
    for (const FoldingPair& pair : fiber) {
        std::vector<int> weight = act_on_weight(pair.w, mu_of(chain, pair.positions));
        if (weight != expected_content) {
            report.ok = false;
            report.detail = "content identity fails for w=" + pair.w.to_string() + " on filling\n" + sigma.to_text();
            return report;
        }
        total += schwer_weight(chain, pair);
    }
    IntPoly2 expected = hl_term_weight(sigma);
    if (!(total == expected)) {
        report.ok = false;
        report.detail = "weight identity fails on filling\n" + sigma.to_text() + "fiber sum: " + total.to_string() +
                        "\ncompressed: " + expected.to_string();
    }
    return report;
}

} // namespace mhl
