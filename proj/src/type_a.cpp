#include "mhl/type_a.hpp"

#include <algorithm>

namespace mhl {

std::vector<int> Filling::content() const {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    for (const auto& row : rows)
        for (int v : row) ++c[static_cast<std::size_t>(v - 1)];
    return c;
}

std::string Filling::to_text() const {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t j = row.size(); j-- > 0;) {
            out += std::to_string(row[j]);
            out += j == 0 ? "" : " ";
        }
        out += "\n";
    }
    return out;
}

bool attacks(const Cell& u, const Cell& v) {
    if (u.j == v.j) return u.i != v.i;
    const Cell& left = u.j > v.j ? u : v;
    const Cell& right = u.j > v.j ? v : u;
    return left.j == right.j + 1 && left.i < right.i;
}

int arm(const Partition& lambda, const Cell& u) { return lambda.part(u.i) - u.j; }

int leg(const Partition& lambda, const Cell& u) { return lambda.conjugate(u.j) - u.i; }

std::vector<Cell> reading_order(const Partition& lambda) {
    std::vector<Cell> order;
    for (int j = 1; j <= lambda.first(); ++j)
        for (int i = 1; i <= lambda.conjugate(j); ++i) order.push_back({i, j});
    return order;
}

FillingStats stats(const Filling& sigma) {
    const Partition& lambda = sigma.lambda;
    FillingStats st;
    for (int i = 1; i <= lambda.size(); ++i) {
        for (int j = 1; j < lambda.part(i); ++j) {
            int a = sigma.entry(i, j);
            int b = sigma.entry(i, j + 1);
            if (a != b) st.diff.push_back({i, j});
            if (a > b) st.des.push_back({i, j});
        }
    }
    std::vector<Cell> order = reading_order(lambda);
    for (std::size_t p = 0; p < order.size(); ++p) {
        for (std::size_t q = p + 1; q < order.size(); ++q) {
            if (attacks(order[p], order[q]) &&
                sigma.entry(order[p].i, order[p].j) > sigma.entry(order[q].i, order[q].j))
                ++st.inv_count;
        }
    }
    long leg_sum = 0;
    for (const Cell& u : st.des) {
        st.maj += arm(lambda, u);
        leg_sum += leg(lambda, u);
    }
    st.inv_stat = st.inv_count - leg_sum;
    st.content = sigma.content();
    return st;
}

namespace {

void fill_cells(const Partition& lambda, int n, const std::vector<Cell>& order, std::size_t at,
                Filling& partial, std::vector<Filling>& out) {
    if (at == order.size()) {
        out.push_back(partial);
        return;
    }
    Cell cell = order[at];
    for (int v = 1; v <= n; ++v) {
        bool clash = false;
        for (std::size_t p = 0; p < at && !clash; ++p) {
            const Cell& prev = order[p];
            if (attacks(prev, cell) && partial.entry(prev.i, prev.j) == v) clash = true;
        }
        if (clash) continue;
        partial.rows[static_cast<std::size_t>(cell.i - 1)][static_cast<std::size_t>(cell.j - 1)] = v;
        fill_cells(lambda, n, order, at + 1, partial, out);
    }
}

} // namespace

std::vector<Filling> enumerate_nonattacking(const Partition& lambda, int n) {
    lambda.require_parts(n - 1, "enumerate_nonattacking");
    Filling partial{lambda, n, {}};
    for (int i = 1; i <= lambda.size(); ++i)
        partial.rows.emplace_back(static_cast<std::size_t>(lambda.part(i)), 0);
    std::vector<Filling> out;
    std::vector<Cell> order = reading_order(lambda);
    fill_cells(lambda, n, order, 0, partial, out);
    return out;
}

QTFraction compressed_weight(const Filling& sigma) {
    FillingStats st = stats(sigma);
    const Partition& lambda = sigma.lambda;
    FactorDenominator den;
    for (const Cell& u : st.diff) den.push(arm(lambda, u), leg(lambda, u) + 1);
    IntPoly2 num = IntPoly2::one_minus(0, 1).pow(static_cast<int>(st.diff.size()));
    num = num.times_monomial(1, static_cast<int>(st.maj),
                             static_cast<int>(lambda.n_lambda() - st.inv_stat));
    QTFraction w(std::move(num), std::move(den));
    w.reduce();
    return w;
}

QtPoly compressed_term(const Filling& sigma) {
    QtPoly p(sigma.n);
    p.add_term(sigma.content(), compressed_weight(sigma));
    return p;
}

QtPoly macdonald_compressed(const Partition& lambda, int n) {
    QtPoly p(n);
    for (const Filling& sigma : enumerate_nonattacking(lambda, n))
        p.add_term(sigma.content(), compressed_weight(sigma));
    return p;
}

QTFraction ramyip_weight(const LambdaChain& chain, const FoldingPair& pair) {
    if (chain.kind != GroupKind::TypeA) throw kind_mismatch_error("ramyip_weight: type A chain required");
    FoldClassification split = classify_foldings(chain, pair);
    GroupElement end = pair.w;
    for (int pos : pair.positions) end = compose(end, chain.root_at(pos));
    auto rho_pair = [](const RootLabel& r) { return r.k - r.i; };
    std::vector<std::pair<int, int>> pos_factors, neg_factors;
    for (int pos : split.positive)
        pos_factors.emplace_back(chain.level_at(pos), rho_pair(chain.root_at(pos)));
    for (int pos : split.negative)
        neg_factors.emplace_back(chain.level_at(pos), rho_pair(chain.root_at(pos)));
    return geometry_weight_ramyip(coxeter_length(pair.w), coxeter_length(end), pair.size(),
                                  pos_factors, neg_factors);
}

QtPoly ramyip_term(const LambdaChain& chain, const FoldingPair& pair) {
    QtPoly p(chain.n);
    p.add_term(act_on_weight(pair.w, mu_of(chain, pair.positions)), ramyip_weight(chain, pair));
    return p;
}

QtPoly macdonald_ramyip(const Partition& lambda, int n) {
    LambdaChain chain = chain_type_a(lambda, n);
    QtPoly p(n);
    enumerate_folding_pairs(chain, [&](const FoldingPair& pair) {
        p.add_term(act_on_weight(pair.w, mu_of(chain, pair.positions)), ramyip_weight(chain, pair));
    });
    return p;
}

Filling filling_map(const LambdaChain& chain, const FoldingPair& pair) {
    if (chain.kind != GroupKind::TypeA) throw kind_mismatch_error("filling_map: type A chain required");
    const Partition& lambda = chain.lambda;
    Filling sigma{lambda, chain.n, {}};
    for (int i = 1; i <= lambda.size(); ++i)
        sigma.rows.emplace_back(static_cast<std::size_t>(lambda.part(i)), 0);
    GroupElement pi = pair.w;
    std::size_t fold_at = 0;
    auto record_column = [&](int j) {
        for (int i = 1; i <= lambda.conjugate(j); ++i)
            sigma.rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = pi.at(i);
    };
    int col = lambda.first(); // pi_{lambda_1} = w
    record_column(col);
    for (const ChainBlock& block : chain.blocks) {
        for (int pos = block.begin; pos < block.end; ++pos) {
            while (fold_at < pair.positions.size() && pair.positions[fold_at] < pos) ++fold_at;
            if (fold_at < pair.positions.size() && pair.positions[fold_at] == pos)
                pi = compose(pi, chain.root_at(pos));
        }
        --col; // after block Gamma_j the running element is pi_{j-1}
        record_column(col);
    }
    return sigma;
}

std::map<Filling, std::vector<FoldingPair>> fibers(const LambdaChain& chain) {
    std::map<Filling, std::vector<FoldingPair>> groups;
    enumerate_folding_pairs(chain, [&](const FoldingPair& pair) {
        groups[filling_map(chain, pair)].push_back(pair);
    });
    return groups;
}

FiberReport verify_fiber(const LambdaChain& chain, const Filling& sigma, const std::vector<FoldingPair>& fiber) {
    FiberReport report;
    std::vector<int> expected_content = sigma.content();
    QTFraction total;
    for (const FoldingPair& pair : fiber) {
        std::vector<int> weight = act_on_weight(pair.w, mu_of(chain, pair.positions));
        if (weight != expected_content) {
            report.ok = false;
            report.detail = "content identity fails for w=" + pair.w.to_string() + " on filling\n" + sigma.to_text();
            return report;
        }
        total += ramyip_weight(chain, pair);
    }
    QTFraction expected = compressed_weight(sigma);
    if (!frac_equal(total, expected)) {
        report.ok = false;
        report.detail = "weight identity fails on filling\n" + sigma.to_text() + "fiber sum: " + total.to_string() +
                        "\ncompressed: " + expected.to_string();
    }
    return report;
}

} // namespace mhl
