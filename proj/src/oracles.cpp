#include "mhl/oracles.hpp"

#include <algorithm>
#include <set>

namespace mhl {

namespace {

void ssyt_rec(const Partition& lambda, int n, std::vector<std::vector<int>>& rows, int i, int j, ZPoly& out) {
    if (i > lambda.size()) {
        std::vector<int> content(static_cast<std::size_t>(n), 0);
        for (const auto& row : rows)
            for (int v : row) ++content[static_cast<std::size_t>(v - 1)];
        out.add_term(content, 1);
        return;
    }
    int next_i = i, next_j = j + 1;
    if (j == lambda.part(i)) {
        next_i = i + 1;
        next_j = 1;
    }
    int lo = 1;
    if (j > 1) lo = std::max(lo, rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 2)]);
    if (i > 1 && lambda.part(i - 1) >= j)
        lo = std::max(lo, rows[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j - 1)] + 1);
    for (int v = lo; v <= n; ++v) {
        rows[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = v;
        ssyt_rec(lambda, n, rows, next_i, next_j, out);
    }
}

} // namespace

ZPoly schur_ssyt(const Partition& lambda, int n) {
    ZPoly out(n);
    if (lambda.empty()) {
        out.add_term(std::vector<int>(static_cast<std::size_t>(n), 0), 1);
        return out;
    }
    std::vector<std::vector<int>> rows;
    for (int i = 1; i <= lambda.size(); ++i)
        rows.emplace_back(static_cast<std::size_t>(lambda.part(i)), 0);
    ssyt_rec(lambda, n, rows, 1, 1, out);
    return out;
}

namespace {

ZPoly alternating_orbit_sum(const std::vector<int>& weight, int n) {
    ZPoly out(n);
    for (const GroupElement& w : enumerate_group(GroupKind::TypeC, n)) {
        Int sign = coxeter_length(w) % 2 == 0 ? 1 : -1;
        out.add_term(act_on_weight(w, weight), sign);
    }
    return out;
}

// Exact division of Laurent polynomials by leading-term elimination under
// lexicographic order on exponent vectors.
ZPoly laurent_divide_exact(const ZPoly& num, const ZPoly& den) {
    if (den.is_zero()) throw internal_error("laurent_divide_exact: zero divisor");
    ZPoly quotient(num.vars());
    ZPoly rem = num;
    const auto& lead_den = *den.terms().rbegin();
    long guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 2000000) throw internal_error("laurent_divide_exact: division does not terminate");
        const auto& lead_rem = *rem.terms().rbegin();
        Int c = lead_rem.second / lead_den.second;
        if (c * lead_den.second != lead_rem.second)
            throw internal_error("laurent_divide_exact: leading coefficient does not divide");
        std::vector<int> shift(lead_rem.first.size());
        for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = lead_rem.first[i] - lead_den.first[i];
        ZPoly piece(num.vars());
        piece.add_term(shift, c);
        quotient += piece;
        for (const auto& [e, dc] : den.terms()) {
            std::vector<int> f(e.size());
            for (std::size_t i = 0; i < f.size(); ++i) f[i] = e[i] + shift[i];
            ZPoly sub(num.vars());
            sub.add_term(f, -c * dc);
            rem += sub;
        }
    }
    return quotient;
}

} // namespace

ZPoly weyl_character_c(const Partition& lambda, int n) {
    lambda.require_parts(n, "weyl_character_c");
    std::vector<int> rho(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rho[static_cast<std::size_t>(i)] = n - i;
    std::vector<int> shifted = lambda.padded(n);
    for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i)] += rho[static_cast<std::size_t>(i)];
    return laurent_divide_exact(alternating_orbit_sum(shifted, n), alternating_orbit_sum(rho, n));
}

Int weyl_dimension_c(const Partition& lambda, int n) {
    lambda.require_parts(n, "weyl_dimension_c");
    std::vector<int> rho(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rho[static_cast<std::size_t>(i)] = n - i;
    std::vector<int> shifted = lambda.padded(n);
    for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i)] += rho[static_cast<std::size_t>(i)];
    Rational dim = 1;
    for (const RootLabel& alpha : positive_roots(GroupKind::TypeC, n))
        dim *= Rational(alpha.pair_coroot(shifted)) / Rational(alpha.pair_coroot(rho));
    if (boost::multiprecision::denominator(dim) != 1)
        throw internal_error("weyl_dimension_c: non-integral dimension");
    return boost::multiprecision::numerator(dim);
}

std::vector<int> dominant_representative(const std::vector<int>& e, GroupKind kind) {
    std::vector<int> rep = e;
    if (kind == GroupKind::TypeC)
        for (int& v : rep) v = v < 0 ? -v : v;
    std::sort(rep.begin(), rep.end(), std::greater<int>());
    return rep;
}

std::vector<std::vector<int>> exponent_orbit(const std::vector<int>& e, GroupKind kind) {
    std::set<std::vector<int>> orbit;
    std::vector<int> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    do {
        if (kind == GroupKind::TypeA) {
            orbit.insert(sorted);
        } else {
            int n = static_cast<int>(sorted.size());
            for (int mask = 0; mask < (1 << n); ++mask) {
                std::vector<int> v = sorted;
                for (int b = 0; b < n; ++b)
                    if (mask & (1 << b)) v[static_cast<std::size_t>(b)] = -v[static_cast<std::size_t>(b)];
                orbit.insert(v);
            }
        }
    } while (std::next_permutation(sorted.begin(), sorted.end()));
    return {orbit.begin(), orbit.end()};
}

bool dominance_leq(const std::vector<int>& mu, const std::vector<int>& lambda) {
    long a = 0, b = 0;
    for (std::size_t i = 0; i < mu.size() || i < lambda.size(); ++i) {
        if (i < mu.size()) a += mu[i];
        if (i < lambda.size()) b += lambda[i];
        if (a > b) return false;
    }
    return true;
}

} // namespace mhl
