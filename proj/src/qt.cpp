#include "mhl/qt.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mhl {

IntPoly2 IntPoly2::constant(Int c) {
    IntPoly2 p;
    p.add_term({0, 0}, c);
    return p;
}

IntPoly2 IntPoly2::monomial(Int c, int q_deg, int t_deg) {
    IntPoly2 p;
    p.add_term({q_deg, t_deg}, c);
    return p;
}

IntPoly2 IntPoly2::one_minus(int a, int b) {
    IntPoly2 p;
    p.add_term({0, 0}, 1);
    p.add_term({a, b}, -1);
    return p;
}

bool IntPoly2::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == QTExp{0, 0} && terms_.begin()->second == 1;
}

void IntPoly2::add_term(const QTExp& e, const Int& c) {
    if (c == 0) return;
    if (e.q < 0) throw internal_error("IntPoly2: negative q exponent");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

IntPoly2& IntPoly2::operator+=(const IntPoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

IntPoly2& IntPoly2::operator-=(const IntPoly2& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b) {
    IntPoly2 r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea.q + eb.q, ea.t + eb.t}, ca * cb);
    return r;
}

IntPoly2 IntPoly2::negated() const {
    IntPoly2 r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

IntPoly2 IntPoly2::times_monomial(const Int& c, int q_deg, int t_deg) const {
    IntPoly2 r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.add_term({e.q + q_deg, e.t + t_deg}, k * c);
    return r;
}

IntPoly2 IntPoly2::pow(int e) const {
    IntPoly2 r = IntPoly2::constant(1);
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

std::optional<IntPoly2> IntPoly2::divide_by_one_minus(int a, int b) const {
    if (a == 0 && b == 0) throw internal_error("divide_by_one_minus: (0,0) factor");
    // Divide by (1 - u), u = q^a t^b, by repeatedly cancelling the
    // lex-smallest remainder term against the divisor's constant term.
    // When the input is divisible, the quotient's q-degree (or t-degree if
    // a == 0) stays below that of the input, which bounds the loop.
    IntPoly2 quotient;
    IntPoly2 r = *this;
    int max_q = 0, max_t = 0;
    for (const auto& [e, c] : terms_) {
        max_q = std::max(max_q, e.q);
        max_t = std::max(max_t, e.t);
    }
    while (!r.terms_.empty()) {
        const auto& [e, c] = *r.terms_.begin();
        if (a > 0 ? (e.q + a > max_q) : (e.t + b > max_t)) return std::nullopt;
        quotient.add_term(e, c);
        Int cc = c;
        r.add_term({e.q + a, e.t + b}, cc);
        r.add_term(e, -cc);
    }
    return quotient;
}

Rational IntPoly2::evaluate(const Rational& q0, const Rational& t0) const {
    auto ipow = [](const Rational& x, int e) {
        Rational r = 1;
        if (e >= 0) {
            for (int i = 0; i < e; ++i) r *= x;
        } else {
            if (x == 0) throw pole_error("evaluation at t=0 with negative t exponent");
            for (int i = 0; i < -e; ++i) r /= x;
        }
        return r;
    };
    Rational s = 0;
    for (const auto& [e, c] : terms_) s += Rational(c) * ipow(q0, e.q) * ipow(t0, e.t);
    return s;
}

std::string IntPoly2::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        std::string vars;
        if (e.q != 0) vars += (e.q == 1) ? "q" : ("q^" + std::to_string(e.q));
        if (e.t != 0) {
            if (!vars.empty()) vars += "*";
            vars += (e.t == 1) ? "t" : ("t^" + std::to_string(e.t));
        }
        if (vars.empty()) {
            out += c.str();
        } else if (c == 1) {
            out += vars;
        } else if (c == -1) {
            out += "-" + vars;
        } else {
            out += c.str() + "*" + vars;
        }
    }
    return out;
}

namespace {

// Parses one canonical term "c*q^a*t^b" (any of the three parts optional).
void parse_term(const std::string& s, IntPoly2& into) {
    std::size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
        neg = s[pos] == '-';
        ++pos;
    }
    Int coeff = -1; // -1 marks "not seen"
    bool have_coeff = false;
    int qd = 0, td = 0;
    auto read_int = [&](std::size_t& p) {
        std::size_t start = p;
        if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == start) throw internal_error("IntPoly2::parse: expected integer in '" + s + "'");
        return std::stoi(s.substr(start, p - start));
    };
    while (pos < s.size()) {
        char ch = s[pos];
        if (ch == '*') {
            ++pos;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            coeff = Int(s.substr(start, pos - start));
            have_coeff = true;
        } else if (ch == 'q' || ch == 't') {
            ++pos;
            int d = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                d = read_int(pos);
            }
            (ch == 'q' ? qd : td) = d;
        } else {
            throw internal_error("IntPoly2::parse: unexpected character in '" + s + "'");
        }
    }
    Int c = have_coeff ? coeff : Int(1);
    if (neg) c = -c;
    into.add_term({qd, td}, c);
}

} // namespace

IntPoly2 IntPoly2::parse(const std::string& text) {
    IntPoly2 p;
    if (text == "0") return p;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(" + ", pos);
        std::string piece = text.substr(pos, next == std::string::npos ? next : next - pos);
        parse_term(piece, p);
        if (next == std::string::npos) break;
        pos = next + 3;
    }
    return p;
}

void FactorDenominator::push(int a, int b) {
    if (a == 0 && b == 0) throw internal_error("FactorDenominator: (0,0) factor");
    if (a < 0 || b < 0) throw internal_error("FactorDenominator: negative exponent");
    auto it = std::upper_bound(factors_.begin(), factors_.end(), std::make_pair(a, b));
    factors_.insert(it, {a, b});
}

IntPoly2 FactorDenominator::expand() const {
    IntPoly2 p = IntPoly2::constant(1);
    for (const auto& [a, b] : factors_) p = p * IntPoly2::one_minus(a, b);
    return p;
}

FactorDenominator FactorDenominator::union_max(const FactorDenominator& a, const FactorDenominator& b) {
    FactorDenominator r;
    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() || j < b.factors_.size()) {
        if (j == b.factors_.size() || (i < a.factors_.size() && a.factors_[i] < b.factors_[j])) {
            r.factors_.push_back(a.factors_[i++]);
        } else if (i == a.factors_.size() || b.factors_[j] < a.factors_[i]) {
            r.factors_.push_back(b.factors_[j++]);
        } else {
            r.factors_.push_back(a.factors_[i]);
            ++i;
            ++j;
        }
    }
    return r;
}

FactorDenominator FactorDenominator::difference(const FactorDenominator& big, const FactorDenominator& small) {
    FactorDenominator r;
    std::size_t i = 0, j = 0;
    while (i < big.factors_.size()) {
        if (j < small.factors_.size() && big.factors_[i] == small.factors_[j]) {
            ++i;
            ++j;
        } else {
            r.factors_.push_back(big.factors_[i++]);
        }
    }
    return r;
}

QTFraction::QTFraction(IntPoly2 num, FactorDenominator den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) den_.clear();
}

void QTFraction::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    bool again = true;
    while (again) {
        again = false;
        for (std::size_t i = 0; i < den_.size(); ++i) {
            auto [a, b] = den_.factors()[i];
            if (auto q = num_.divide_by_one_minus(a, b)) {
                num_ = std::move(*q);
                den_.erase_one(i);
                again = true;
                break;
            }
        }
    }
}

QTFraction& QTFraction::operator+=(const QTFraction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    FactorDenominator target = FactorDenominator::union_max(den_, o.den_);
    IntPoly2 left = num_ * FactorDenominator::difference(target, den_).expand();
    IntPoly2 right = o.num_ * FactorDenominator::difference(target, o.den_).expand();
    num_ = left + right;
    den_ = std::move(target);
    if (num_.is_zero()) den_.clear();
    reduce();
    return *this;
}

QTFraction operator*(const QTFraction& a, const QTFraction& b) {
    if (a.is_zero() || b.is_zero()) return QTFraction::zero();
    FactorDenominator den = a.den_;
    for (auto [x, y] : b.den_.factors()) den.push(x, y);
    QTFraction r(a.num_ * b.num_, std::move(den));
    r.reduce();
    return r;
}

QTFraction QTFraction::times_poly(const IntPoly2& p) const {
    QTFraction r(num_ * p, den_);
    r.reduce();
    return r;
}

Rational QTFraction::evaluate(const Rational& q0, const Rational& t0) const {
    Rational d = 1;
    for (auto [a, b] : den_.factors()) {
        Rational f = IntPoly2::one_minus(a, b).evaluate(q0, t0);
        if (f == 0)
            throw pole_error("denominator factor (1-q^" + std::to_string(a) + "*t^" + std::to_string(b) +
                             ") vanishes at the evaluation point");
        d *= f;
    }
    return num_.evaluate(q0, t0) / d;
}

std::string QTFraction::to_string() const {
    std::string s = num_.to_string();
    if (!den_.empty()) {
        std::string d;
        for (auto [a, b] : den_.factors()) {
            d += "(1";
            std::string vars;
            if (a != 0) vars += (a == 1) ? "q" : ("q^" + std::to_string(a));
            if (b != 0) {
                if (!vars.empty()) vars += "*";
                vars += (b == 1) ? "t" : ("t^" + std::to_string(b));
            }
            d += "-" + vars + ")";
        }
        s = "(" + s + ")/" + d;
    }
    return s;
}

bool frac_equal(const QTFraction& f, const QTFraction& g) {
    return f.numerator() * g.denominator().expand() == g.numerator() * f.denominator().expand();
}

QTFraction geometry_weight_ramyip(int ell_w, int ell_end, int size_j,
                                  const std::vector<std::pair<int, int>>& pos_factors,
                                  const std::vector<std::pair<int, int>>& neg_factors) {
    int twice_exp = ell_w - ell_end - size_j;
    if (twice_exp % 2 != 0)
        throw internal_error("geometry_weight_ramyip: odd length difference");
    int q_extra = 0, t_extra = 0;
    FactorDenominator den;
    for (auto [l, rho] : pos_factors) den.push(l, rho);
    for (auto [l, rho] : neg_factors) {
        den.push(l, rho);
        q_extra += l;
        t_extra += rho;
    }
    IntPoly2 num = IntPoly2::one_minus(0, 1).pow(size_j).times_monomial(1, q_extra, t_extra + twice_exp / 2);
    QTFraction w(std::move(num), std::move(den));
    w.reduce();
    return w;
}

IntPoly2 geometry_weight_schwer(int ell_w, int ell_end, int size_j) {
    int twice_exp = ell_w + ell_end - size_j;
    if (twice_exp % 2 != 0)
        throw internal_error("geometry_weight_schwer: odd exponent");
    if (twice_exp < 0)
        throw internal_error("geometry_weight_schwer: negative exponent");
    return IntPoly2::one_minus(0, 1).pow(size_j).times_monomial(1, 0, twice_exp / 2);
}

} // namespace mhl
