#ifndef MHL_QT_HPP
#define MHL_QT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mhl/errors.hpp"

namespace mhl {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exponent pair of a monomial q^q_deg * t^t_deg. q_deg is never negative;
// t_deg may be (the Ram-Yip t-prefactor can have a negative exponent).
struct QTExp {
    int q = 0;
    int t = 0;
    auto operator<=>(const QTExp&) const = default;
};

// Integer-coefficient polynomial in q and t (t exponents may be negative).
// Terms are kept sorted lexicographically by (q_deg, t_deg); no zero
// coefficients are stored.
class IntPoly2 {
  public:
    IntPoly2() = default;

    static IntPoly2 zero() { return IntPoly2(); }
    static IntPoly2 constant(Int c);
    static IntPoly2 monomial(Int c, int q_deg, int t_deg);
    // 1 - q^a t^b
    static IntPoly2 one_minus(int a, int b);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::map<QTExp, Int>& terms() const { return terms_; }

    void add_term(const QTExp& e, const Int& c);

    IntPoly2& operator+=(const IntPoly2& o);
    IntPoly2& operator-=(const IntPoly2& o);
    friend IntPoly2 operator+(IntPoly2 a, const IntPoly2& b) { return a += b; }
    friend IntPoly2 operator-(IntPoly2 a, const IntPoly2& b) { return a -= b; }
    friend IntPoly2 operator*(const IntPoly2& a, const IntPoly2& b);
    friend bool operator==(const IntPoly2& a, const IntPoly2& b) { return a.terms_ == b.terms_; }

    IntPoly2 negated() const;
    IntPoly2 times_monomial(const Int& c, int q_deg, int t_deg) const;
    IntPoly2 pow(int e) const;

    // Exact division by (1 - q^a t^b); nullopt if it does not divide.
    std::optional<IntPoly2> divide_by_one_minus(int a, int b) const;

    // Exact rational evaluation.
    Rational evaluate(const Rational& q0, const Rational& t0) const;

    // Canonical form: terms joined by " + ", each "c*q^a*t^b" with unit
    // parts omitted; "0" for the zero polynomial.
    std::string to_string() const;
    static IntPoly2 parse(const std::string& text);

  private:
    std::map<QTExp, Int> terms_;
};

// Multiset of factors (1 - q^a t^b), kept sorted by (a, b).
class FactorDenominator {
  public:
    FactorDenominator() = default;

    bool empty() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }
    const std::vector<std::pair<int, int>>& factors() const { return factors_; }

    void push(int a, int b); // keeps the multiset sorted
    void erase_one(std::size_t index) { factors_.erase(factors_.begin() + static_cast<long>(index)); }
    void clear() { factors_.clear(); }

    IntPoly2 expand() const;

    // Multiset union with per-value maximum multiplicity.
    static FactorDenominator union_max(const FactorDenominator& a, const FactorDenominator& b);
    // Factors of b missing from a (so that a + missing == union_max(a, b)).
    static FactorDenominator difference(const FactorDenominator& big, const FactorDenominator& small);

    friend bool operator==(const FactorDenominator& x, const FactorDenominator& y) {
        return x.factors_ == y.factors_;
    }

  private:
    std::vector<std::pair<int, int>> factors_;
};

// numerator / product of (1 - q^a t^b) factors. Zero is stored with an
// empty denominator; equality is semantic (cross-multiplication).
class QTFraction {
  public:
    QTFraction() = default;
    explicit QTFraction(IntPoly2 num) : num_(std::move(num)) {}
    QTFraction(IntPoly2 num, FactorDenominator den);

    static QTFraction zero() { return QTFraction(); }
    static QTFraction one() { return QTFraction(IntPoly2::constant(1)); }

    bool is_zero() const { return num_.is_zero(); }
    const IntPoly2& numerator() const { return num_; }
    const FactorDenominator& denominator() const { return den_; }

    // Removes denominator factors that divide the numerator exactly.
    void reduce();

    QTFraction& operator+=(const QTFraction& o);
    friend QTFraction operator+(QTFraction a, const QTFraction& b) { return a += b; }
    friend QTFraction operator*(const QTFraction& a, const QTFraction& b);

    QTFraction times_poly(const IntPoly2& p) const;

    Rational evaluate(const Rational& q0, const Rational& t0) const; // throws pole_error

    std::string to_string() const;

  private:
    IntPoly2 num_;
    FactorDenominator den_;
};

bool frac_equal(const QTFraction& f, const QTFraction& g);

// Scalar weight of one Ram-Yip term:
//   t^{(ell_w - ell_end - |J|)/2} (1-t)^{|J|}
//   * prod_{J+} 1/(1-q^l t^rho) * prod_{J-} q^l t^rho/(1-q^l t^rho).
// pos/neg factors are (level, rho-pairing) pairs.
QTFraction geometry_weight_ramyip(int ell_w, int ell_end, int size_j,
                                  const std::vector<std::pair<int, int>>& pos_factors,
                                  const std::vector<std::pair<int, int>>& neg_factors);

// Scalar weight of one Schwer term: t^{(ell_w + ell_end - |J|)/2} (1-t)^{|J|}.
IntPoly2 geometry_weight_schwer(int ell_w, int ell_end, int size_j);

} // namespace mhl

#endif
