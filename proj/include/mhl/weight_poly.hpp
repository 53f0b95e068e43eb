#ifndef MHL_WEIGHT_POLY_HPP
#define MHL_WEIGHT_POLY_HPP

#include <map>
#include <vector>

#include "mhl/qt.hpp"

namespace mhl {

namespace detail {
inline bool coeff_is_zero(const Int& c) { return c == 0; }
inline bool coeff_is_zero(const IntPoly2& c) { return c.is_zero(); }
inline bool coeff_is_zero(const QTFraction& c) { return c.is_zero(); }
inline bool coeff_eq(const Int& a, const Int& b) { return a == b; }
inline bool coeff_eq(const IntPoly2& a, const IntPoly2& b) { return a == b; }
inline bool coeff_eq(const QTFraction& a, const QTFraction& b) { return frac_equal(a, b); }
} // namespace detail

// Finite map from integer exponent vectors (length n, entries may be
// negative) to exact coefficients. Used with Int, IntPoly2 and QTFraction
// coefficients.
template <class C>
class WeightPoly {
  public:
    using Exponent = std::vector<int>;

    WeightPoly() = default;
    explicit WeightPoly(int n) : n_(n) {}

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exponent, C>& terms() const { return terms_; }

    void add_term(const Exponent& e, const C& c) {
        if (static_cast<int>(e.size()) != n_)
            throw internal_error("WeightPoly: exponent dimension mismatch");
        if (detail::coeff_is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (detail::coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    WeightPoly& operator+=(const WeightPoly& o) {
        if (o.n_ != n_) throw internal_error("WeightPoly: dimension mismatch in add");
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    WeightPoly scaled(const C& s) const {
        WeightPoly r(n_);
        for (const auto& [e, c] : terms_) r.add_term(e, c * s);
        return r;
    }

    const C* coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? nullptr : &it->second;
    }

    // Semantic equality: per-exponent coefficient equality (frac_equal for
    // fraction coefficients), missing terms treated as zero.
    friend bool equal(const WeightPoly& a, const WeightPoly& b) {
        if (a.n_ != b.n_) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return false;
            if (!detail::coeff_eq(ia->second, ib->second)) return false;
        }
        return true;
    }

    // Image under a permutation-with-signs of the variables: exponent entry
    // at position i moves to position |p(i)| with the sign of p(i).
    WeightPoly relabeled(const std::vector<int>& signed_images) const {
        WeightPoly r(n_);
        for (const auto& [e, c] : terms_) {
            Exponent f(e.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                int im = signed_images[i];
                int pos = im > 0 ? im : -im;
                f[static_cast<std::size_t>(pos - 1)] = im > 0 ? e[i] : -e[i];
            }
            r.add_term(f, c);
        }
        return r;
    }

  private:
    int n_ = 0;
    std::map<Exponent, C> terms_;
};

using QtPoly = WeightPoly<QTFraction>; // q,t rational-function coefficients
using TPoly = WeightPoly<IntPoly2>;    // Z[t] coefficients
using ZPoly = WeightPoly<Int>;         // integer coefficients

// Exact rational evaluation of every coefficient; zero values dropped.
std::map<std::vector<int>, Rational> specialize(const QtPoly& p, const Rational& q0, const Rational& t0);
std::map<std::vector<int>, Rational> specialize(const TPoly& p, const Rational& t0);
std::map<std::vector<int>, Rational> as_rational_map(const ZPoly& p);

} // namespace mhl

#endif
