#include "mhl/weight_poly.hpp"

namespace mhl {

std::map<std::vector<int>, Rational> specialize(const QtPoly& p, const Rational& q0, const Rational& t0) {
    std::map<std::vector<int>, Rational> r;
    for (const auto& [e, c] : p.terms()) {
        Rational v = c.evaluate(q0, t0);
        if (v != 0) r.emplace(e, v);
    }
    return r;
}

std::map<std::vector<int>, Rational> specialize(const TPoly& p, const Rational& t0) {
    std::map<std::vector<int>, Rational> r;
    for (const auto& [e, c] : p.terms()) {
        Rational v = c.evaluate(0, t0);
        if (v != 0) r.emplace(e, v);
    }
    return r;
}

std::map<std::vector<int>, Rational> as_rational_map(const ZPoly& p) {
    std::map<std::vector<int>, Rational> r;
    for (const auto& [e, c] : p.terms()) r.emplace(e, Rational(c));
    return r;
}

} // namespace mhl
