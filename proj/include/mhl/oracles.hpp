#ifndef MHL_ORACLES_HPP
#define MHL_ORACLES_HPP

#include <map>
#include <vector>

#include "mhl/partition.hpp"
#include "mhl/weight_poly.hpp"
#include "mhl/weyl.hpp"

namespace mhl {

// Schur polynomial as the generating function of semistandard Young
// tableaux of shape lambda with entries at most n.
ZPoly schur_ssyt(const Partition& lambda, int n);

// Type C Weyl character by the alternating-sum formula with rho = (n,...,1);
// the Laurent division is exact.
ZPoly weyl_character_c(const Partition& lambda, int n);

// Weyl dimension: product of <lambda+rho, alpha^vee>/<rho, alpha^vee> over
// the positive roots of C_n.
Int weyl_dimension_c(const Partition& lambda, int n);

// Dominant representative of an exponent vector orbit.
std::vector<int> dominant_representative(const std::vector<int>& e, GroupKind kind);

// The full orbit of an exponent vector under the group action on
// coordinates (permutations; with sign changes for type C).
std::vector<std::vector<int>> exponent_orbit(const std::vector<int>& e, GroupKind kind);

// Prefix-sum dominance order (mu <= lambda).
bool dominance_leq(const std::vector<int>& mu, const std::vector<int>& lambda);

// Groups the exponent vectors of a group-invariant polynomial into orbits
// keyed by the dominant representative; throws symmetry_error when the
// orbit is not fully present with equal coefficients.
template <class C>
std::map<std::vector<int>, C> monomial_expand(const WeightPoly<C>& p, GroupKind kind) {
    std::map<std::vector<int>, C> out;
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> rep = dominant_representative(e, kind);
        auto it = out.find(rep);
        if (it == out.end())
            out.emplace(rep, c);
        else if (!detail::coeff_eq(it->second, c))
            throw symmetry_error("monomial_expand: coefficients differ inside one orbit");
    }
    for (const auto& [rep, c] : out) {
        for (const std::vector<int>& member : exponent_orbit(rep, kind)) {
            const C* found = p.coefficient(member);
            if (!found || !detail::coeff_eq(*found, c))
                throw symmetry_error("monomial_expand: orbit member missing or mismatched");
        }
    }
    return out;
}

} // namespace mhl

#endif
