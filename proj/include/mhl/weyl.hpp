#ifndef MHL_WEYL_HPP
#define MHL_WEYL_HPP

#include <string>
#include <vector>

#include "mhl/errors.hpp"

namespace mhl {

enum class GroupKind { TypeA, TypeC };

// A labeled positive root, doubling as the corresponding reflection.
//   Plain(i,k)      : e_i - e_k           (transposition of positions i,k)
//   BarredPair(i,k) : e_i + e_k           (transposition with sign change)
//   Long(i)         : 2 e_i               (sign change in position i)
// Type A chains contain only Plain labels.
struct RootLabel {
    enum class Kind { Plain, BarredPair, Long };
    Kind kind = Kind::Plain;
    int i = 0;
    int k = 0; // equals i for Long

    static RootLabel plain(int i, int k) { return {Kind::Plain, i, k}; }
    static RootLabel barred(int i, int k) { return {Kind::BarredPair, i, k}; }
    static RootLabel long_root(int i) { return {Kind::Long, i, i}; }

    friend bool operator==(const RootLabel&, const RootLabel&) = default;

    // (i,k) / (i,-k) / (i,-i)
    std::string to_string() const;

    // Coordinate vector of the root in Z^n.
    std::vector<int> vec(int n) const;
    // Pairing <mu, alpha^vee> of a weight with the coroot.
    long pair_coroot(const std::vector<int>& mu) const;
};

// An element of S_n (TypeA) or of the hyperoctahedral group B_n (TypeC),
// in window notation. TypeC windows hold signed entries; the map extends
// by w(-i) = -w(i). Values are immutable after construction.
struct GroupElement {
    GroupKind kind = GroupKind::TypeA;
    std::vector<int> window; // 1-based positions stored 0-based

    int n() const { return static_cast<int>(window.size()); }
    int at(int pos) const { return window[static_cast<std::size_t>(pos - 1)]; } // 1-based

    static GroupElement identity(GroupKind kind, int n);

    bool is_identity() const;
    std::string to_string() const; // e.g. "2341" or "[-1,-2,-3]"

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.window < b.window; }
};

// Right multiplication by the reflection named by the label.
GroupElement compose(const GroupElement& u, const RootLabel& label);

// Number of positive roots sent to negative roots.
int coxeter_length(const GroupElement& w);

// Left action on weight coordinates: position w(i) receives mu_i, negated
// when w(i) is barred.
std::vector<int> act_on_weight(const GroupElement& w, const std::vector<int>& mu);

// All positive roots of the ambient type, as labels.
const std::vector<RootLabel>& positive_roots(GroupKind kind, int n);

// All group elements, lexicographically ordered by window.
std::vector<GroupElement> enumerate_group(GroupKind kind, int n);

// True iff l(u * r_label) < l(u). Since the two lengths differ by an odd
// amount this is equivalent to u sending the root to a negative root.
bool is_length_decreasing(const GroupElement& u, const RootLabel& label);

// The signed alphabet 1 < ... < n < -n < ... < -1 used by the type C
// statistics: key is monotone in that order.
inline int alph_key(int a, int n) { return a > 0 ? a : 2 * n + 1 + a; }
inline bool alph_less(int a, int b, int n) { return alph_key(a, n) < alph_key(b, n); }
inline bool alph_leq(int a, int b, int n) { return alph_key(a, n) <= alph_key(b, n); }

} // namespace mhl

#endif
