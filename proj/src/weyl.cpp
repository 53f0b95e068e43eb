#include "mhl/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace mhl {

std::string RootLabel::to_string() const {
    switch (kind) {
        case Kind::Plain: return "(" + std::to_string(i) + "," + std::to_string(k) + ")";
        case Kind::BarredPair: return "(" + std::to_string(i) + ",-" + std::to_string(k) + ")";
        case Kind::Long: return "(" + std::to_string(i) + ",-" + std::to_string(i) + ")";
    }
    return {};
}

std::vector<int> RootLabel::vec(int n) const {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    switch (kind) {
        case Kind::Plain:
            v[static_cast<std::size_t>(i - 1)] = 1;
            v[static_cast<std::size_t>(k - 1)] = -1;
            break;
        case Kind::BarredPair:
            v[static_cast<std::size_t>(i - 1)] = 1;
            v[static_cast<std::size_t>(k - 1)] = 1;
            break;
        case Kind::Long:
            v[static_cast<std::size_t>(i - 1)] = 2;
            break;
    }
    return v;
}

long RootLabel::pair_coroot(const std::vector<int>& mu) const {
    switch (kind) {
        case Kind::Plain: return mu[static_cast<std::size_t>(i - 1)] - mu[static_cast<std::size_t>(k - 1)];
        case Kind::BarredPair: return mu[static_cast<std::size_t>(i - 1)] + mu[static_cast<std::size_t>(k - 1)];
        case Kind::Long: return mu[static_cast<std::size_t>(i - 1)];
    }
    return 0;
}

GroupElement GroupElement::identity(GroupKind kind, int n) {
    GroupElement w;
    w.kind = kind;
    w.window.resize(static_cast<std::size_t>(n));
    std::iota(w.window.begin(), w.window.end(), 1);
    return w;
}

bool GroupElement::is_identity() const {
    for (int i = 1; i <= n(); ++i)
        if (at(i) != i) return false;
    return true;
}

std::string GroupElement::to_string() const {
    if (kind == GroupKind::TypeA) {
        std::string s;
        for (int v : window) s += std::to_string(v);
        return s;
    }
    std::string s = "[";
    for (std::size_t i = 0; i < window.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(window[i]);
    }
    return s + "]";
}

GroupElement compose(const GroupElement& u, const RootLabel& label) {
    if (u.kind == GroupKind::TypeA && label.kind != RootLabel::Kind::Plain)
        throw kind_mismatch_error("compose: type C reflection applied to a type A element");
    GroupElement w = u;
    auto& win = w.window;
    std::size_t i = static_cast<std::size_t>(label.i - 1);
    std::size_t k = static_cast<std::size_t>(label.k - 1);
    switch (label.kind) {
        case RootLabel::Kind::Plain:
            std::swap(win[i], win[k]);
            break;
        case RootLabel::Kind::BarredPair: {
            int a = win[i], b = win[k];
            win[i] = -b;
            win[k] = -a;
            break;
        }
        case RootLabel::Kind::Long:
            win[i] = -win[i];
            break;
    }
    return w;
}

namespace {

// Sign of the image w(alpha): the first nonzero coordinate of the image
// vector is negative exactly when w sends alpha to a negative root.
bool image_is_negative(const GroupElement& w, const RootLabel& alpha) {
    std::vector<int> img = act_on_weight(w, alpha.vec(w.n()));
    for (int c : img) {
        if (c != 0) return c < 0;
    }
    return false;
}

} // namespace

int coxeter_length(const GroupElement& w) {
    int len = 0;
    for (const RootLabel& alpha : positive_roots(w.kind, w.n()))
        if (image_is_negative(w, alpha)) ++len;
    return len;
}

std::vector<int> act_on_weight(const GroupElement& w, const std::vector<int>& mu) {
    if (mu.size() != w.window.size()) throw internal_error("act_on_weight: length mismatch");
    std::vector<int> out(mu.size(), 0);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        int im = w.window[i];
        if (im > 0)
            out[static_cast<std::size_t>(im - 1)] = mu[i];
        else
            out[static_cast<std::size_t>(-im - 1)] = -mu[i];
    }
    return out;
}

const std::vector<RootLabel>& positive_roots(GroupKind kind, int n) {
    static std::map<std::pair<GroupKind, int>, std::vector<RootLabel>> cache;
    auto key = std::make_pair(kind, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<RootLabel> roots;
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k) roots.push_back(RootLabel::plain(i, k));
    if (kind == GroupKind::TypeC) {
        for (int i = 1; i <= n; ++i)
            for (int k = i + 1; k <= n; ++k) roots.push_back(RootLabel::barred(i, k));
        for (int i = 1; i <= n; ++i) roots.push_back(RootLabel::long_root(i));
    }
    return cache.emplace(key, std::move(roots)).first->second;
}

std::vector<GroupElement> enumerate_group(GroupKind kind, int n) {
    if (n < 2) throw shape_error("enumerate_group: rank must be at least 2");
    std::vector<GroupElement> out;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (kind == GroupKind::TypeA) {
            out.push_back({kind, perm});
        } else {
            for (int mask = 0; mask < (1 << n); ++mask) {
                std::vector<int> win = perm;
                for (int b = 0; b < n; ++b)
                    if (mask & (1 << b)) win[static_cast<std::size_t>(b)] = -win[static_cast<std::size_t>(b)];
                out.push_back({kind, std::move(win)});
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_length_decreasing(const GroupElement& u, const RootLabel& label) {
    if (u.kind == GroupKind::TypeA && label.kind != RootLabel::Kind::Plain)
        throw kind_mismatch_error("is_length_decreasing: incompatible label kind");
    return image_is_negative(u, label);
}

} // namespace mhl
