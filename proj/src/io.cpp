#include "mhl/io.hpp"

#include <algorithm>

namespace mhl {

std::string chain_tokens(const LambdaChain& chain) {
    std::string out;
    for (std::size_t b = 0; b < chain.blocks.size(); ++b) {
        const ChainBlock& block = chain.blocks[b];
        if (b > 0) {
            bool new_factor = chain.kind == GroupKind::TypeC && block.factor != chain.blocks[b - 1].factor;
            out += new_factor ? " || " : " | ";
        }
        for (int pos = block.begin; pos < block.end; ++pos) {
            if (pos > block.begin) out += ",";
            out += chain.root_at(pos).to_string();
        }
    }
    return out;
}

std::string chain_dump(const LambdaChain& chain) {
    std::string out;
    for (std::size_t b = 0; b < chain.blocks.size(); ++b) {
        const ChainBlock& block = chain.blocks[b];
        if (b > 0) {
            bool new_factor = chain.kind == GroupKind::TypeC && block.factor != chain.blocks[b - 1].factor;
            out += new_factor ? "||\n" : "|\n";
        }
        for (int pos = block.begin; pos < block.end; ++pos) out += chain.root_at(pos).to_string() + "\n";
    }
    return out;
}

std::string monomial_to_string(const std::vector<int>& exponent) {
    std::string s;
    for (std::size_t i = 0; i < exponent.size(); ++i) {
        if (exponent[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i + 1);
        if (exponent[i] != 1) s += "^" + std::to_string(exponent[i]);
    }
    return s;
}

namespace {

// terms are rendered in descending exponent order, leading monomial first
template <class P, class CoeffToString, class CoeffIsOne>
std::string poly_text(const P& p, CoeffToString coeff_str, CoeffIsOne coeff_one) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) out += " + ";
        first = false;
        std::string mono = monomial_to_string(e);
        if (mono.empty()) {
            out += coeff_str(c);
        } else if (coeff_one(c)) {
            out += mono;
        } else {
            out += coeff_str(c) + " * " + mono;
        }
    }
    return out;
}

} // namespace

std::string poly_to_text(const QtPoly& p) {
    return poly_text(
        p, [](const QTFraction& c) { return c.to_string(); },
        [](const QTFraction& c) { return c.denominator().empty() && c.numerator().is_one(); });
}

std::string poly_to_text(const TPoly& p) {
    return poly_text(
        p,
        [](const IntPoly2& c) {
            std::string s = c.to_string();
            return c.terms().size() > 1 ? "(" + s + ")" : s;
        },
        [](const IntPoly2& c) { return c.is_one(); });
}

std::string specialized_to_text(const std::map<std::vector<int>, Rational>& values) {
    if (values.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = values.rbegin(); it != values.rend(); ++it) {
        const auto& [e, v] = *it;
        if (!first) out += " + ";
        first = false;
        std::string mono = monomial_to_string(e);
        if (mono.empty())
            out += v.str();
        else if (v == 1)
            out += mono;
        else
            out += v.str() + " * " + mono;
    }
    return out;
}

namespace {

nlohmann::json meta_json(const PolyMeta& meta) {
    return {{"type", meta.type}, {"lambda", meta.lambda}, {"n", meta.n}, {"formula", meta.formula}};
}

nlohmann::json term_json(const std::vector<int>& e, const QTFraction& c) {
    nlohmann::json den = nlohmann::json::array();
    for (auto [a, b] : c.denominator().factors()) den.push_back({a, b});
    return {{"exponent", e}, {"num", c.numerator().to_string()}, {"den", den}};
}

} // namespace

nlohmann::json poly_to_json(const QtPoly& p, const PolyMeta& meta) {
    nlohmann::json j = meta_json(meta);
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) terms.push_back(term_json(it->first, it->second));
    j["terms"] = std::move(terms);
    return j;
}

nlohmann::json poly_to_json(const TPoly& p, const PolyMeta& meta) {
    return poly_to_json(as_qt_poly(p), meta);
}

nlohmann::json specialized_to_json(const std::map<std::vector<int>, Rational>& values, const PolyMeta& meta) {
    nlohmann::json j = meta_json(meta);
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = values.rbegin(); it != values.rend(); ++it)
        terms.push_back({{"exponent", it->first}, {"value", it->second.str()}});
    j["terms"] = std::move(terms);
    return j;
}

ParsedPoly poly_from_json(const nlohmann::json& j) {
    ParsedPoly parsed;
    parsed.meta.type = j.at("type").get<std::string>();
    parsed.meta.lambda = j.at("lambda").get<std::vector<int>>();
    parsed.meta.n = j.at("n").get<int>();
    parsed.meta.formula = j.at("formula").get<std::string>();
    parsed.poly = QtPoly(parsed.meta.n);
    for (const auto& term : j.at("terms")) {
        IntPoly2 num = IntPoly2::parse(term.at("num").get<std::string>());
        FactorDenominator den;
        for (const auto& f : term.at("den")) den.push(f.at(0).get<int>(), f.at(1).get<int>());
        parsed.poly.add_term(term.at("exponent").get<std::vector<int>>(), QTFraction(std::move(num), std::move(den)));
    }
    return parsed;
}

QtPoly as_qt_poly(const TPoly& p) {
    QtPoly out(p.vars());
    for (const auto& [e, c] : p.terms()) out.add_term(e, QTFraction(c));
    return out;
}

nlohmann::json filling_to_json(const Filling& sigma) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : sigma.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (std::size_t j = row.size(); j-- > 0;) r.push_back(row[j]);
        rows.push_back(std::move(r));
    }
    return rows;
}

nlohmann::json cfilling_to_json(const CFilling& sigma) {
    std::size_t max_h = 0;
    for (const Column& c : sigma.columns) max_h = std::max(max_h, c.size());
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < max_h; ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (const Column& c : sigma.columns)
            if (r < c.size()) row.push_back(c[r]);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace mhl
