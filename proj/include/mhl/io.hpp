#ifndef MHL_IO_HPP
#define MHL_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "mhl/chain.hpp"
#include "mhl/type_a.hpp"
#include "mhl/type_c.hpp"
#include "mhl/weight_poly.hpp"

namespace mhl {

// Single-line chain listing: labels joined by "," inside a block, " | "
// between blocks, " || " between different type C factors.
std::string chain_tokens(const LambdaChain& chain);

// CLI dump: one label per line, separator lines "|" and "||".
std::string chain_dump(const LambdaChain& chain);

std::string monomial_to_string(const std::vector<int>& exponent);

std::string poly_to_text(const QtPoly& p);
std::string poly_to_text(const TPoly& p);
std::string specialized_to_text(const std::map<std::vector<int>, Rational>& values);

struct PolyMeta {
    std::string type;    // "A" or "C"
    std::vector<int> lambda;
    int n = 0;
    std::string formula; // "ramyip", "compressed", "schwer"
};

nlohmann::json poly_to_json(const QtPoly& p, const PolyMeta& meta);
nlohmann::json poly_to_json(const TPoly& p, const PolyMeta& meta);
nlohmann::json specialized_to_json(const std::map<std::vector<int>, Rational>& values, const PolyMeta& meta);

struct ParsedPoly {
    PolyMeta meta;
    QtPoly poly;
};

ParsedPoly poly_from_json(const nlohmann::json& j);

QtPoly as_qt_poly(const TPoly& p);

// Fillings as nested arrays, rows in display order (mirrors to_text).
nlohmann::json filling_to_json(const Filling& sigma);
nlohmann::json cfilling_to_json(const CFilling& sigma);

} // namespace mhl

#endif
