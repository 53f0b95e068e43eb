#include <doctest.h>

#include "mhl/io.hpp"
#include "mhl/type_a.hpp"
#include "mhl/type_c.hpp"

using namespace mhl;

TEST_CASE("chain dump lines") {
    LambdaChain chain = chain_type_a(Partition({2, 1}), 3);
    CHECK(chain_dump(chain) == "(1,3)\n");
    LambdaChain small_c = chain_type_c(Partition({2, 1}), 2);
    CHECK(chain_dump(small_c) ==
          "(1,-2)\n(1,-1)\n(1,2)\n||\n(1,-2)\n|\n(1,-1)\n|\n(1,-2)\n(2,-2)\n");
}

TEST_CASE("polynomial text form") {
    QtPoly p = macdonald_compressed(Partition({1}), 2);
    CHECK(poly_to_text(p) == "x1 + x2");
    TPoly zero(2);
    CHECK(poly_to_text(zero) == "0");
}

TEST_CASE("monomial rendering") {
    CHECK(monomial_to_string({2, 0, -1}) == "x1^2*x3^-1");
    CHECK(monomial_to_string({0, 0}) == "");
    CHECK(monomial_to_string({1, 1}) == "x1*x2");
}

TEST_CASE("json round trip for fraction coefficients") {
    Partition lambda({2, 1});
    QtPoly p = macdonald_compressed(lambda, 3);
    PolyMeta meta{"A", lambda.parts(), 3, "compressed"};
    nlohmann::json j = poly_to_json(p, meta);
    ParsedPoly back = poly_from_json(j);
    CHECK(back.meta.type == "A");
    CHECK(back.meta.formula == "compressed");
    CHECK(equal(back.poly, p));
    CHECK(poly_to_json(back.poly, back.meta) == j);
}

TEST_CASE("json round trip for t-only coefficients") {
    Partition lambda({2, 1});
    TPoly p = hl_compressed(lambda, 2);
    PolyMeta meta{"C", lambda.parts(), 2, "compressed"};
    nlohmann::json j = poly_to_json(p, meta);
    ParsedPoly back = poly_from_json(j);
    CHECK(equal(back.poly, as_qt_poly(p)));
    CHECK(poly_to_json(back.poly, back.meta) == j);
}

TEST_CASE("filling text formats") {
    Filling f{Partition({4, 3, 1}), 4, {{3, 3, 1, 2}, {2, 4, 3}, {1}}};
    CHECK(f.to_text() == "2 1 3 3\n3 4 2\n1\n");
    CFilling cf{Partition({3, 2, 1}), 3, {{-1}, {3, -2}, {2, -3}, {2, -3}, {2, 1, 3}, {2, 1, 3}, {2, 1, 3}}};
    CHECK(cf.to_text() == "-1 3 2 2 2 2 2\n-2 -3 -3 1 1 1\n3 3 3\n");
}
