#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "riograph/series_expr.hpp"

using namespace riograph;

namespace {

ExprPtr random_expr(std::mt19937_64& rng, int depth) {
    auto leaf = [&]() {
        auto n = std::make_shared<SeriesExpr>();
        switch (rng() % 3) {
            case 0:
                n->kind = SeriesExpr::Kind::var_z;
                break;
            case 1:
                n->kind = SeriesExpr::Kind::catalan;
                break;
            default:
                n->kind = SeriesExpr::Kind::num;
                n->value = static_cast<unsigned>(rng() % 7);
        }
        return ExprPtr(n);
    };
    if (depth == 0 || rng() % 4 == 0) return leaf();
    auto n = std::make_shared<SeriesExpr>();
    switch (rng() % 5) {
        case 0:
            n->kind = SeriesExpr::Kind::add;
            break;
        case 1:
            n->kind = SeriesExpr::Kind::sub;
            break;
        case 2:
            n->kind = SeriesExpr::Kind::mul;
            break;
        case 3:
            n->kind = SeriesExpr::Kind::div;
            break;
        default:
            n->kind = SeriesExpr::Kind::pow;
            n->value = static_cast<unsigned>(rng() % 5);
    }
    n->lhs = random_expr(rng, depth - 1);
    if (n->kind != SeriesExpr::Kind::pow)
        n->rhs = random_expr(rng, depth - 1);
    return n;
}

}  // namespace

TEST_CASE("parser handles precedence and associativity") {
    auto e = parse_series("1+z*z");
    CHECK(e->kind == SeriesExpr::Kind::add);
    CHECK(e->rhs->kind == SeriesExpr::Kind::mul);

    auto f = parse_series("z/(1-z)^2");
    CHECK(f->kind == SeriesExpr::Kind::div);
    CHECK(f->rhs->kind == SeriesExpr::Kind::pow);
    CHECK(f->rhs->value == 2);

    // left associative: a/b*c is (a/b)*c
    auto g = parse_series("z/z*z");
    CHECK(g->kind == SeriesExpr::Kind::mul);
    CHECK(g->lhs->kind == SeriesExpr::Kind::div);
}

TEST_CASE("whitespace is insignificant") {
    auto a = parse_series(" 1 + z * ( C - z ) ^ 3 ");
    auto b = parse_series("1+z*(C-z)^3");
    CHECK(expr_equal(a, b));
}

TEST_CASE("parse errors carry a byte offset") {
    auto offset_of = [](const std::string& text) {
        try {
            parse_series(text);
        } catch (const ParseError& pe) {
            return static_cast<long>(pe.offset);
        }
        return -1L;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("z+") == 2);
    CHECK(offset_of("(z+1") == 4);
    CHECK(offset_of("z)") == 1);
    CHECK(offset_of("z$1") == 1);
    CHECK(offset_of("z^x") == 2);
    CHECK(offset_of("99999999999") >= 0);
}

TEST_CASE("print / reparse round trip is structurally exact") {
    std::mt19937_64 rng(101);
    for (int rep = 0; rep < 300; ++rep) {
        auto e = random_expr(rng, 5);
        auto back = parse_series(print_series(e));
        CHECK(expr_equal(e, back));
    }
    // hand-picked shapes where parenthesisation matters
    for (const char* txt :
         {"z-(z-z)", "1+(z+1)", "z/(z*z)", "(1+z)^2", "(z^2)^3", "2*(1/C)"}) {
        auto e = parse_series(txt);
        CHECK(expr_equal(e, parse_series(print_series(e))));
        CHECK(print_series(e) == txt);
    }
}

TEST_CASE("evaluation of the geometric series") {
    auto s = eval_series("1/(1-z)", 6);
    CHECK(s.trunc() == 6);
    CHECK(s.dump() == "1,1,1,1,1,1,1");
}

TEST_CASE("minus evaluates as plus") {
    auto a = eval_series("1-z", 5);
    auto b = eval_series("1+z", 5);
    CHECK(identical(a, b));
}

TEST_CASE("integer literals reduce mod 2") {
    CHECK(eval_series("2", 3).is_zero());
    CHECK(eval_series("7", 3).coeff(0));
    CHECK(eval_series("0", 3).is_zero());
}

TEST_CASE("catalan builtin satisfies C = 1 + z*C^2") {
    auto lhs = eval_series("C", 64);
    auto rhs = eval_series("1+z*C^2", 64);
    CHECK(identical(lhs, rhs));
    // z*C^2 = C - 1
    CHECK(eval_series("z*C^2", 10).dump() == "0,1,0,1,0,0,0,1,0,0,0");
}

TEST_CASE("division by a non-unit is rejected") {
    CHECK_THROWS_AS(eval_series("1/z", 5), HypothesisError);
    CHECK_THROWS_AS(eval_series("1/(z+z^2)", 5), HypothesisError);
    CHECK_THROWS_AS(eval_series("1/0", 5), HypothesisError);
    CHECK_THROWS_AS(eval_series("1/2", 5), HypothesisError);
}

TEST_CASE("pow zero is one") {
    CHECK(eval_series("z^0", 4).dump() == "1,0,0,0,0");
    CHECK(eval_series("0^0", 4).coeff(0));
}

TEST_CASE("evaluation respects the requested truncation") {
    for (int t : {0, 1, 7, 63, 64, 65, 200})
        CHECK(eval_series("C/(1-z)+z^3", t).trunc() == t);
}
