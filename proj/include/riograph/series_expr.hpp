#pragma once

#include <memory>
#include <string>

#include "riograph/gf2_series.hpp"

namespace riograph {

// Abstract syntax tree for the small generating-function language:
//
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' uint)?
//   atom   := 'z' | uint | 'C' | '(' expr ')'
//
// '-' is kept in the tree for faithful printing but evaluates exactly like
// '+' (coefficients live in GF(2)). 'C' is the Catalan series.
struct SeriesExpr {
    enum class Kind { num, var_z, catalan, add, sub, mul, div, pow };

    Kind kind;
    unsigned value = 0;  // num: the literal; pow: the exponent
    std::shared_ptr<const SeriesExpr> lhs, rhs;
};

using ExprPtr = std::shared_ptr<const SeriesExpr>;

// Throws ParseError (with byte offset) on malformed input.
ExprPtr parse_series(const std::string& text);

// Minimal-parentheses rendering; parse_series(print_series(e)) is
// structurally identical to e.
std::string print_series(const ExprPtr& e);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

// Evaluate to a series truncated at `trunc`. Division by a series with
// constant term 0 throws HypothesisError.
Gf2Series eval_series(const ExprPtr& e, int trunc);

// parse + eval in one step.
Gf2Series eval_series(const std::string& text, int trunc);

}  // namespace riograph
