#include "riograph/series_expr.hpp"

#include <cctype>

namespace riograph {

namespace {

ExprPtr make(SeriesExpr::Kind k, unsigned value = 0, ExprPtr lhs = nullptr,
             ExprPtr rhs = nullptr) {
    auto n = std::make_shared<SeriesExpr>();
    n->kind = k;
    n->value = value;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExprPtr run() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("empty expression", pos_);
        ExprPtr e = expr();
        skip_ws();
        if (pos_ < text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    unsigned uint_lit() {
        skip_ws();
        const std::size_t start = pos_;
        unsigned long v = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (v > 1'000'000'000UL)
                throw ParseError("integer literal too large", start);
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected an integer", start);
        return static_cast<unsigned>(v);
    }

    ExprPtr expr() {
        ExprPtr e = term();
        for (;;) {
            if (eat('+'))
                e = make(SeriesExpr::Kind::add, 0, e, term());
            else if (eat('-'))
                e = make(SeriesExpr::Kind::sub, 0, e, term());
            else
                return e;
        }
    }

    ExprPtr term() {
        ExprPtr e = factor();
        for (;;) {
            if (eat('*'))
                e = make(SeriesExpr::Kind::mul, 0, e, factor());
            else if (eat('/'))
                e = make(SeriesExpr::Kind::div, 0, e, factor());
            else
                return e;
        }
    }

    ExprPtr factor() {
        ExprPtr base = atom();
        if (eat('^')) return make(SeriesExpr::Kind::pow, uint_lit(), base);
        return base;
    }

    ExprPtr atom() {
        const char c = peek();
        if (c == 'z') {
            ++pos_;
            return make(SeriesExpr::Kind::var_z);
        }
        if (c == 'C') {
            ++pos_;
            return make(SeriesExpr::Kind::catalan);
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return make(SeriesExpr::Kind::num, uint_lit());
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        throw ParseError(std::string("unexpected character '") + c + "'",
                         pos_);
    }
};

// Precedence levels for printing: additive 0, multiplicative 1, power 2,
// atoms 3. A child is parenthesized when its level is below the parent's,
// or equal to it on the right of a binary operator (the grammar is
// left-associative, so 1+(z+z) must keep its parentheses).
int level(const SeriesExpr& e) {
    switch (e.kind) {
        case SeriesExpr::Kind::add:
        case SeriesExpr::Kind::sub:
            return 0;
        case SeriesExpr::Kind::mul:
        case SeriesExpr::Kind::div:
            return 1;
        case SeriesExpr::Kind::pow:
            return 2;
        default:
            return 3;
    }
}

void print_to(const SeriesExpr& e, std::string& out) {
    auto child = [&out](const SeriesExpr& c, int min_level) {
        if (level(c) < min_level) {
            out += '(';
            print_to(c, out);
            out += ')';
        } else {
            print_to(c, out);
        }
    };
    switch (e.kind) {
        case SeriesExpr::Kind::num:
            out += std::to_string(e.value);
            break;
        case SeriesExpr::Kind::var_z:
            out += 'z';
            break;
        case SeriesExpr::Kind::catalan:
            out += 'C';
            break;
        case SeriesExpr::Kind::add:
        case SeriesExpr::Kind::sub:
            child(*e.lhs, 0);
            out += e.kind == SeriesExpr::Kind::add ? '+' : '-';
            child(*e.rhs, 1);
            break;
        case SeriesExpr::Kind::mul:
        case SeriesExpr::Kind::div:
            child(*e.lhs, 1);
            out += e.kind == SeriesExpr::Kind::mul ? '*' : '/';
            child(*e.rhs, 2);
            break;
        case SeriesExpr::Kind::pow:
            child(*e.lhs, 3);
            out += '^';
            out += std::to_string(e.value);
            break;
    }
}

}  // namespace

ExprPtr parse_series(const std::string& text) { return Parser(text).run(); }

std::string print_series(const ExprPtr& e) {
    std::string out;
    print_to(*e, out);
    return out;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind || a->value != b->value) return false;
    return expr_equal(a->lhs, b->lhs) && expr_equal(a->rhs, b->rhs);
}

Gf2Series eval_series(const ExprPtr& e, int trunc) {
    switch (e->kind) {
        case SeriesExpr::Kind::num:
            return e->value % 2 ? Gf2Series::one(trunc)
                                : Gf2Series::zero(trunc);
        case SeriesExpr::Kind::var_z:
            return Gf2Series::z(trunc);
        case SeriesExpr::Kind::catalan:
            return Gf2Series::catalan(trunc);
        case SeriesExpr::Kind::add:
        case SeriesExpr::Kind::sub:
            return eval_series(e->lhs, trunc) + eval_series(e->rhs, trunc);
        case SeriesExpr::Kind::mul:
            return eval_series(e->lhs, trunc) * eval_series(e->rhs, trunc);
        case SeriesExpr::Kind::div:
            return eval_series(e->lhs, trunc) / eval_series(e->rhs, trunc);
        case SeriesExpr::Kind::pow:
            return eval_series(e->lhs, trunc).pow(e->value);
    }
    throw ConsistencyError("unreachable expression kind");
}

Gf2Series eval_series(const std::string& text, int trunc) {
    return eval_series(parse_series(text), trunc);
}

}  // namespace riograph
