#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "logex/series.hpp"

namespace logex {

struct expr;
using expr_ptr = std::shared_ptr<const expr>;

// Abstract syntax over x, coefficient literals, field operations, log/exp,
// the composition operator @, and the kernel queries.
struct expr {
    enum class op {
        var_x,
        literal,
        add,
        sub,
        neg,
        mul,
        div,
        pow,
        log_fn,
        exp_fn,
        compose,
        inv_fn,
        abel_fn,
        iter_fn,
        conj_fn,
        cmp_fn,
        cutoff_fn, // O(...) cutoff marker
    };
    op k;
    coefficient lit{0L};
    std::vector<expr_ptr> args;
    size_t pos = 0;
};

namespace detail {

struct token {
    enum class kind { number, ident, plus, minus, star, slash, caret, at, lparen, rparen, comma, end };
    kind k;
    std::string text;
    size_t pos;
};

class lexer {
public:
    lexer(std::string_view text) : text_(text) { advance(); }

    const token& peek() const { return tok_; }

    token take() {
        token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
        size_t start = i_;
        if (i_ >= text_.size()) {
            tok_ = {token::kind::end, "", start};
            return;
        }
        char c = text_[i_];
        auto single = [&](token::kind k) {
            ++i_;
            tok_ = {k, std::string(1, c), start};
        };
        switch (c) {
        case '+': return single(token::kind::plus);
        case '-': return single(token::kind::minus);
        case '*': return single(token::kind::star);
        case '/': return single(token::kind::slash);
        case '^': return single(token::kind::caret);
        case '@': return single(token::kind::at);
        case '(': return single(token::kind::lparen);
        case ')': return single(token::kind::rparen);
        case ',': return single(token::kind::comma);
        default: break;
        }
        // U+2212 minus sign
        if (static_cast<unsigned char>(c) == 0xE2 && i_ + 2 < text_.size() + 1 &&
            text_.substr(i_, 3) == "\xE2\x88\x92") {
            i_ += 3;
            tok_ = {token::kind::minus, "-", start};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            auto digits = [&] {
                while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
            };
            digits();
            if (j < text_.size() && text_[j] == '.') {
                ++j;
                digits();
            }
            if (j < text_.size() && (text_[j] == 'e' || text_[j] == 'E')) {
                size_t k = j + 1;
                if (k < text_.size() && (text_[k] == '+' || text_[k] == '-')) ++k;
                if (k < text_.size() && std::isdigit(static_cast<unsigned char>(text_[k]))) {
                    j = k;
                    digits();
                }
            }
            if (j < text_.size() && text_[j] == '~') {
                ++j;
                digits();
            }
            tok_ = {token::kind::number, std::string(text_.substr(i_, j - i_)), start};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_'))
                ++j;
            tok_ = {token::kind::ident, std::string(text_.substr(i_, j - i_)), start};
            i_ = j;
            return;
        }
        fail(errc::syntax_error,
             "unexpected character '" + std::string(1, c) + "' at position " + std::to_string(start));
    }

    std::string_view text_;
    size_t i_ = 0;
    token tok_{token::kind::end, "", 0};
};

// Numeric literal in the active scalar mode. Decimal and scientific forms
// are exact rationals in rational mode; a ~bits tag forces the float backend.
inline coefficient parse_number(const context& ctx, const std::string& text, size_t pos) {
    std::string body = text;
    bool tagged = false;
    if (auto t = body.find('~'); t != std::string::npos) {
        tagged = true;
        body = body.substr(0, t);
    }
    if (tagged) {
        if (ctx.mode == scalar_mode::rational)
            fail(errc::exactness_unavailable,
                 "float-tagged literal at position " + std::to_string(pos) + " in rational mode");
        return coefficient(flt_t(body));
    }
    if (ctx.mode == scalar_mode::bigfloat) return coefficient(flt_t(body));
    // exact rational from integer/decimal/scientific text
    std::string mantissa = body;
    long exp10 = 0;
    if (auto e = body.find_first_of("eE"); e != std::string::npos) {
        mantissa = body.substr(0, e);
        exp10 = std::stol(body.substr(e + 1));
    }
    std::string digits = mantissa;
    if (auto d = mantissa.find('.'); d != std::string::npos) {
        digits = mantissa.substr(0, d) + mantissa.substr(d + 1);
        exp10 -= static_cast<long>(mantissa.size() - d - 1);
    }
    rat_t v{int_t(digits)};
    int_t p10 = 1;
    for (long i = 0; i < std::labs(exp10); ++i) p10 *= 10;
    if (exp10 >= 0)
        v *= rat_t(p10);
    else
        v /= rat_t(p10);
    return coefficient(v);
}

class parser {
public:
    parser(const context& ctx, std::string_view text) : ctx_(ctx), lex_(text) {}

    expr_ptr run() {
        expr_ptr e = parse_compose();
        expect(token::kind::end, "end of input");
        return e;
    }

private:
    static expr_ptr node(expr::op k, std::vector<expr_ptr> args, size_t pos) {
        auto e = std::make_shared<expr>();
        e->k = k;
        e->args = std::move(args);
        e->pos = pos;
        return e;
    }

    expr_ptr parse_compose() {
        expr_ptr e = parse_additive();
        while (lex_.peek().k == token::kind::at) {
            size_t pos = lex_.take().pos;
            expr_ptr rhs = parse_additive();
            e = node(expr::op::compose, {e, rhs}, pos);
        }
        return e;
    }

    expr_ptr parse_additive() {
        expr_ptr e;
        if (lex_.peek().k == token::kind::minus) {
            size_t pos = lex_.take().pos;
            e = node(expr::op::neg, {parse_multiplicative()}, pos);
        } else {
            e = parse_multiplicative();
        }
        while (true) {
            auto k = lex_.peek().k;
            if (k != token::kind::plus && k != token::kind::minus) break;
            size_t pos = lex_.take().pos;
            expr_ptr rhs = parse_multiplicative();
            e = node(k == token::kind::plus ? expr::op::add : expr::op::sub, {e, rhs}, pos);
        }
        return e;
    }

    expr_ptr parse_multiplicative() {
        expr_ptr e = parse_factor();
        while (true) {
            auto k = lex_.peek().k;
            if (k != token::kind::star && k != token::kind::slash) break;
            size_t pos = lex_.take().pos;
            expr_ptr rhs = parse_factor();
            e = node(k == token::kind::star ? expr::op::mul : expr::op::div, {e, rhs}, pos);
        }
        return e;
    }

    expr_ptr parse_factor() {
        expr_ptr base = parse_atom();
        if (lex_.peek().k != token::kind::caret) return base;
        size_t pos = lex_.take().pos;
        expr_ptr ex;
        if (lex_.peek().k == token::kind::lparen) {
            lex_.take();
            ex = parse_compose();
            expect(token::kind::rparen, ")");
        } else {
            bool negated = false;
            if (lex_.peek().k == token::kind::minus) {
                lex_.take();
                negated = true;
            } else if (lex_.peek().k == token::kind::plus) {
                lex_.take();
            }
            token t = lex_.take();
            if (t.k != token::kind::number)
                fail(errc::syntax_error, "expected exponent at position " + std::to_string(t.pos));
            auto lit = std::make_shared<expr>();
            lit->k = expr::op::literal;
            lit->lit = parse_number(ctx_, t.text, t.pos);
            lit->pos = t.pos;
            ex = negated ? node(expr::op::neg, {lit}, t.pos) : expr_ptr(lit);
        }
        return node(expr::op::pow, {base, ex}, pos);
    }

    expr_ptr parse_atom() {
        token t = lex_.take();
        switch (t.k) {
        case token::kind::number: {
            auto e = std::make_shared<expr>();
            e->k = expr::op::literal;
            e->lit = parse_number(ctx_, t.text, t.pos);
            e->pos = t.pos;
            return e;
        }
        case token::kind::lparen: {
            expr_ptr e = parse_compose();
            expect(token::kind::rparen, ")");
            return e;
        }
        case token::kind::ident: {
            if (t.text == "x") return node(expr::op::var_x, {}, t.pos);
            // k-fold log: log^k(e)
            if (t.text == "log" && lex_.peek().k == token::kind::caret) {
                lex_.take();
                token n = lex_.take();
                long depth = 0;
                if (n.k != token::kind::number || (depth = std::stol(n.text)) < 1)
                    fail(errc::syntax_error,
                         "log^k needs a positive integer at position " + std::to_string(n.pos));
                expect(token::kind::lparen, "(");
                expr_ptr e = parse_compose();
                expect(token::kind::rparen, ")");
                for (long i = 0; i < depth; ++i) e = node(expr::op::log_fn, {e}, t.pos);
                return e;
            }
            expr::op k;
            size_t arity;
            if (t.text == "log") k = expr::op::log_fn, arity = 1;
            else if (t.text == "exp") k = expr::op::exp_fn, arity = 1;
            else if (t.text == "inv") k = expr::op::inv_fn, arity = 1;
            else if (t.text == "abel") k = expr::op::abel_fn, arity = 1;
            else if (t.text == "O") k = expr::op::cutoff_fn, arity = 1;
            else if (t.text == "iter") k = expr::op::iter_fn, arity = 2;
            else if (t.text == "conj") k = expr::op::conj_fn, arity = 2;
            else if (t.text == "cmp") k = expr::op::cmp_fn, arity = 2;
            else
                fail(errc::unknown_function,
                     "unknown function '" + t.text + "' at position " + std::to_string(t.pos));
            expect(token::kind::lparen, "(");
            std::vector<expr_ptr> args;
            args.push_back(parse_compose());
            while (lex_.peek().k == token::kind::comma) {
                lex_.take();
                args.push_back(parse_compose());
            }
            expect(token::kind::rparen, ")");
            if (args.size() != arity)
                fail(errc::syntax_error, "'" + t.text + "' takes " + std::to_string(arity) +
                                             " argument(s), got " + std::to_string(args.size()));
            return node(k, std::move(args), t.pos);
        }
        default:
            fail(errc::syntax_error, "unexpected token at position " + std::to_string(t.pos));
        }
    }

    void expect(token::kind k, const std::string& what) {
        token t = lex_.take();
        if (t.k != k)
            fail(errc::syntax_error, "expected " + what + " at position " + std::to_string(t.pos));
    }

    const context& ctx_;
    lexer lex_;
};

} // namespace detail

inline expr_ptr parse(const context& ctx, std::string_view text) {
    return detail::parser(ctx, text).run();
}

} // namespace logex
