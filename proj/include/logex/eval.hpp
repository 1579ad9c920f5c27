#pragma once

#include <variant>

#include "logex/conjugacy.hpp"
#include "logex/parser.hpp"

namespace logex {

using eval_value = std::variant<series, abel_result, ordering>;

series evaluate_series(const context& ctx, const expr_ptr& e);

inline coefficient evaluate_constant(const context& ctx, const expr_ptr& e) {
    series s = evaluate_series(ctx, e);
    split3_result parts = split3(ctx, s);
    if (parts.large.has_retained() || parts.small.has_retained() || s.cutoff())
        fail(errc::precondition_violated, "expected a constant argument");
    return parts.constant;
}

inline eval_value evaluate(const context& ctx, const expr_ptr& e) {
    switch (e->k) {
    case expr::op::abel_fn:
        return abel(ctx, evaluate_series(ctx, e->args[0]));
    case expr::op::cmp_fn:
        return compare(ctx, evaluate_series(ctx, e->args[0]), evaluate_series(ctx, e->args[1]));
    default:
        return evaluate_series(ctx, e);
    }
}

inline series evaluate_series(const context& ctx, const expr_ptr& e) {
    switch (e->k) {
    case expr::op::var_x: return x_series(ctx);
    case expr::op::literal: return constant_series(ctx, e->lit);
    case expr::op::add:
        return add(ctx, evaluate_series(ctx, e->args[0]), evaluate_series(ctx, e->args[1]));
    case expr::op::sub:
        return sub(ctx, evaluate_series(ctx, e->args[0]), evaluate_series(ctx, e->args[1]));
    case expr::op::neg: return negate(ctx, evaluate_series(ctx, e->args[0]));
    case expr::op::mul:
        return mul(ctx, evaluate_series(ctx, e->args[0]), evaluate_series(ctx, e->args[1]));
    case expr::op::div:
        return divide(ctx, evaluate_series(ctx, e->args[0]), evaluate_series(ctx, e->args[1]));
    case expr::op::pow:
        return pow_s(ctx, evaluate_series(ctx, e->args[0]), evaluate_constant(ctx, e->args[1]));
    case expr::op::log_fn: return log_s(ctx, evaluate_series(ctx, e->args[0]));
    case expr::op::exp_fn: return exp_s(ctx, evaluate_series(ctx, e->args[0]));
    case expr::op::compose:
        return compose(ctx, evaluate_series(ctx, e->args[0]), evaluate_series(ctx, e->args[1]));
    case expr::op::inv_fn: return comp_inverse(ctx, evaluate_series(ctx, e->args[0]));
    case expr::op::iter_fn:
        return iterate(ctx, evaluate_series(ctx, e->args[0]), evaluate_constant(ctx, e->args[1]));
    case expr::op::conj_fn:
        return conjugator(ctx, evaluate_series(ctx, e->args[0]), evaluate_series(ctx, e->args[1]));
    case expr::op::cutoff_fn: {
        series s = evaluate_series(ctx, e->args[0]);
        if (!s.has_retained())
            fail(errc::syntax_error, "O(...) needs a nonzero monomial");
        return cutoff_only(s.dom());
    }
    case expr::op::abel_fn:
    case expr::op::cmp_fn:
        fail(errc::precondition_violated, "abel/cmp results cannot be used as series operands");
    }
    fail(errc::precondition_violated, "unreachable expression kind");
}

} // namespace logex
