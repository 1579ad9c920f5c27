#pragma once

#include <optional>

#include "logex/invert.hpp"

namespace logex {

// delta† ≻ 1: the support decays at an exponential-or-faster rate, which is
// what makes the translation solver's orbit sums contract.
inline bool is_steep_residual(const context& ctx, const series& eps) {
    if (!eps.has_retained()) return false;
    series dag = m_dagger(ctx, eps.dom());
    if (!dag.has_retained()) return false;
    return mono_is_large(ctx, dag.dom());
}

struct normal_form {
    int depth = 0;       // iterated-log conjugation count
    series h;            // log_n o f o exp_n = x + c + delta
    coefficient c{0L};   // translation constant, >= 0
    series delta;        // steep infinitesimal residual (possibly zero)
};

// Conjugates f by iterated logs until it reaches the translation scale
// x + c + delta with delta steep or zero. Inputs that never flatten (such as
// exp(x)) have nonzero exponentiality and are rejected.
inline normal_form normalize(const context& ctx, const series& f) {
    if (!is_positive_infinite(ctx, f))
        fail(errc::not_positive_infinite, "normalize needs f ≻ R");
    series x = x_series(ctx);
    if (compare(ctx, f, x) != ordering::greater)
        fail(errc::precondition_violated, "normalize needs f > x");
    series ex = exp_s(ctx, x);
    series h = f;
    int budget = ctx.max_exp_height + 2;
    for (int n = 0;; ++n) {
        series d = sub(ctx, h, x);
        split3_result parts = split3(ctx, d);
        if (!parts.large.has_retained() && !parts.large.cutoff()) {
            if (!parts.small.has_retained() || is_steep_residual(ctx, parts.small))
                return {n, h, parts.constant, parts.small};
        }
        if (n >= budget)
            fail(errc::exponentiality_nonzero,
                 "no iterated-log conjugate reaches the translation scale");
        h = log_s(ctx, compose(ctx, h, ex));
    }
}

// Abel solution for f = x + 1 + delta with steep delta (Prop 4.19):
// V = x + (delta + delta o f + delta o f o f + ...).
inline series solve_translation(const context& ctx, const series& f) {
    series d = sub(ctx, f, add(ctx, x_series(ctx), one_series(ctx)));
    if (d.has_retained()) {
        if (dominance_cmp(ctx, d, one_series(ctx)) != dominance::smaller)
            fail(errc::precondition_violated, "translation solver needs f = x + 1 + o(1)");
        if (!is_steep_residual(ctx, d))
            fail(errc::not_steep_residual, "translation residual is not steep");
        series orbit = sum_decreasing(ctx, d, [&](const series& cur) {
            return compose_auto(ctx, cur, f);
        });
        return add(ctx, x_series(ctx), orbit);
    }
    return add(ctx, x_series(ctx), cutoff_only(d.cutoff()));
}

// Iterative-logarithm equation u o f = f' u for f = x + eps with eps a
// positive steep infinitesimal (the functional equation behind Prop 4.17).
// Solved by the contraction u <- (u o f) / f', seeded with the dominant term
// of eps; the solution is unique up to a scalar factor.
inline series solve_iterlog(const context& ctx, const series& f) {
    series eps = sub(ctx, f, x_series(ctx));
    if (!eps.has_retained())
        fail(errc::precondition_violated, "iterative-log equation needs f != x");
    if (sign_of(ctx, eps) <= 0 || dominance_cmp(ctx, eps, one_series(ctx)) != dominance::smaller)
        fail(errc::precondition_violated, "iterative-log equation needs 0 < f - x ≺ 1");
    if (!is_steep_residual(ctx, eps))
        fail(errc::not_steep_residual, "f - x is not steep");
    series fp = derive(ctx, f);
    series fp_inv = reciprocal(ctx, fp);
    series u = from_term(ctx, eps.leading().coeff, eps.leading().mono);
    std::optional<monomial> last_gap;
    for (int i = 0; i <= ctx.max_fixpoint_iters; ++i) {
        series nxt = mul(ctx, compose_auto(ctx, u, f), fp_inv);
        series gap = sub(ctx, nxt, u);
        if (!gap.has_retained()) {
            if (gap.cutoff()) nxt = add(ctx, nxt, cutoff_only(gap.cutoff()));
            return nxt;
        }
        if (last_gap && cmp_m(ctx, gap.dom(), *last_gap) != ordering::less)
            fail(errc::non_convergent, "iterative-log contraction stalled");
        last_gap = gap.dom();
        u = std::move(nxt);
    }
    fail(errc::non_convergent, "iterative-log contraction hit the cap");
}

struct abel_result {
    series V;                    // V o f = V + 1 up to cutoff
    int depth = 0;               // log-conjugation count used
    series residual;             // retained part of V o f - V - 1
    coefficient norm_constant{0L}; // additive gauge of eq (4.3), fixed to 0
};

// Abel-equation pipeline: normalize, then either rescale a positive
// translation constant and run the translation solver, or (constant-free
// case) integrate the reciprocal of the iterative-log solution and fix its
// gauge. The result is pulled back through the iterated-log conjugation.
inline abel_result abel(const context& ctx, const series& f) {
    normal_form nf = normalize(ctx, f);
    series x = x_series(ctx);
    series vh;
    if (ctx.sign(nf.c) > 0) {
        series k = nf.h;
        bool unit = ctx.equal(nf.c, ctx.num(1));
        if (!unit) {
            series scaled = compose_auto(ctx, nf.h, mul_coeff(ctx, x, nf.c));
            k = mul_coeff(ctx, scaled, ctx.num(1) / nf.c);
        }
        series v1 = solve_translation(ctx, k);
        vh = unit ? v1 : compose_auto(ctx, v1, mul_coeff(ctx, x, ctx.num(1) / nf.c));
    } else {
        series u = solve_iterlog(ctx, nf.h);
        series v0 = integrate(ctx, reciprocal(ctx, u));
        series w = sub(ctx, compose_auto(ctx, v0, nf.h), v0);
        split3_result parts = split3(ctx, w);
        if (parts.large.has_retained() || ctx.sign(parts.constant) == 0)
            fail(errc::non_convergent, "Abel normalization constant did not settle");
        v0 = mul_coeff(ctx, v0, ctx.num(1) / parts.constant);
        series conj = compose_auto(ctx, compose_auto(ctx, v0, nf.h), comp_inverse(ctx, v0));
        series v2 = solve_translation(ctx, conj);
        vh = compose_auto(ctx, v2, v0);
    }
    series V = vh;
    if (nf.depth > 0) V = compose(ctx, vh, log_atom_series(ctx, nf.depth));
    series residual = sub(ctx, sub(ctx, compose(ctx, V, f), V), one_series(ctx));
    return {std::move(V), nf.depth, std::move(residual), ctx.num(0)};
}

// Fractional iterate along the flow: h^[r] = V^{inv} o (V + r), with
// f < x handled through the inverse (f^{inv})^[r] = f^[-r].
inline series iterate(const context& ctx, const series& f, const coefficient& r) {
    series x = x_series(ctx);
    auto cmp = try_compare(ctx, f, x);
    if (cmp && *cmp == ordering::equal) return f;
    if (!is_positive_infinite(ctx, f))
        fail(errc::not_positive_infinite, "iterate needs f ≻ R");
    if (cmp && *cmp == ordering::less) {
        series g = comp_inverse(ctx, f);
        abel_result ab = abel(ctx, g);
        return compose_auto(ctx, comp_inverse(ctx, ab.V),
                            sub(ctx, ab.V, constant_series(ctx, r)));
    }
    abel_result ab = abel(ctx, f);
    return compose_auto(ctx, comp_inverse(ctx, ab.V),
                        add(ctx, ab.V, constant_series(ctx, r)));
}

// h with h o f = g o h, for f, g on the same side of x.
inline series conjugator(const context& ctx, const series& f, const series& g) {
    series x = x_series(ctx);
    auto cf = try_compare(ctx, f, x), cg = try_compare(ctx, g, x);
    if (!cf || !cg) fail(errc::precision_exhausted, "conjugator sides undecided");
    if (*cf == ordering::equal && *cg == ordering::equal) return x;
    if (*cf == ordering::equal || *cg == ordering::equal)
        fail(errc::not_conjugate, "x is conjugate only to itself");
    if (*cf != *cg) fail(errc::not_conjugate, "f - x and g - x have opposite signs");
    if (*cf == ordering::less)
        return conjugator(ctx, comp_inverse(ctx, f), comp_inverse(ctx, g));
    abel_result af = abel(ctx, f);
    abel_result ag = abel(ctx, g);
    return compose_auto(ctx, comp_inverse(ctx, ag.V), af.V);
}

// r with h = iterate(f, r), i.e. V o h o V^{inv} = x + r; nullopt when the
// conjugate is not a translation.
inline std::optional<coefficient> centralizer_param(const context& ctx, const series& f,
                                                    const series& h) {
    series x = x_series(ctx);
    auto cf = try_compare(ctx, f, x);
    if (cf && *cf == ordering::equal)
        fail(errc::precondition_violated, "centralizer of x is everything");
    if (!is_positive_infinite(ctx, f))
        fail(errc::not_positive_infinite, "centralizer base must be ≻ R");
    if (cf && *cf == ordering::less) {
        auto r = centralizer_param(ctx, comp_inverse(ctx, f), h);
        if (r) return -*r;
        return std::nullopt;
    }
    if (!is_positive_infinite(ctx, h)) return std::nullopt;
    abel_result ab = abel(ctx, f);
    series k = compose_auto(ctx, compose_auto(ctx, ab.V, h), comp_inverse(ctx, ab.V));
    series d = sub(ctx, k, x);
    split3_result parts = split3(ctx, d);
    if (parts.large.has_retained() || parts.small.has_retained()) return std::nullopt;
    return parts.constant;
}

enum class sign3 { negative, zero, positive };

// Sign of f o g - g o f via the trichotomy of Prop 4.29: conjugate g to the
// unit translation and locate V o f o V^{inv} against x + R.
inline sign3 commutator_sign(const context& ctx, const series& f, const series& g) {
    series x = x_series(ctx);
    if (compare(ctx, f, x) != ordering::greater || compare(ctx, g, x) != ordering::greater)
        fail(errc::precondition_violated, "commutator trichotomy needs f, g > x");
    abel_result ag = abel(ctx, g);
    series h = compose_auto(ctx, compose_auto(ctx, ag.V, f), comp_inverse(ctx, ag.V));
    split3_result parts = split3(ctx, sub(ctx, h, x));
    if (parts.large.has_retained())
        return ctx.sign(parts.large.leading().coeff) > 0 ? sign3::positive : sign3::negative;
    if (!parts.small.has_retained()) return sign3::zero;
    return ctx.sign(parts.small.leading().coeff) > 0 ? sign3::negative : sign3::positive;
}

// f0 in the centralizer of f with f0 >= g0 (Prop 4.30). For r >= 0 the
// iterate at the same parameter works; negative parameters fall back to the
// identity iterate, which already dominates.
inline series centralizer_dominate(const context& ctx, const series& f, const series& g,
                                   const series& g0) {
    series x = x_series(ctx);
    if (compare(ctx, g, x) != ordering::greater || compare(ctx, f, g) == ordering::less)
        fail(errc::precondition_violated, "needs f >= g > x");
    auto r = centralizer_param(ctx, g, g0);
    if (!r) fail(errc::precondition_violated, "g0 is not in the centralizer of g");
    coefficient rr = ctx.sign(*r) < 0 ? ctx.num(0) : *r;
    return iterate(ctx, f, rr);
}

} // namespace logex
