#pragma once

#include "logex/calculus.hpp"
#include "logex/translog.hpp"

namespace logex {

inline bool is_identity_series(const context& ctx, const series& s) {
    if (s.cutoff() || s.size() != 1) return false;
    const term& t = s.leading();
    int k = -1;
    return ctx.equal(t.coeff, ctx.num(1)) && t.mono.is_single_log(ctx, &k) && k == 0;
}

// Right-composition f o s for positive infinite s. Termwise on f; monomial
// rule (prod l_k^{a_k} e^P) o s = prod (L_k s)^{a_k} * exp(P o s) with
// L_0 s = s and L_{k+1} s = log L_k s.
inline series compose(const context& ctx, const series& f, const series& s) {
    if (is_identity_series(ctx, s)) return f;
    if (!is_positive_infinite(ctx, s))
        fail(errc::not_positive_infinite, "composition argument must be positive infinite");

    std::vector<series> logs{s};
    auto iter_log = [&](size_t k) -> const series& {
        while (logs.size() <= k) logs.push_back(log_s(ctx, logs.back()));
        return logs[k];
    };

    std::function<series(const monomial&)> mono_at = [&](const monomial& m) -> series {
        if (m.is_one()) return one_series(ctx);
        series acc = one_series(ctx);
        for (size_t k = 0; k < m.log_powers().size(); ++k) {
            const coefficient& a = m.log_powers()[k];
            if (ctx.is_zero(a)) continue;
            acc = mul(ctx, acc, pow_s(ctx, iter_log(k), a));
        }
        if (m.has_exp_part()) {
            series inner;
            for (const auto& t : m.exp_part().terms())
                inner = add(ctx, inner, mul_coeff(ctx, mono_at(t.mono), t.coeff));
            acc = mul(ctx, acc, exp_s(ctx, inner));
        }
        return acc;
    };

    series out;
    if (f.cutoff()) {
        // the composed cutoff needs its monomial even when the coefficient
        // underflows the zero tolerance
        context notol = ctx;
        notol.zero_tol = flt_t(0);
        series img = compose(notol, from_term(notol, notol.num(1), *f.cutoff()), s);
        out = cutoff_only(img.dom());
    }
    for (const auto& t : f.terms()) out = add(ctx, out, mul_coeff(ctx, mono_at(t.mono), t.coeff));
    return out;
}

// Taylor configuration of Def 2.22 at (s, delta): delta ≺ s and
// (m' o s) delta ≺ m o s for every support monomial of f.
inline bool taylor_configured(const context& ctx, const series& f, const series& s,
                              const series& delta) {
    if (!delta.has_retained()) return true;
    if (dominance_cmp(ctx, delta, s) != dominance::smaller) return false;
    bool s_is_x = is_identity_series(ctx, s);
    for (const auto& t : f.terms()) {
        if (t.mono.is_one()) continue;
        series dag = m_dagger(ctx, t.mono);
        monomial w = dag.dom();
        if (!s_is_x) {
            series ws = compose(ctx, from_term(ctx, ctx.num(1), w), s);
            w = ws.dom();
        }
        monomial gauge = mul_m(ctx, w, delta.dom());
        if (gauge.is_one() || mono_is_large(ctx, gauge)) return false;
    }
    return true;
}

// f o (s + delta) = sum_k (f^{(k)} o s) delta^k / k!  under the gauge
// f o s ≻ (f' o s) delta ≻ ... (Def 2.22).
inline series taylor_compose(const context& ctx, const series& f, const series& s,
                             const series& delta) {
    if (!delta.has_retained() && !delta.cutoff()) return compose(ctx, f, s);
    if (!taylor_configured(ctx, f, s, delta))
        fail(errc::not_taylor_configured, "Taylor gauge fails at (s, delta)");
    if (!delta.has_retained()) {
        // perturbation entirely below its cutoff: result known to f o s plus
        // a cutoff at (f' o s) * delta-level
        series fp = compose(ctx, derive(ctx, f), s);
        series out = compose(ctx, f, s);
        if (fp.has_retained())
            out = add(ctx, out, cutoff_only(mul_m(ctx, fp.dom(), *delta.cutoff())));
        return out;
    }
    series deriv = f;
    series power = one_series(ctx);
    coefficient inv_kfact = ctx.num(1);
    long k = 0;
    series first = compose(ctx, f, s);
    return sum_decreasing(ctx, first, [&](const series&) {
        deriv = derive(ctx, deriv);
        power = mul(ctx, power, delta);
        ++k;
        inv_kfact = inv_kfact / ctx.num(k);
        if (!deriv.has_retained() && !deriv.cutoff()) return series();
        return mul_coeff(ctx, mul(ctx, compose(ctx, deriv, s), power), inv_kfact);
    });
}

// sum_{k>=1} f^{(k)} eps^k / k!, i.e. f o (x + eps) - f. Cheap form of the
// Taylor expansion used by the inversion loops.
inline series taylor_tail(const context& ctx, const series& f, const series& eps) {
    if (!eps.has_retained()) return cutoff_only(eps.cutoff());
    if (!taylor_configured(ctx, f, x_series(ctx), eps))
        fail(errc::not_taylor_configured, "Taylor gauge fails at (x, eps)");
    series deriv = derive(ctx, f);
    series power = eps;
    coefficient inv_kfact = ctx.num(1);
    long k = 1;
    series first = mul(ctx, deriv, power);
    return sum_decreasing(ctx, first, [&](const series&) {
        deriv = derive(ctx, deriv);
        power = mul(ctx, power, eps);
        ++k;
        inv_kfact = inv_kfact / ctx.num(k);
        if (!deriv.has_retained() && !deriv.cutoff()) return series();
        return mul_coeff(ctx, mul(ctx, deriv, power), inv_kfact);
    });
}

// f o t, preferring the Taylor route around x when t = x + w is configured
// for it, falling back to the structural rules.
inline series compose_auto(const context& ctx, const series& f, const series& t) {
    if (is_identity_series(ctx, t)) return f;
    series w = sub(ctx, t, x_series(ctx));
    if (w.has_retained() || w.cutoff()) {
        if (dominance_cmp(ctx, w, x_series(ctx)) == dominance::smaller &&
            taylor_configured(ctx, f, x_series(ctx), w))
            return taylor_compose(ctx, f, x_series(ctx), w);
    }
    return compose(ctx, f, t);
}

} // namespace logex
