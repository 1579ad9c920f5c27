#pragma once

#include "logex/series.hpp"

namespace logex {

// log of a positive series via the three-part decomposition
// s = c * d_s * (1 + eps):  log s = log(d_s) + log_R(c) + log(1 + eps).
inline series log_s(const context& ctx, const series& s) {
    if (!s.has_retained()) {
        if (s.cutoff()) fail(errc::precision_exhausted, "log of an all-cutoff series");
        fail(errc::non_positive_argument, "log of zero");
    }
    const term& lead = s.leading();
    if (ctx.sign(lead.coeff) <= 0) fail(errc::non_positive_argument, "log of a negative series");
    if (lead.mono.log_depth() + 1 > ctx.max_log_depth)
        fail(errc::depth_budget_exceeded, "log exceeds the iterated-log depth budget");
    series out = log_m(ctx, lead.mono);
    if (!(lead.mono.is_one() && ctx.equal(lead.coeff, ctx.num(1))))
        out = add(ctx, out, constant_series(ctx, log_c(ctx, lead.coeff)));
    // mercator part: sum_{k>0} (-1)^{k+1} eps^k / k
    series eps = mul_term(ctx, s, ctx.num(1) / lead.coeff, inverse_m(ctx, lead.mono));
    eps = sub(ctx, eps, one_series(ctx));
    if (eps.has_retained() || eps.cutoff()) {
        long k = 1;
        series tail = sum_decreasing(ctx, eps, [&](const series& cur) {
            // t_{k+1} = t_k * eps * (-k/(k+1))
            series nxt = mul(ctx, cur, eps);
            nxt = mul_coeff(ctx, nxt, ctx.num(-k, k + 1));
            ++k;
            return nxt;
        });
        out = add(ctx, out, tail);
    }
    return out;
}

// exp of a series: the purely large part must be exact and becomes the
// exponent of a new monomial, the constant part exponentiates in the scalar
// field, the infinitesimal part expands as a power series.
inline series exp_s(const context& ctx, const series& s) {
    if (s.cutoff() && (s.cutoff()->is_one() || mono_is_large(ctx, *s.cutoff())))
        fail(errc::precision_exhausted, "exp argument truncated above the infinitesimal range");
    split3_result parts = split3(ctx, s);
    monomial m = parts.large.has_retained()
                     ? monomial::make(ctx, {}, parts.large)
                     : monomial::one();
    coefficient c = exp_c(ctx, parts.constant);
    series expanded = one_series(ctx);
    if (parts.small.has_retained() || parts.small.cutoff()) {
        long k = 0;
        expanded = sum_decreasing(ctx, one_series(ctx), [&](const series& cur) {
            series nxt = mul(ctx, cur, parts.small);
            nxt = mul_coeff(ctx, nxt, ctx.num(1, k + 1));
            ++k;
            return nxt;
        });
    }
    return mul_term(ctx, expanded, c, m);
}

// s^r := exp(r log s); integer exponents go through plain multiplication so
// they stay exact for any nonzero s.
inline series pow_s(const context& ctx, const series& s, const coefficient& r) {
    long n = 0;
    if (r.integer_value(&n) && std::abs(n) <= 512) {
        if (n == 0) return one_series(ctx);
        series base = n > 0 ? s : reciprocal(ctx, s);
        unsigned long e = static_cast<unsigned long>(n > 0 ? n : -n);
        series acc = one_series(ctx);
        series sq = base;
        while (e) {
            if (e & 1) acc = mul(ctx, acc, sq);
            e >>= 1;
            if (e) sq = mul(ctx, sq, sq);
        }
        return acc;
    }
    return exp_s(ctx, mul_coeff(ctx, log_s(ctx, s), r));
}

} // namespace logex
