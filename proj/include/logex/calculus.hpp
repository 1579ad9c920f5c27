#pragma once

#include "logex/series.hpp"

namespace logex {

// lambda_k = (l_0 l_1 ... l_k)^{-1}, the derivative of l_{k+1}
inline monomial log_chain_inverse(const context& ctx, int k) {
    std::vector<coefficient> lp(static_cast<size_t>(k) + 1, ctx.num(-1));
    return monomial::make(ctx, std::move(lp), series());
}

series derive(const context& ctx, const series& s);

// Logarithmic derivative of a monomial: m'/m = sum_k a_k lambda_k + P'.
// Exact and finite.
inline series m_dagger(const context& ctx, const monomial& m) {
    std::vector<term> ts;
    for (size_t k = 0; k < m.log_powers().size(); ++k) {
        if (ctx.is_zero(m.log_powers()[k])) continue;
        ts.push_back({m.log_powers()[k], log_chain_inverse(ctx, static_cast<int>(k))});
    }
    series out = make_series(ctx, std::move(ts));
    if (m.has_exp_part()) out = add(ctx, out, derive(ctx, m.exp_part()));
    return out;
}

inline series derive_term(const context& ctx, const coefficient& c, const monomial& m) {
    return mul_term(ctx, m_dagger(ctx, m), c, m);
}

// Sound cutoff for the derivative: monomials at or below c map strictly
// below this bound (Lemma 2.14 for c != 1, the log-chain estimate for c = 1).
inline monomial derive_cutoff(const context& ctx, const monomial& c) {
    if (c.is_one()) return inverse_m(ctx, monomial::log_atom(ctx, 0, ctx.num(1)));
    series dag = m_dagger(ctx, c);
    return mul_m(ctx, dag.dom(), c);
}

// The transserial derivation with identity x, termwise on the support.
inline series derive(const context& ctx, const series& s) {
    series out;
    if (s.cutoff()) out = cutoff_only(derive_cutoff(ctx, *s.cutoff()));
    for (const auto& t : s.terms()) out = add(ctx, out, derive_term(ctx, t.coeff, t.mono));
    return out;
}

inline series log_derivative(const context& ctx, const series& t) {
    if (!t.has_retained()) {
        if (t.cutoff()) fail(errc::precision_exhausted, "log derivative of an all-cutoff series");
        fail(errc::zero_division, "log derivative of zero");
    }
    return mul(ctx, derive(ctx, t), reciprocal(ctx, t));
}

// Leading antiderivative guess I(m) with d(I(m)) ~ m. For monomials with an
// exponential part, divide by the dominant term of P'; for pure log
// monomials, bump the first exponent != -1 along the substitution chain
// u = l_j (clearing the (-1)-prefix), producing l_{d+1} when every listed
// exponent is -1.
inline term antiderivative_guess(const context& ctx, const monomial& m) {
    if (m.has_exp_part()) {
        series pd = derive(ctx, m.exp_part());
        const term& lead = pd.leading();
        return {ctx.num(1) / lead.coeff, mul_m(ctx, m, inverse_m(ctx, lead.mono))};
    }
    const auto& lp = m.log_powers();
    coefficient minus_one = ctx.num(-1);
    size_t j = 0;
    while (j < lp.size() && ctx.equal(lp[j], minus_one)) ++j;
    coefficient aj = j < lp.size() ? lp[j] : ctx.num(0);
    std::vector<coefficient> out(j + 1, coefficient(0L));
    out[j] = aj + ctx.num(1);
    for (size_t k = j + 1; k < lp.size(); ++k) out.push_back(lp[k]);
    if (static_cast<int>(j) > ctx.max_log_depth)
        fail(errc::depth_budget_exceeded, "integration needs a log beyond the depth budget");
    return {ctx.num(1) / (aj + ctx.num(1)), monomial::make(ctx, std::move(out), series())};
}

// Strongly linear integral: I o (d o I)^{inv}. The correction sum is
// scheduled by leading terms: peel the steepest unresolved monomial, add its
// leading antiderivative, subtract the exact derivative, repeat. The
// remainder's dominant monomial strictly decreases each round, which is the
// termination guarantee of the truncated setting; telescoping inputs finish
// exactly. The result carries no constant term.
inline series integrate(const context& ctx, const series& s) {
    series out;
    if (s.cutoff()) out = cutoff_only(antiderivative_guess(ctx, *s.cutoff()).mono);
    series rem = s;
    int iters = 0;
    while (rem.has_retained()) {
        if (out.cutoff() &&
            cmp_m(ctx, antiderivative_guess(ctx, rem.dom()).mono, *out.cutoff()) !=
                ordering::greater)
            break;
        if (++iters > ctx.max_fixpoint_iters)
            fail(errc::non_convergent, "integration correction did not settle");
        const term& lead = rem.leading();
        term g = antiderivative_guess(ctx, lead.mono);
        coefficient c = lead.coeff * g.coeff;
        out = add(ctx, out, from_term(ctx, c, g.mono));
        series nxt = sub(ctx, rem, derive_term(ctx, c, g.mono));
        if (nxt.has_retained() && cmp_m(ctx, nxt.dom(), rem.dom()) != ordering::less)
            fail(errc::non_convergent, "integration guess failed to cancel the leading term");
        rem = std::move(nxt);
    }
    return out;
}

} // namespace logex
