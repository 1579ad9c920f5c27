#pragma once

#include "logex/compose.hpp"

namespace logex {

struct steep_block {
    monomial witness; // x itself for the x-class, a member monomial otherwise
    series part;
};

// Blocks of eps grouped by the steepness class of their monomials, flattest
// first. The x-class gathers everything flatter-or-equal to x.
struct steepness_decomposition {
    std::vector<steep_block> blocks;
};

inline steepness_decomposition steep_decompose(const context& ctx, const series& eps) {
    steepness_decomposition dec;
    if (!eps.has_retained()) return dec;
    if (dominance_cmp(ctx, eps, x_series(ctx)) != dominance::smaller)
        fail(errc::precondition_violated, "steepness decomposition requires eps ≺ x");
    monomial xm = monomial::log_atom(ctx, 0, ctx.num(1));
    std::vector<std::vector<term>> groups;
    std::vector<monomial> witnesses;
    for (const auto& t : eps.terms()) {
        if (flat_cmp_mono(ctx, t.mono, xm) != flatness::strictly_steeper) {
            // x-class
            size_t i = 0;
            for (; i < witnesses.size(); ++i)
                if (witnesses[i].is_single_log(ctx) && witnesses[i].log_depth() == 0) break;
            if (i == witnesses.size()) {
                witnesses.push_back(xm);
                groups.emplace_back();
            }
            groups[i].push_back(t);
            continue;
        }
        size_t i = 0;
        for (; i < witnesses.size(); ++i) {
            if (witnesses[i].is_single_log(ctx) && witnesses[i].log_depth() == 0) continue;
            if (flat_cmp_mono(ctx, t.mono, witnesses[i]) == flatness::same_class) break;
        }
        if (i == witnesses.size()) {
            witnesses.push_back(t.mono);
            groups.emplace_back();
        }
        groups[i].push_back(t);
    }
    for (size_t i = 0; i < groups.size(); ++i)
        dec.blocks.push_back({witnesses[i], make_series(ctx, groups[i], eps.cutoff())});
    std::sort(dec.blocks.begin(), dec.blocks.end(), [&](const steep_block& a, const steep_block& b) {
        return flat_cmp_mono(ctx, a.witness, b.witness) == flatness::strictly_flatter;
    });
    return dec;
}

// Inverse of x + iota for a single steepness band (Prop 3.9):
// (x + iota)^{inv} = sum_i (-1)^i phi^[i](x) with phi = o_{x+iota} - Id,
// evaluated through Taylor expansions at (x, iota).
inline series invert_block(const context& ctx, const series& f) {
    series eta = sub(ctx, f, x_series(ctx));
    if (!eta.has_retained()) return add(ctx, x_series(ctx), cutoff_only(eta.cutoff()));
    return sum_decreasing(ctx, x_series(ctx), [&](const series& cur) {
        return negate(ctx, taylor_tail(ctx, cur, eta));
    });
}

// Naive contraction oracle: the inverse of x + eps is the fixed point of
// g -> x - eps o g. Kept independent of the class-peeling route.
inline series oracle_inverse(const context& ctx, const series& f) {
    series eps = sub(ctx, f, x_series(ctx));
    if (!eps.has_retained()) return add(ctx, x_series(ctx), cutoff_only(eps.cutoff()));
    if (dominance_cmp(ctx, eps, x_series(ctx)) != dominance::smaller)
        fail(errc::precondition_violated, "oracle inverse requires f = x + eps with eps ≺ x");
    series g = x_series(ctx);
    std::optional<monomial> last_gap;
    for (int i = 0; i <= ctx.max_fixpoint_iters; ++i) {
        series nxt = sub(ctx, x_series(ctx), compose_auto(ctx, eps, g));
        series gap = sub(ctx, nxt, g);
        if (!gap.has_retained()) {
            if (gap.cutoff()) nxt = add(ctx, nxt, cutoff_only(gap.cutoff()));
            return nxt;
        }
        if (last_gap && cmp_m(ctx, gap.dom(), *last_gap) != ordering::less)
            fail(errc::non_convergent, "inverse iteration stalled");
        last_gap = gap.dom();
        g = std::move(nxt);
    }
    fail(errc::non_convergent, "inverse iteration hit the cap");
}

namespace detail {

// Peels the flattest steepness class of h - x per round (the finite case of
// the transfinite left-trailing composition).
inline series peel_inverse(const context& ctx, const series& h0) {
    series g = x_series(ctx);
    series h = h0;
    std::optional<monomial> prev_witness;
    size_t initial_blocks = steep_decompose(ctx, sub(ctx, h0, x_series(ctx))).blocks.size();
    for (size_t round = 0; round <= initial_blocks + 2; ++round) {
        series d = sub(ctx, h, x_series(ctx));
        if (!d.has_retained()) {
            if (d.cutoff()) g = add(ctx, g, cutoff_only(d.cutoff()));
            return g;
        }
        steepness_decomposition dec = steep_decompose(ctx, d);
        const steep_block& flattest = dec.blocks.front();
        if (prev_witness &&
            flat_cmp_mono(ctx, flattest.witness, *prev_witness) != flatness::strictly_steeper)
            fail(errc::non_convergent, "peeling failed to remove the flattest class");
        prev_witness = flattest.witness;
        series b = invert_block(ctx, add(ctx, x_series(ctx), flattest.part));
        g = compose_auto(ctx, b, g);
        h = compose_auto(ctx, b, h);
    }
    fail(errc::non_convergent, "class count exceeded during peeling");
}

} // namespace detail

// Compositional inverse. Series in the group G = {x + delta : delta ≺ x}
// peel directly; everything else is reduced into G first by conjugating or
// composing with logs and exponentials, chosen by the steepness of f
// relative to x, and unwound afterwards.
inline series comp_inverse(const context& ctx, const series& f) {
    if (is_identity_series(ctx, f)) return f;
    if (!is_positive_infinite(ctx, f))
        fail(errc::not_positive_infinite, "compositional inverse needs f ≻ R, f > 0");
    enum class red { left_log, right_exp, two_sided };
    std::vector<red> steps;
    series h = f;
    series x = x_series(ctx);
    series ex = exp_s(ctx, x);
    series lg = log_atom_series(ctx, 1);
    int guard = ctx.max_exp_height + ctx.max_log_depth + 4;
    while (true) {
        series d = sub(ctx, h, x);
        if (!d.has_retained() || dominance_cmp(ctx, d, x) == dominance::smaller) break;
        if (static_cast<int>(steps.size()) >= guard)
            fail(errc::non_convergent, "could not reduce into the group of x + o(x)");
        switch (flat_cmp(ctx, h, x)) {
        case flatness::strictly_steeper:
            h = log_s(ctx, h);
            steps.push_back(red::left_log);
            break;
        case flatness::strictly_flatter:
            h = compose(ctx, h, ex);
            steps.push_back(red::right_exp);
            break;
        default:
            h = log_s(ctx, compose(ctx, h, ex));
            steps.push_back(red::two_sided);
            break;
        }
    }
    series g = detail::peel_inverse(ctx, h);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        switch (*it) {
        case red::left_log: g = compose_auto(ctx, g, lg); break;
        case red::right_exp: g = exp_s(ctx, g); break;
        case red::two_sided: g = exp_s(ctx, compose_auto(ctx, g, lg)); break;
        }
    }
    return g;
}

} // namespace logex
