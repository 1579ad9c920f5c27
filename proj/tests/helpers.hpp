#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "logex/eval.hpp"
#include "logex/format.hpp"
#include "logex/logex.hpp"

namespace testutil {

using namespace logex;

// Parse-and-evaluate shorthand for readable fixtures.
inline series S(const context& ctx, const std::string& text) {
    return evaluate_series(ctx, parse(ctx, text));
}

inline coefficient C(const context& ctx, long p, long q = 1) { return ctx.num(p, q); }

// Largest relative coefficient mismatch between retained terms of a and b
// above their common cutoff; 0 when they agree within the zero tolerance.
inline double max_rel_mismatch(const context& ctx, const series& a, const series& b) {
    series d = sub(ctx, a, b);
    double worst = 0;
    for (const auto& t : d.terms()) {
        double scale = 1;
        for (const auto& ta : a.terms())
            if (cmp_m(ctx, ta.mono, t.mono) == ordering::equal) {
                scale = std::max(1.0, std::fabs(ta.coeff.to_double()));
                break;
            }
        worst = std::max(worst, std::fabs(t.coeff.to_double()) / scale);
    }
    return worst;
}

inline bool agree_above_cutoff(const context& ctx, const series& a, const series& b) {
    return !sub(ctx, a, b).has_retained();
}

// ---------------------------------------------------------------------------
// randomized inputs

struct rng {
    std::mt19937 gen;
    explicit rng(unsigned seed) : gen(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
    bool chance(double p) { return std::uniform_real_distribution<>(0, 1)(gen) < p; }
};

inline coefficient rnd_coeff(const context& ctx, rng& r, bool nonzero = true) {
    int p = r.uniform(-9, 9);
    if (nonzero && p == 0) p = 1;
    int q = r.uniform(1, 3);
    return ctx.num(p, q);
}

// Small pure-log monomial with rational exponents of depth <= 2.
inline monomial rnd_log_mono(const context& ctx, rng& r) {
    std::vector<coefficient> lp;
    int depth = r.uniform(0, 2);
    for (int k = 0; k <= depth; ++k) {
        if (r.chance(0.35)) {
            lp.push_back(ctx.num(0));
            continue;
        }
        lp.push_back(ctx.num(r.uniform(-4, 4), r.uniform(1, 2)));
    }
    return monomial::make(ctx, std::move(lp), series());
}

// Occasionally decorates a log monomial with an exponential factor from a
// small purely large pool.
inline monomial rnd_mono(const context& ctx, rng& r, bool allow_exp = true) {
    monomial m = rnd_log_mono(ctx, r);
    if (allow_exp && r.chance(0.25)) {
        int pick = r.uniform(0, 3);
        series p;
        series x = x_series(ctx);
        switch (pick) {
        case 0: p = x; break;
        case 1: p = negate(ctx, x); break;
        case 2: p = mul_coeff(ctx, x, ctx.num(2)); break;
        default: p = negate(ctx, mul(ctx, x, x)); break;
        }
        m = mul_m(ctx, m, monomial::make(ctx, {}, p));
    }
    return m;
}

inline series rnd_series(const context& ctx, rng& r, int terms, bool allow_exp = true) {
    std::vector<term> ts;
    for (int i = 0; i < terms; ++i) ts.push_back({rnd_coeff(ctx, r), rnd_mono(ctx, r, allow_exp)});
    return make_series(ctx, std::move(ts));
}

inline series rnd_nonzero_series(const context& ctx, rng& r, int terms, bool allow_exp = true) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        series s = rnd_series(ctx, r, terms, allow_exp);
        if (s.has_retained()) return s;
    }
    return one_series(ctx);
}

inline series rnd_positive_series(const context& ctx, rng& r, int terms, bool allow_exp = true) {
    series s = rnd_nonzero_series(ctx, r, terms, allow_exp);
    if (ctx.sign(s.leading().coeff) < 0) s = negate(ctx, s);
    return s;
}

// Positive infinite series: c x^k (1 + smaller terms), k >= 1. The monic
// variant pins the head to exactly x, which keeps iterated logs monic and
// rational-mode composition exact for fractional powers.
inline series rnd_pos_infinite(const context& ctx, rng& r, int terms = 3, bool monic = false) {
    series head = from_term(ctx, monic ? ctx.num(1) : ctx.num(r.uniform(1, 3)),
                            monomial::log_atom(ctx, 0, monic ? ctx.num(1) : ctx.num(r.uniform(1, 3))));
    series tail = rnd_series(ctx, r, terms - 1, false);
    series s = add(ctx, head, tail);
    // keep the intended dominant term dominant and positive
    if (!s.has_retained() || cmp_m(ctx, s.dom(), head.dom()) != ordering::equal ||
        !ctx.equal(s.leading().coeff, head.leading().coeff))
        return head;
    return s;
}

// ---------------------------------------------------------------------------
// inversion corpus: series x + delta with delta ≺ x spanning flat, x-class,
// and steep blocks. Entries whose inversion passes through exp/log of a
// nonunit constant carry needs_float.

struct corpus_entry {
    const char* text;
    bool needs_float;
};

inline std::vector<corpus_entry> group_corpus() {
    return {
        {"x + 1", false},
        {"x - 2", false},
        {"x + log(x)", false},
        {"x + 2*log(x) + 3", false},
        {"x + log^2(x)", false},
        {"x + x^(1/2)", false},
        {"x - x^(1/2)", false},
        {"x + x^(1/3) - 2*log(x)", false},
        {"x + x^-1", false},
        {"x + x^-2 + x^-5", false},
        {"x + log(x)*x^-2", false},
        {"x + exp(-x)", false},
        {"x + exp(-x^2)", false},
        {"x + x^3*exp(-2*x)", false},
        {"x + exp(-x) + exp(-x^2)", false},
        {"x + log(x) + exp(-x)", false},
        {"x + 2*log(x) + exp(-3*x)", false},
        {"x - x^(1/2) + 1 - x^-3", false},
        {"x + 1 + exp(-x)", true},
        {"x + x^(1/2) + exp(-x^2)", true},
        {"x + 1 + x^-1 + exp(-x)", true},
        {"x + 5 + exp(-x)*x^2", true},
        {"x + x^(2/3) + log(x)^2*exp(-x)", true},
        {"x - 3 + exp(-x) + exp(-2*x)", true},
    };
}

// ---------------------------------------------------------------------------
// numeric oracle: evaluate monomials/series at a sample point

inline double mono_log_value(const monomial& m, double x);

inline double series_value(const series& s, double x) {
    double acc = 0;
    for (const auto& t : s.terms()) acc += t.coeff.to_double() * std::exp(mono_log_value(t.mono, x));
    return acc;
}

inline double mono_log_value(const monomial& m, double x) {
    double acc = 0;
    double lk = x;
    for (size_t k = 0; k < m.log_powers().size(); ++k) {
        acc += m.log_powers()[k].to_double() * std::log(lk);
        lk = std::log(lk);
    }
    if (m.has_exp_part()) acc += series_value(m.exp_part(), x);
    return acc;
}

} // namespace testutil
