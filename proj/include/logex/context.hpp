#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "logex/errors.hpp"
#include "logex/scalar.hpp"

namespace logex {

// Precision and shape budgets shared by every kernel operation. Values are
// immutable after construction; operations take the context by const
// reference and never mutate shared state.
struct context {
    int max_terms = 30;         // retained terms per series
    int max_log_depth = 4;      // deepest iterated log l_k
    int max_exp_height = 4;     // tallest exponential tower
    int max_fixpoint_iters = 200;
    scalar_mode mode = scalar_mode::rational;
    unsigned prec_bits = 128;
    flt_t zero_tol;

    context() : zero_tol("1e-30") {
        activate();
        cache_floor();
    }

    context(int terms, int log_depth, int exp_height, scalar_mode m,
            unsigned bits = 128, const std::string& tol = "1e-30")
        : max_terms(terms), max_log_depth(log_depth), max_exp_height(exp_height),
          mode(m), prec_bits(bits), zero_tol(tol) {
        if (terms < 1 || log_depth < 1 || exp_height < 1)
            fail(errc::precondition_violated, "context budgets must be >= 1");
        activate();
        cache_floor();
    }

    // Sets the thread-default mpfr precision from prec_bits. Called on
    // construction; call again after moving a context across threads.
    // Guard digits beyond the nominal precision absorb the cancellation
    // residue of intermediate coefficients, which grow combinatorially with
    // the retained-term budget; without them the residue can straddle the
    // zero tolerance and leave phantom terms.
    void activate() const {
        flt_t::default_precision(working_digits());
    }

    unsigned working_digits() const {
        unsigned guard = static_cast<unsigned>(std::max(40, 3 * max_terms));
        return static_cast<unsigned>(prec_bits * 0.30103) + 2 + guard;
    }

    // Threshold under which a stored coefficient is discarded as arithmetic
    // noise. Deliberately far below zero_tol: genuine series coefficients
    // shrink factorially along deep grids (1/k!-scale), and snapping those
    // at the comparison tolerance feeds amplified errors back through
    // Taylor sums with combinatorially large multipliers.
    const flt_t& retention_floor() const { return term_floor_; }

private:
    flt_t term_floor_;

    void cache_floor() {
        flt_t f = boost::multiprecision::pow(flt_t(10), -static_cast<int>(8 + 2 * max_terms));
        term_floor_ = zero_tol < f ? zero_tol : f;
    }

public:

    static context rational_ctx(int terms = 30) {
        return context(terms, 4, 4, scalar_mode::rational);
    }
    static context bigfloat_ctx(int terms = 30, unsigned bits = 128) {
        return context(terms, 4, 4, scalar_mode::bigfloat, bits);
    }

    // --- coefficient factories in the active scalar mode ---

    coefficient num(long n) const {
        if (mode == scalar_mode::rational) return coefficient(rat_t(n));
        return coefficient(flt_t(n));
    }

    coefficient num(long p, long q) const {
        if (q == 0) fail(errc::zero_division, "zero denominator");
        if (mode == scalar_mode::rational) return coefficient(rat_t(p) / rat_t(q));
        return coefficient(flt_t(p) / flt_t(q));
    }

    // --- tolerance-aware predicates ---

    // Term retention: only arithmetic noise is discarded, so cancellation
    // produces clean zero terms while factorially small true coefficients
    // survive.
    bool is_zero(const coefficient& c) const {
        if (c.is_rational()) return c.rat().is_zero();
        return boost::multiprecision::abs(c.flt()) <= retention_floor();
    }

    // Comparison semantics: values within the context tolerance are
    // reported as zero.
    int sign(const coefficient& c) const {
        if (c.is_rational()) return c.rat().sign();
        if (boost::multiprecision::abs(c.flt()) <= zero_tol) return 0;
        return c.raw_sign();
    }

    int compare(const coefficient& a, const coefficient& b) const { return sign(a - b); }

    bool equal(const coefficient& a, const coefficient& b) const { return compare(a, b) == 0; }
};

// --- partial exp/log on constants ---

inline coefficient log_c(const context& ctx, const coefficient& c) {
    if (ctx.sign(c) <= 0)
        fail(errc::non_positive_argument, "log of non-positive constant");
    if (c.is_rational()) {
        if (c.rat() == 1) return coefficient(rat_t(0));
        fail(errc::exactness_unavailable, "log of a rational constant is not rational");
    }
    return coefficient(flt_t(boost::multiprecision::log(c.flt())));
}

inline coefficient exp_c(const context& ctx, const coefficient& c) {
    if (c.is_rational()) {
        if (c.rat().is_zero()) return coefficient(rat_t(1));
        fail(errc::exactness_unavailable, "exp of a rational constant is not rational");
    }
    (void)ctx;
    return coefficient(flt_t(boost::multiprecision::exp(c.flt())));
}

} // namespace logex
