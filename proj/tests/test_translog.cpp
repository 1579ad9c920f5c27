#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace logex;
using namespace testutil;

TEST_CASE("log examples") {
    context ctx = context::rational_ctx();
    CHECK(agree_above_cutoff(ctx, log_s(ctx, S(ctx, "x^2")), S(ctx, "2*log(x)")));
    // mercator series for log(1 + 1/x)
    series l = log_s(ctx, S(ctx, "1 + x^-1"));
    series expect = S(ctx, "x^-1 - 1/2*x^-2 + 1/3*x^-3 - 1/4*x^-4");
    series d = sub(ctx, l, expect);
    CHECK((!d.has_retained() ||
           cmp_m(ctx, d.dom(), S(ctx, "x^-4").dom()) == ordering::less));
    // three-part decomposition needs log 2: float mode
    context fx = context::bigfloat_ctx();
    series l2 = log_s(fx, S(fx, "2*x"));
    REQUIRE(l2.size() == 2);
    CHECK(cmp_m(fx, l2.dom(), S(fx, "log(x)").dom()) == ordering::equal);
    CHECK(std::fabs(l2.terms()[1].coeff.to_double() - 0.6931471805599453) < 1e-15);
    // and is unavailable in rational mode
    CHECK_THROWS_AS(log_s(ctx, S(ctx, "2*x")), kernel_error);
    CHECK_THROWS_AS(log_s(ctx, S(ctx, "-x")), kernel_error);
    CHECK_THROWS_AS(log_s(ctx, series()), kernel_error);
}

TEST_CASE("exp examples") {
    context ctx = context::rational_ctx();
    CHECK(agree_above_cutoff(ctx, exp_s(ctx, series()), one_series(ctx)));
    CHECK(agree_above_cutoff(ctx, exp_s(ctx, S(ctx, "log(x)")), S(ctx, "x")));
    series e = exp_s(ctx, S(ctx, "x^-1"));
    series expect = S(ctx, "1 + x^-1 + 1/2*x^-2 + 1/6*x^-3");
    series d = sub(ctx, e, expect);
    CHECK((!d.has_retained() ||
           cmp_m(ctx, d.dom(), S(ctx, "x^-3").dom()) == ordering::less));
    // purely large exponent becomes a monomial
    series m = exp_s(ctx, S(ctx, "x^2 + x"));
    REQUIRE(m.size() == 1);
    CHECK(m.dom().height() == 1);
}

TEST_CASE("powers") {
    context ctx = context::rational_ctx();
    CHECK(agree_above_cutoff(ctx, pow_s(ctx, S(ctx, "x^2"), ctx.num(1, 2)), S(ctx, "x")));
    CHECK(agree_above_cutoff(ctx, pow_s(ctx, S(ctx, "x + 7 - x^-1"), ctx.num(0)),
                             one_series(ctx)));
    series root = pow_s(ctx, S(ctx, "x + 1"), ctx.num(1, 2));
    series back = mul(ctx, root, root);
    CHECK(agree_above_cutoff(ctx, back, S(ctx, "x + 1")));
    series expect = S(ctx, "x^(1/2) + 1/2*x^(-1/2) - 1/8*x^(-3/2)");
    series d = sub(ctx, root, expect);
    CHECK((!d.has_retained() ||
           cmp_m(ctx, d.dom(), S(ctx, "x^(-3/2)").dom()) == ordering::less));
    // integer powers stay exact for non-monic series
    CHECK(agree_above_cutoff(ctx, pow_s(ctx, S(ctx, "2*x"), ctx.num(2)), S(ctx, "4*x^2")));
    CHECK(agree_above_cutoff(ctx, pow_s(ctx, S(ctx, "x + 1"), ctx.num(3)),
                             S(ctx, "x^3 + 3*x^2 + 3*x + 1")));
    series rec = pow_s(ctx, S(ctx, "x + 1"), ctx.num(-1));
    CHECK(agree_above_cutoff(ctx, rec, reciprocal(ctx, S(ctx, "x + 1"))));
}

TEST_CASE("log is a strictly increasing morphism") {
    context ctx = context::rational_ctx(16);
    rng r(31);
    int tested = 0;
    for (int i = 0; i < 200 && tested < 100; ++i) {
        series a = rnd_positive_series(ctx, r, 3);
        series b = rnd_positive_series(ctx, r, 3);
        // keep the leading coefficients at 1 so rational logs stay exact
        a = mul_coeff(ctx, a, ctx.num(1) / a.leading().coeff);
        b = mul_coeff(ctx, b, ctx.num(1) / b.leading().coeff);
        ++tested;
        series lhs = log_s(ctx, mul(ctx, a, b));
        series rhs = add(ctx, log_s(ctx, a), log_s(ctx, b));
        CHECK(agree_above_cutoff(ctx, lhs, rhs));
        auto ord = try_compare(ctx, a, b);
        auto lord = try_compare(ctx, log_s(ctx, a), log_s(ctx, b));
        if (ord && lord) CHECK(*ord == *lord);
        // log s <= s - 1
        auto bound = try_compare(ctx, log_s(ctx, a), sub(ctx, a, one_series(ctx)));
        if (bound) CHECK(*bound != ordering::greater);
    }
}

TEST_CASE("round trips between log and exp") {
    context ctx = context::rational_ctx(16);
    rng r(37);
    for (int i = 0; i < 100; ++i) {
        series a = rnd_positive_series(ctx, r, 3);
        a = mul_coeff(ctx, a, ctx.num(1) / a.leading().coeff);
        CHECK(agree_above_cutoff(ctx, exp_s(ctx, log_s(ctx, a)), a));
    }
    for (int i = 0; i < 100; ++i) {
        // small arguments stay inside the exp domain in rational mode
        series eps = rnd_series(ctx, r, 3);
        std::vector<term> small;
        for (const auto& t : eps.terms())
            if (!t.mono.is_one() && !mono_is_large(ctx, t.mono)) small.push_back(t);
        series e = make_series(ctx, small);
        CHECK(agree_above_cutoff(ctx, log_s(ctx, exp_s(ctx, e)), e));
    }
}

TEST_CASE("log of a positive infinite series is strictly flatter") {
    context ctx = context::rational_ctx();
    rng r(41);
    for (int i = 0; i < 60; ++i) {
        series a = rnd_pos_infinite(ctx, r);
        a = mul_coeff(ctx, a, ctx.num(1) / a.leading().coeff);
        CHECK(flat_cmp(ctx, log_s(ctx, a), a) == flatness::strictly_flatter);
        // log of a monomial is purely large
        series lm = log_m(ctx, a.dom());
        for (const auto& t : lm.terms()) CHECK(mono_is_large(ctx, t.mono));
    }
}

TEST_CASE("flatness characterization through powers") {
    context ctx = context::rational_ctx();
    // x ≪ e^x: every power x^r stays below e^x
    series ex = S(ctx, "exp(x)");
    for (long rr : {1L, 5L, 50L}) {
        series p = pow_s(ctx, S(ctx, "x"), ctx.num(rr));
        CHECK(compare(ctx, p, ex) == ordering::less);
    }
    // log x ≪ x likewise
    for (long rr : {1L, 7L}) {
        series p = pow_s(ctx, S(ctx, "log(x)"), ctx.num(rr));
        CHECK(compare(ctx, p, S(ctx, "x")) == ordering::less);
    }
    // but x is not strictly flatter than x^2: x^3 exceeds x^2
    CHECK(compare(ctx, pow_s(ctx, S(ctx, "x"), ctx.num(3)), S(ctx, "x^2")) ==
          ordering::greater);
}

TEST_CASE("exp budget violations raise rather than truncate") {
    context ctx(30, 4, 1, scalar_mode::rational);
    CHECK_THROWS_AS(exp_s(ctx, S(ctx, "exp(x)")), kernel_error);
    // a truncated purely large argument is refused
    context cx = context::rational_ctx();
    series bad = add(cx, S(cx, "x^2"), cutoff_only(S(cx, "x^(1/2)").dom()));
    CHECK_THROWS_AS(exp_s(cx, bad), kernel_error);
}
