#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace logex;
using namespace testutil;

TEST_CASE("structural composition examples") {
    context ctx = context::rational_ctx();
    CHECK(agree_above_cutoff(ctx, compose(ctx, S(ctx, "x^2"), S(ctx, "x + 1")),
                             S(ctx, "x^2 + 2*x + 1")));
    // commutes with log
    CHECK(agree_above_cutoff(ctx, compose(ctx, S(ctx, "log(x)"), S(ctx, "exp(x)")), S(ctx, "x")));
    CHECK(agree_above_cutoff(ctx, compose(ctx, S(ctx, "log^2(x)"), S(ctx, "exp(exp(x))")),
                             S(ctx, "x")));
    // geometric-series oracle for x^-1 o (x+1) = 1/(x+1)
    series c = compose(ctx, S(ctx, "x^-1"), S(ctx, "x + 1"));
    CHECK(agree_above_cutoff(ctx, c, reciprocal(ctx, S(ctx, "x + 1"))));
    // identities
    series f = S(ctx, "x^2 - 3*log(x) + x^-1");
    CHECK(agree_above_cutoff(ctx, compose(ctx, f, x_series(ctx)), f));
    CHECK(agree_above_cutoff(ctx, compose(ctx, x_series(ctx), f), f));
    CHECK_THROWS_AS(compose(ctx, f, S(ctx, "x^-1")), kernel_error);
    CHECK_THROWS_AS(compose(ctx, f, S(ctx, "5")), kernel_error);
    CHECK_THROWS_AS(compose(ctx, f, S(ctx, "-x")), kernel_error);
}

TEST_CASE("composition with steep and flat arguments") {
    context ctx = context::rational_ctx();
    // exp monomial composed with a polynomial
    series e = compose(ctx, S(ctx, "exp(x)"), S(ctx, "x^2 + x"));
    CHECK(agree_above_cutoff(ctx, e, S(ctx, "exp(x^2 + x)")));
    // composition with log(x): x^2 o log = log(x)^2
    CHECK(agree_above_cutoff(ctx, compose(ctx, S(ctx, "x^2"), S(ctx, "log(x)")),
                             S(ctx, "log(x)^2")));
    // e^-x o log = x^-1
    CHECK(agree_above_cutoff(ctx, compose(ctx, S(ctx, "exp(-x)"), S(ctx, "log(x)")),
                             S(ctx, "x^-1")));
}

TEST_CASE("taylor composition examples") {
    context ctx = context::rational_ctx();
    series one = one_series(ctx);
    // polynomial Taylor expansion is exact
    CHECK(agree_above_cutoff(ctx, taylor_compose(ctx, S(ctx, "x^2"), x_series(ctx), one),
                             S(ctx, "x^2 + 2*x + 1")));
    // zero perturbation degenerates to composition
    series f = S(ctx, "x^3 + x^-2");
    series s = S(ctx, "x + x^-1");
    CHECK(agree_above_cutoff(ctx, taylor_compose(ctx, f, s, series()), compose(ctx, f, s)));
    // agreement with the structural route on a perturbed argument
    series delta = S(ctx, "x^-1 - x^-3");
    series viat = taylor_compose(ctx, f, x_series(ctx), delta);
    series direct = compose(ctx, f, add(ctx, x_series(ctx), delta));
    CHECK(agree_above_cutoff(ctx, viat, direct));
    // gauge violation is rejected: delta comparable to s
    CHECK_THROWS_AS(taylor_compose(ctx, S(ctx, "exp(x)"), x_series(ctx), S(ctx, "x - 1")),
                    kernel_error);
}

TEST_CASE("morphism laws at random arguments") {
    context ctx = context::rational_ctx(16);
    rng r(51);
    for (int i = 0; i < 40; ++i) {
        series f = rnd_series(ctx, r, 2, false), g = rnd_series(ctx, r, 2, false);
        series s = rnd_pos_infinite(ctx, r, 3, true);
        series fs = compose(ctx, f, s), gs = compose(ctx, g, s);
        CHECK(agree_above_cutoff(ctx, compose(ctx, add(ctx, f, g), s), add(ctx, fs, gs)));
        CHECK(agree_above_cutoff(ctx, compose(ctx, mul(ctx, f, g), s), mul(ctx, fs, gs)));
    }
    // log_s(f) o s = log_s(f o s) for positive f
    for (int i = 0; i < 25; ++i) {
        series f = rnd_positive_series(ctx, r, 2, false);
        f = mul_coeff(ctx, f, ctx.num(1) / f.leading().coeff);
        series s = rnd_pos_infinite(ctx, r, 3, true);
        series lhs = compose(ctx, log_s(ctx, f), s);
        series rhs = log_s(ctx, compose(ctx, f, s));
        CHECK(agree_above_cutoff(ctx, lhs, rhs));
    }
}

TEST_CASE("associativity of composition") {
    context ctx = context::rational_ctx(16);
    rng r(53);
    for (int i = 0; i < 30; ++i) {
        series f = rnd_series(ctx, r, 2, false);
        series s = rnd_pos_infinite(ctx, r, 2, true);
        series t = rnd_pos_infinite(ctx, r, 2, true);
        series lhs = compose(ctx, f, compose(ctx, s, t));
        series rhs = compose(ctx, compose(ctx, f, s), t);
        CHECK(agree_above_cutoff(ctx, lhs, rhs));
    }
}

TEST_CASE("chain rule") {
    context ctx = context::rational_ctx(16);
    rng r(57);
    for (int i = 0; i < 100; ++i) {
        series f = rnd_series(ctx, r, 2, false);
        series s = rnd_pos_infinite(ctx, r, 2, true);
        series lhs = derive(ctx, compose(ctx, f, s));
        series rhs = mul(ctx, derive(ctx, s), compose(ctx, derive(ctx, f), s));
        CHECK(agree_above_cutoff(ctx, lhs, rhs));
    }
}

TEST_CASE("taylor agrees with structural composition whenever configured") {
    context ctx = context::rational_ctx(16);
    rng r(59);
    int done = 0;
    for (int i = 0; i < 200 && done < 30; ++i) {
        series f = rnd_series(ctx, r, 2, false);
        series s = rnd_pos_infinite(ctx, r, 2, true);
        // small perturbations of s
        series delta = mul(ctx, s, S(ctx, "x^-2"));
        if (!taylor_configured(ctx, f, s, delta)) continue;
        ++done;
        series viat = taylor_compose(ctx, f, s, delta);
        series direct = compose(ctx, f, add(ctx, s, delta));
        CHECK(agree_above_cutoff(ctx, viat, direct));
    }
    CHECK(done >= 30);
}

TEST_CASE("monotonicity in the argument") {
    context ctx = context::rational_ctx(16);
    rng r(61);
    for (int i = 0; i < 40; ++i) {
        series f = rnd_series(ctx, r, 2, false);
        if (!f.has_retained()) continue;
        series fp = derive(ctx, f);
        if (!fp.has_retained() || ctx.sign(fp.leading().coeff) <= 0) continue;
        series s = rnd_pos_infinite(ctx, r, 2, true);
        series t = add(ctx, s, one_series(ctx)); // s < t
        auto o = try_compare(ctx, compose(ctx, f, s), compose(ctx, f, t));
        if (o) CHECK(*o == ordering::less);
    }
}

TEST_CASE("difference of composites follows the dominant term") {
    context ctx = context::rational_ctx(16);
    // f o t - f o s ~ tau_f o t - tau_f o s on samples
    series f = S(ctx, "x^2 + 3*x + log(x)");
    series tau = S(ctx, "x^2");
    series s = S(ctx, "x + 1"), t = S(ctx, "x + 2");
    series lhs = sub(ctx, compose(ctx, f, t), compose(ctx, f, s));
    series rhs = sub(ctx, compose(ctx, tau, t), compose(ctx, tau, s));
    series d = sub(ctx, lhs, rhs);
    REQUIRE(lhs.has_retained());
    CHECK((!d.has_retained() || dominance_cmp(ctx, d, lhs) == dominance::smaller));
}

TEST_CASE("flatness of composition on a monomial corpus") {
    // every retained monomial of m o s is in the class of the dominant one
    // or bounded by a support monomial of s
    // float mode: the composites involve e^-1, log 2 and friends
    context ctx = context::bigfloat_ctx();
    std::vector<std::string> monos = {"x^2", "log(x)", "exp(x)", "exp(-x)", "x^(1/2)"};
    std::vector<std::string> args = {"x + 1", "x + log(x)", "2*x + x^-1"};
    for (const auto& mt : monos) {
        for (const auto& at : args) {
            series m = S(ctx, mt), s = S(ctx, at);
            series c = compose(ctx, m, s);
            REQUIRE(c.has_retained());
            for (const auto& t : c.terms()) {
                bool same = flat_cmp_mono(ctx, t.mono, c.dom()) == flatness::same_class;
                bool below = false;
                for (const auto& u : s.terms())
                    below = below ||
                            flat_cmp_mono(ctx, t.mono, u.mono) != flatness::strictly_steeper;
                CHECK((same || below));
            }
        }
    }
}

TEST_CASE("float-mode composition handles exponential monomials and translations") {
    context ctx = context::bigfloat_ctx(16);
    rng r(67);
    for (int i = 0; i < 25; ++i) {
        series f = rnd_series(ctx, r, 2, true);
        series s = add(ctx, rnd_pos_infinite(ctx, r, 2), constant_series(ctx, rnd_coeff(ctx, r)));
        if (!is_positive_infinite(ctx, s)) continue;
        series fs = compose(ctx, f, s);
        series gs = compose(ctx, negate(ctx, f), s);
        CHECK(max_rel_mismatch(ctx, add(ctx, fs, gs), series()) < 1e-25);
        // chain rule in float mode
        series lhs = derive(ctx, fs);
        series rhs = mul(ctx, derive(ctx, s), compose(ctx, derive(ctx, f), s));
        CHECK(max_rel_mismatch(ctx, lhs, rhs) < 1e-25);
    }
}
