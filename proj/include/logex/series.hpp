#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "logex/monomial.hpp"

namespace logex {

struct term {
    coefficient coeff;
    monomial mono;
};

// Truncated well-based series: finitely many terms in strictly decreasing
// monomial order plus an optional cutoff marker. Terms above the cutoff are
// exact; nothing is asserted at or below it. No cutoff means the series is
// exact.
class series {
public:
    series() = default; // exact zero

    // Takes the terms as given; use make_series unless the list is already
    // strictly decreasing with nonzero coefficients.
    series(std::vector<term> ts, std::optional<monomial> cut)
        : terms_(std::move(ts)), cutoff_(std::move(cut)) {}

    const std::vector<term>& terms() const { return terms_; }
    const std::optional<monomial>& cutoff() const { return cutoff_; }

    bool has_retained() const { return !terms_.empty(); }
    bool is_exact_zero() const { return terms_.empty() && !cutoff_; }

    const term& leading() const {
        if (terms_.empty())
            fail(errc::precondition_violated, "leading term of an empty series");
        return terms_.front();
    }
    const monomial& dom() const { return leading().mono; }

    size_t size() const { return terms_.size(); }

private:
    std::vector<term> terms_;
    std::optional<monomial> cutoff_;
};

// ---------------------------------------------------------------------------
// construction

inline std::optional<monomial> max_cutoff(const context& ctx, const std::optional<monomial>& a,
                                          const std::optional<monomial>& b) {
    if (!a) return b;
    if (!b) return a;
    return cmp_m(ctx, *a, *b) == ordering::less ? b : a;
}

// Cutoff drop and term budget on an already strictly-decreasing term list.
inline series finalize_sorted(const context& ctx, std::vector<term> ts,
                              std::optional<monomial> cut) {
    if (cut)
        while (!ts.empty() && cmp_m(ctx, ts.back().mono, *cut) != ordering::greater)
            ts.pop_back();
    if (static_cast<int>(ts.size()) > ctx.max_terms) {
        cut = max_cutoff(ctx, cut, ts[ctx.max_terms].mono);
        ts.resize(ctx.max_terms);
    }
    return series(std::move(ts), std::move(cut));
}

// Sorts, merges equal monomials, drops zero coefficients and anything at or
// below the cutoff, and enforces the term budget (recording the largest
// dropped monomial as the new cutoff).
inline series make_series(const context& ctx, std::vector<term> ts,
                          std::optional<monomial> cut = std::nullopt) {
    std::erase_if(ts, [&](const term& t) { return ctx.is_zero(t.coeff); });
    std::sort(ts.begin(), ts.end(), [&](const term& u, const term& v) {
        return cmp_m(ctx, u.mono, v.mono) == ordering::greater;
    });
    std::vector<term> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
        if (!out.empty() && cmp_m(ctx, out.back().mono, t.mono) == ordering::equal)
            out.back().coeff = out.back().coeff + t.coeff;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [&](const term& t) { return ctx.is_zero(t.coeff); });
    return finalize_sorted(ctx, std::move(out), std::move(cut));
}

inline series from_term(const context& ctx, const coefficient& c, const monomial& m) {
    if (ctx.is_zero(c)) return series();
    return series({term{c, m}}, std::nullopt);
}

inline series constant_series(const context& ctx, const coefficient& c) {
    return from_term(ctx, c, monomial::one());
}

inline series one_series(const context& ctx) { return constant_series(ctx, ctx.num(1)); }

// The composition/derivation identity x.
inline const monomial& x_monomial() {
    static const monomial xm = [] {
        context boot;
        return monomial::log_atom(boot, 0, coefficient(1L));
    }();
    return xm;
}

inline series x_series(const context& ctx) {
    return from_term(ctx, ctx.num(1), x_monomial());
}

inline series log_atom_series(const context& ctx, int k) {
    return from_term(ctx, ctx.num(1), monomial::log_atom(ctx, k, ctx.num(1)));
}

inline series cutoff_only(const std::optional<monomial>& cut) {
    return series({}, cut);
}

// ---------------------------------------------------------------------------
// ring operations

inline series negate(const context& ctx, const series& s) {
    std::vector<term> ts;
    ts.reserve(s.size());
    for (const auto& t : s.terms()) ts.push_back({-t.coeff, t.mono});
    (void)ctx;
    return series(std::move(ts), s.cutoff());
}

// Linear merge of two sorted term lists.
inline series add(const context& ctx, const series& a, const series& b) {
    const auto& A = a.terms();
    const auto& B = b.terms();
    std::vector<term> out;
    out.reserve(A.size() + B.size());
    size_t i = 0, j = 0;
    while (i < A.size() && j < B.size()) {
        switch (cmp_m(ctx, A[i].mono, B[j].mono)) {
        case ordering::greater: out.push_back(A[i++]); break;
        case ordering::less: out.push_back(B[j++]); break;
        default: {
            coefficient c = A[i].coeff + B[j].coeff;
            if (!ctx.is_zero(c)) out.push_back({std::move(c), A[i].mono});
            ++i;
            ++j;
        }
        }
    }
    for (; i < A.size(); ++i) out.push_back(A[i]);
    for (; j < B.size(); ++j) out.push_back(B[j]);
    return finalize_sorted(ctx, std::move(out), max_cutoff(ctx, a.cutoff(), b.cutoff()));
}

inline series sub(const context& ctx, const series& a, const series& b) {
    return add(ctx, a, negate(ctx, b));
}

inline series mul_coeff(const context& ctx, const series& s, const coefficient& c) {
    if (ctx.is_zero(c)) return series();
    std::vector<term> ts;
    ts.reserve(s.size());
    for (const auto& t : s.terms()) {
        coefficient v = t.coeff * c;
        if (!ctx.is_zero(v)) ts.push_back({std::move(v), t.mono});
    }
    return finalize_sorted(ctx, std::move(ts), s.cutoff());
}

// s * (c m): multiplication by a monomial preserves the term order.
inline series mul_term(const context& ctx, const series& s, const coefficient& c,
                       const monomial& m) {
    if (ctx.is_zero(c)) return series();
    std::vector<term> ts;
    ts.reserve(s.size());
    for (const auto& t : s.terms()) {
        coefficient v = t.coeff * c;
        if (!ctx.is_zero(v)) ts.push_back({std::move(v), mul_m(ctx, t.mono, m)});
    }
    std::optional<monomial> cut;
    if (s.cutoff()) cut = mul_m(ctx, *s.cutoff(), m);
    return finalize_sorted(ctx, std::move(ts), std::move(cut));
}

// Cauchy product, accumulated one sorted row at a time.
inline series mul(const context& ctx, const series& a, const series& b) {
    std::optional<monomial> cut;
    if (a.cutoff() && b.has_retained())
        cut = max_cutoff(ctx, cut, mul_m(ctx, *a.cutoff(), b.dom()));
    if (b.cutoff() && a.has_retained())
        cut = max_cutoff(ctx, cut, mul_m(ctx, a.dom(), *b.cutoff()));
    if (a.cutoff() && b.cutoff())
        cut = max_cutoff(ctx, cut, mul_m(ctx, *a.cutoff(), *b.cutoff()));
    series out = cutoff_only(cut);
    for (const auto& u : a.terms()) {
        std::vector<term> row;
        row.reserve(b.size());
        for (const auto& v : b.terms()) {
            coefficient c = u.coeff * v.coeff;
            if (!ctx.is_zero(c)) row.push_back({std::move(c), mul_m(ctx, u.mono, v.mono)});
        }
        out = add(ctx, out, series(std::move(row), std::nullopt));
    }
    return out;
}

// ---------------------------------------------------------------------------
// order and dominance

// Sign of the first term whose coefficient is decisive at the comparison
// tolerance; retained sub-tolerance terms are reported as zero.
inline int sign_of(const context& ctx, const series& s) {
    for (const auto& t : s.terms()) {
        int sg = ctx.sign(t.coeff);
        if (sg != 0) return sg;
    }
    if (s.cutoff()) fail(errc::precision_exhausted, "sign undecided below cutoff");
    return 0;
}

// Three-valued comparison: nullopt when the retained terms cancel but a
// cutoff keeps the sign undecided.
inline std::optional<ordering> try_compare(const context& ctx, const series& a, const series& b) {
    series d = sub(ctx, a, b);
    for (const auto& t : d.terms()) {
        int sg = ctx.sign(t.coeff);
        if (sg != 0) return sg > 0 ? ordering::greater : ordering::less;
    }
    if (d.cutoff()) return std::nullopt;
    return ordering::equal;
}

inline ordering compare(const context& ctx, const series& a, const series& b) {
    auto r = try_compare(ctx, a, b);
    if (!r) fail(errc::precision_exhausted, "comparison undecided below cutoff");
    return *r;
}

inline bool is_zero_up_to_cutoff(const series& s) { return !s.has_retained(); }

inline dominance dominance_cmp(const context& ctx, const series& a, const series& b) {
    bool az = !a.has_retained(), bz = !b.has_retained();
    if (az && a.cutoff()) fail(errc::precision_exhausted, "dominance of an all-cutoff series");
    if (bz && b.cutoff()) fail(errc::precision_exhausted, "dominance of an all-cutoff series");
    if (az && bz) return dominance::similar;
    if (az) return dominance::smaller;
    if (bz) return dominance::larger;
    switch (cmp_m(ctx, a.dom(), b.dom())) {
    case ordering::less: return dominance::smaller;
    case ordering::greater: return dominance::larger;
    default: return dominance::similar;
    }
}

// s ≻ R and s > 0
inline bool is_positive_infinite(const context& ctx, const series& s) {
    return s.has_retained() && ctx.sign(s.leading().coeff) > 0 &&
           mono_is_large(ctx, s.dom());
}

// Splits into purely large part, constant, and infinitesimal part. A cutoff
// lands on the small part when it is itself infinitesimal; otherwise it
// stays on the large part, signalling that the split is unreliable there.
struct split3_result {
    series large;
    coefficient constant{0L};
    series small;
};

inline split3_result split3(const context& ctx, const series& s) {
    split3_result r;
    std::vector<term> big, little;
    for (const auto& t : s.terms()) {
        if (t.mono.is_one())
            r.constant = r.constant + t.coeff;
        else if (mono_is_large(ctx, t.mono))
            big.push_back(t);
        else
            little.push_back(t);
    }
    std::optional<monomial> big_cut, little_cut;
    if (s.cutoff()) {
        if (mono_is_large(ctx, *s.cutoff()) || s.cutoff()->is_one())
            big_cut = s.cutoff();
        else
            little_cut = s.cutoff();
    }
    r.large = series(std::move(big), std::move(big_cut));
    r.small = series(std::move(little), std::move(little_cut));
    return r;
}

// ---------------------------------------------------------------------------
// expansion engine

// Sums summand_0 + summand_1 + ... where step maps one summand to the next.
// Dominant monomials must strictly decrease; stops once a summand is empty
// or falls at/below the accumulated cutoff.
template <class Step>
series sum_decreasing(const context& ctx, series first, Step step,
                      errc stall_err = errc::non_convergent) {
    series acc;
    series cur = std::move(first);
    int iters = 0;
    while (cur.has_retained()) {
        if (acc.cutoff() && cmp_m(ctx, cur.dom(), *acc.cutoff()) != ordering::greater)
            break;
        if (++iters > ctx.max_fixpoint_iters)
            fail(stall_err, "expansion did not settle within the iteration cap");
        series nxt = step(cur);
        if (nxt.has_retained() && cmp_m(ctx, nxt.dom(), cur.dom()) != ordering::less)
            fail(stall_err, "expansion failed to contract");
        acc = add(ctx, acc, cur);
        cur = std::move(nxt);
    }
    if (!cur.has_retained() && cur.cutoff()) acc = add(ctx, acc, cur);
    return acc;
}

// ---------------------------------------------------------------------------
// multiplicative inverse

inline series reciprocal(const context& ctx, const series& s) {
    if (!s.has_retained()) {
        if (s.cutoff()) fail(errc::precision_exhausted, "reciprocal of an all-cutoff series");
        fail(errc::zero_division, "reciprocal of zero");
    }
    const term& lead = s.leading();
    coefficient inv_c = ctx.num(1) / lead.coeff;
    monomial inv_m = inverse_m(ctx, lead.mono);
    // s = tau (1 + eps); 1/s = tau^{-1} sum (-eps)^k
    series eps = mul_term(ctx, s, inv_c, inv_m);
    eps = sub(ctx, eps, one_series(ctx));
    series geo = sum_decreasing(ctx, one_series(ctx), [&](const series& cur) {
        return negate(ctx, mul(ctx, cur, eps));
    });
    return mul_term(ctx, geo, inv_c, inv_m);
}

inline series divide(const context& ctx, const series& a, const series& b) {
    return mul(ctx, a, reciprocal(ctx, b));
}

// ---------------------------------------------------------------------------
// strongly linear operator engine

using mono_map = std::function<series(const context&, const monomial&)>;

// Applies a strongly linear operator given monomial-wise. The cutoff is
// preserved: images of hidden monomials stay below it for contracting maps.
inline series apply_linear(const context& ctx, const mono_map& phi, const series& s) {
    series out = cutoff_only(s.cutoff());
    for (const auto& t : s.terms()) {
        series img = phi(ctx, t.mono);
        if (img.has_retained() && cmp_m(ctx, img.dom(), t.mono) != ordering::less)
            fail(errc::not_contracting, "operator image not strictly below its argument");
        out = add(ctx, out, mul_coeff(ctx, img, t.coeff));
    }
    return out;
}

// (Id + phi)^{-1}(s) = sum_k (-1)^k phi^[k](s) for a contracting phi
// (Neumann fixed-point inverse). The summand recursion t_{k+1} = -phi(t_k)
// carries the alternating sign.
inline series neumann_invert(const context& ctx, const mono_map& phi, const series& s) {
    return sum_decreasing(ctx, s, [&](const series& cur) {
        return negate(ctx, apply_linear(ctx, phi, cur));
    });
}

// ---------------------------------------------------------------------------
// monomial member/free definitions that need a complete series type

namespace detail {

// First sign of A - B for exact sorted term lists (no allocation).
inline ordering compare_sorted_terms(const context& ctx, const std::vector<term>& A,
                                     const std::vector<term>& B) {
    size_t i = 0, j = 0;
    while (i < A.size() && j < B.size()) {
        switch (cmp_m(ctx, A[i].mono, B[j].mono)) {
        case ordering::greater:
            return ctx.sign(A[i].coeff) > 0 ? ordering::greater : ordering::less;
        case ordering::less:
            return ctx.sign(B[j].coeff) > 0 ? ordering::less : ordering::greater;
        default: {
            int s = ctx.compare(A[i].coeff, B[j].coeff);
            if (s != 0) return s > 0 ? ordering::greater : ordering::less;
            ++i;
            ++j;
        }
        }
    }
    if (i < A.size()) return ctx.sign(A[i].coeff) > 0 ? ordering::greater : ordering::less;
    if (j < B.size()) return ctx.sign(B[j].coeff) > 0 ? ordering::less : ordering::greater;
    return ordering::equal;
}

} // namespace detail

inline const series& monomial::exp_part() const {
    static const series zero;
    return exp_part_ ? *exp_part_ : zero;
}

inline bool monomial::is_single_log(const context& ctx, int* k_out) const {
    if (exp_part_) return false;
    int found = -1;
    for (size_t k = 0; k < log_powers_.size(); ++k) {
        if (ctx.is_zero(log_powers_[k])) continue;
        if (found >= 0) return false;
        found = static_cast<int>(k);
    }
    if (found < 0) return false;
    if (!ctx.equal(log_powers_[found], ctx.num(1))) return false;
    if (k_out) *k_out = found;
    return true;
}

inline monomial monomial::raw_log_atom(int k) {
    monomial m;
    m.log_powers_.assign(static_cast<size_t>(k) + 1, coefficient(0L));
    m.log_powers_[k] = coefficient(1L);
    return m;
}

inline monomial monomial::make(const context& ctx, std::vector<coefficient> log_powers,
                               const series& exp_part) {
    if (exp_part.cutoff())
        fail(errc::precision_exhausted, "exponent series truncated above the infinitesimal range");
    std::vector<term> rest;
    for (const auto& t : exp_part.terms()) {
        int j = -1;
        if (t.mono.is_single_log(ctx, &j) && j >= 1) {
            if (static_cast<size_t>(j) > log_powers.size()) log_powers.resize(j, coefficient(0L));
            log_powers[j - 1] = log_powers[j - 1] + t.coeff;
        } else {
            rest.push_back(t);
        }
    }
    int h = 0;
    for (const auto& t : rest) {
        if (!mono_is_large(ctx, t.mono))
            fail(errc::precondition_violated, "exponent series must be purely large");
        h = std::max(h, t.mono.height() + 1);
    }
    while (!log_powers.empty() && ctx.is_zero(log_powers.back())) log_powers.pop_back();
    // comparisons may transiently need two extra log levels (see cmp_m)
    if (static_cast<int>(log_powers.size()) - 1 > ctx.max_log_depth + 2)
        fail(errc::depth_budget_exceeded, "log depth budget exceeded");
    if (h > ctx.max_exp_height)
        fail(errc::depth_budget_exceeded, "exponential height budget exceeded");
    monomial m;
    m.log_powers_ = std::move(log_powers);
    m.height_ = h;
    if (!rest.empty()) {
        // rest keeps exp_part's strictly decreasing order (filtering only)
        series p(std::move(rest), std::nullopt);
        // precompute log m = sum a_k l_{k+1} + P as one sorted merge; the
        // cache must stay exact, so give the merge budget headroom
        std::vector<term> atoms;
        for (size_t k = 0; k < m.log_powers_.size(); ++k) {
            if (ctx.is_zero(m.log_powers_[k])) continue;
            atoms.push_back({m.log_powers_[k], raw_log_atom(static_cast<int>(k) + 1)});
        }
        context wide = ctx;
        wide.max_terms = ctx.max_terms + static_cast<int>(atoms.size()) + 1;
        series lg = add(wide, series(std::move(atoms), std::nullopt), p);
        m.exp_part_ = std::make_shared<const series>(std::move(p));
        m.log_series_ = std::make_shared<const series>(std::move(lg));
    }
    return m;
}

inline monomial monomial::log_atom(const context& ctx, int k, const coefficient& e) {
    if (k > ctx.max_log_depth)
        fail(errc::depth_budget_exceeded, "log depth budget exceeded");
    std::vector<coefficient> lp(static_cast<size_t>(k) + 1, coefficient(0L));
    lp[k] = e;
    return make(ctx, std::move(lp), series());
}

inline monomial mul_m(const context& ctx, const monomial& a, const monomial& b) {
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    std::vector<coefficient> lp = a.log_powers();
    if (b.log_powers().size() > lp.size()) lp.resize(b.log_powers().size(), coefficient(0L));
    for (size_t k = 0; k < b.log_powers().size(); ++k) lp[k] = lp[k] + b.log_powers()[k];
    series p = add(ctx, a.exp_part(), b.exp_part());
    return monomial::make(ctx, std::move(lp), p);
}

inline monomial inverse_m(const context& ctx, const monomial& m) {
    std::vector<coefficient> lp;
    lp.reserve(m.log_powers().size());
    for (const auto& a : m.log_powers()) lp.push_back(-a);
    return monomial::make(ctx, std::move(lp), negate(ctx, m.exp_part()));
}

inline monomial pow_m(const context& ctx, const monomial& m, const coefficient& r) {
    if (ctx.is_zero(r)) return monomial::one();
    std::vector<coefficient> lp;
    lp.reserve(m.log_powers().size());
    for (const auto& a : m.log_powers()) lp.push_back(a * r);
    return monomial::make(ctx, std::move(lp), mul_coeff(ctx, m.exp_part(), r));
}

// log of a monomial: sum a_k l_{k+1} + P. Exact, purely large (or zero).
inline series log_m(const context& ctx, const monomial& m) {
    if (m.log_series_) {
        if (m.log_depth() + 1 > ctx.max_log_depth + 2)
            fail(errc::depth_budget_exceeded, "log depth budget exceeded");
        return *m.log_series_;
    }
    std::vector<term> atoms;
    for (size_t k = 0; k < m.log_powers().size(); ++k) {
        if (ctx.is_zero(m.log_powers()[k])) continue;
        if (static_cast<int>(k) + 1 > ctx.max_log_depth + 2)
            fail(errc::depth_budget_exceeded, "log depth budget exceeded");
        atoms.push_back({m.log_powers()[k], monomial::raw_log_atom(static_cast<int>(k) + 1)});
    }
    return series(std::move(atoms), std::nullopt);
}

inline ordering cmp_m(const context& ctx, const monomial& a, const monomial& b) {
    if (a.is_pure_log() && b.is_pure_log()) {
        // lexicographic with prevalence on the earliest log level
        size_t n = std::max(a.log_powers().size(), b.log_powers().size());
        for (size_t k = 0; k < n; ++k) {
            int s = ctx.compare(a.log_power(k), b.log_power(k));
            if (s > 0) return ordering::greater;
            if (s < 0) return ordering::less;
        }
        return ordering::equal;
    }
    if (a.exp_part_ == b.exp_part_ || // shared exponent: compare log powers
        (a.log_series_ && b.log_series_ && a.log_series_ == b.log_series_)) {
        size_t n = std::max(a.log_powers().size(), b.log_powers().size());
        for (size_t k = 0; k < n; ++k) {
            int s = ctx.compare(a.log_power(k), b.log_power(k));
            if (s > 0) return ordering::greater;
            if (s < 0) return ordering::less;
        }
        return ordering::equal;
    }
    // compare through the (precomputed) log series
    return detail::compare_sorted_terms(ctx, log_m(ctx, a).terms(), log_m(ctx, b).terms());
}

inline bool mono_is_large(const context& ctx, const monomial& m) {
    if (m.is_one()) return false;
    if (m.is_pure_log()) {
        for (const auto& a : m.log_powers())
            if (!ctx.is_zero(a)) return ctx.sign(a) > 0;
        return false;
    }
    const series& l = *m.log_series_;
    return l.has_retained() && ctx.sign(l.leading().coeff) > 0;
}

// ---------------------------------------------------------------------------
// steepness comparison (Def 2.5): s ≪ t iff log|s| ≺ log|t|

namespace detail {

// Dominant magnitude of log|s|: zero (s ≍ ±1 exactly), constant level, or a
// monomial of the log series.
struct logmag {
    int kind; // 0 zero, 1 constant, 2 monomial
    monomial m;
};

inline logmag log_magnitude(const context& ctx, const series& s) {
    if (!s.has_retained()) {
        if (s.cutoff()) fail(errc::precision_exhausted, "flatness of an all-cutoff series");
        fail(errc::precondition_violated, "flatness comparison with zero");
    }
    const term& lead = s.leading();
    if (!lead.mono.is_one()) {
        series l = log_m(ctx, lead.mono);
        return {2, l.dom()};
    }
    if (!ctx.equal(abs(lead.coeff), ctx.num(1))) return {1, monomial::one()};
    // s = ±(1 + eps): log|s| ~ eps
    series eps = mul_coeff(ctx, s, ctx.num(1) / lead.coeff);
    eps = sub(ctx, eps, one_series(ctx));
    if (!eps.has_retained()) {
        if (eps.cutoff()) fail(errc::precision_exhausted, "flatness undecided below cutoff");
        return {0, monomial::one()};
    }
    return {2, eps.dom()};
}

} // namespace detail

inline flatness flat_cmp(const context& ctx, const series& s, const series& t) {
    detail::logmag ms = detail::log_magnitude(ctx, s);
    detail::logmag mt = detail::log_magnitude(ctx, t);
    auto cls = [&](const detail::logmag& a, const detail::logmag& b) -> dominance {
        if (a.kind == 0 && b.kind == 0) return dominance::similar;
        if (a.kind == 0) return dominance::smaller;
        if (b.kind == 0) return dominance::larger;
        if (a.kind == 1 && b.kind == 1) return dominance::similar;
        if (a.kind == 1) return mono_is_large(ctx, b.m) ? dominance::smaller : dominance::larger;
        if (b.kind == 1) return mono_is_large(ctx, a.m) ? dominance::larger : dominance::smaller;
        switch (cmp_m(ctx, a.m, b.m)) {
        case ordering::less: return dominance::smaller;
        case ordering::greater: return dominance::larger;
        default: return dominance::similar;
        }
    };
    switch (cls(ms, mt)) {
    case dominance::smaller: return flatness::strictly_flatter;
    case dominance::larger: return flatness::strictly_steeper;
    default: return flatness::same_class;
    }
}

inline flatness flat_cmp_mono(const context& ctx, const monomial& a, const monomial& b) {
    return flat_cmp(ctx, from_term(ctx, ctx.num(1), a), from_term(ctx, ctx.num(1), b));
}

} // namespace logex
