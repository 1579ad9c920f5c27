#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "logex/conjugacy.hpp"

namespace logex {

inline std::string format_coefficient(const context& ctx, const coefficient& c) {
    if (c.is_rational()) {
        std::ostringstream os;
        os << c.rat();
        return os.str();
    }
    return c.flt().str() + "~" + std::to_string(ctx.prec_bits);
}

namespace detail {

// Exponent rendering: bare integers, parenthesized otherwise, so the result
// reads back through the '^' grammar.
inline std::string format_exponent(const context& ctx, const coefficient& c) {
    long n = 0;
    if (c.integer_value(&n)) return std::to_string(n);
    return "(" + format_coefficient(ctx, c) + ")";
}

} // namespace detail

std::string format_series(const context& ctx, const series& s);

inline std::string format_monomial(const context& ctx, const monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    auto append = [&](const std::string& f) {
        if (!out.empty()) out += " * ";
        out += f;
    };
    for (size_t k = 0; k < m.log_powers().size(); ++k) {
        const coefficient& a = m.log_powers()[k];
        if (ctx.is_zero(a)) continue;
        std::string base = k == 0 ? "x" : (k == 1 ? "log(x)" : "log^" + std::to_string(k) + "(x)");
        if (ctx.equal(a, ctx.num(1)))
            append(base);
        else
            append(base + "^" + detail::format_exponent(ctx, a));
    }
    if (m.has_exp_part()) append("exp(" + format_series(ctx, m.exp_part()) + ")");
    return out;
}

inline std::string format_series(const context& ctx, const series& s) {
    std::string out;
    if (!s.has_retained()) out = "0";
    bool first = true;
    for (const auto& t : s.terms()) {
        coefficient c = t.coeff;
        bool negative = ctx.sign(c) < 0;
        if (first) {
            first = false;
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        coefficient mag = negative ? -c : c;
        if (t.mono.is_one())
            out += format_coefficient(ctx, mag);
        else if (ctx.equal(mag, ctx.num(1)))
            out += format_monomial(ctx, t.mono);
        else
            out += format_coefficient(ctx, mag) + "*" + format_monomial(ctx, t.mono);
    }
    if (s.cutoff()) out += " + O(" + format_monomial(ctx, *s.cutoff()) + ")";
    return out;
}

inline std::string format_ordering(ordering o) {
    switch (o) {
    case ordering::less: return "Less";
    case ordering::greater: return "Greater";
    default: return "Equal";
    }
}

inline std::string format_abel(const context& ctx, const abel_result& r) {
    std::string out;
    out += "V = " + format_series(ctx, r.V) + "\n";
    out += "depth = " + std::to_string(r.depth) + "\n";
    out += "residual = " + format_series(ctx, r.residual) + "\n";
    out += "norm_constant = " + format_coefficient(ctx, r.norm_constant);
    return out;
}

// --- machine-readable form: terms as [coefficient, monomial] pairs ---

inline nlohmann::json mono_to_json(const context& ctx, const monomial& m);

inline nlohmann::json series_to_json(const context& ctx, const series& s) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : s.terms())
        terms.push_back({format_coefficient(ctx, t.coeff), mono_to_json(ctx, t.mono)});
    nlohmann::json j;
    j["terms"] = std::move(terms);
    j["cutoff"] = s.cutoff() ? mono_to_json(ctx, *s.cutoff()) : nlohmann::json();
    return j;
}

inline nlohmann::json mono_to_json(const context& ctx, const monomial& m) {
    nlohmann::json lp = nlohmann::json::array();
    for (const auto& a : m.log_powers()) lp.push_back(format_coefficient(ctx, a));
    nlohmann::json j;
    j["log_powers"] = std::move(lp);
    j["exp_part"] = m.has_exp_part() ? series_to_json(ctx, m.exp_part()) : nlohmann::json();
    return j;
}

inline nlohmann::json abel_to_json(const context& ctx, const abel_result& r) {
    nlohmann::json j;
    j["V"] = series_to_json(ctx, r.V);
    j["depth"] = r.depth;
    j["residual"] = series_to_json(ctx, r.residual);
    j["norm_constant"] = format_coefficient(ctx, r.norm_constant);
    return j;
}

} // namespace logex
