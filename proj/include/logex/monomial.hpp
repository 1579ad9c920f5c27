#pragma once

#include <memory>
#include <vector>

#include "logex/context.hpp"

namespace logex {

class series;

enum class ordering { less, equal, greater };
enum class dominance { smaller, similar, larger };                      // ≺ ≍ ≻
enum class flatness { strictly_flatter, same_class, strictly_steeper }; // ≪ ≍-class ≫

// Canonical log-exp transmonomial  prod_k l_k^{a_k} * e^P  where l_0 = x,
// l_k is the k-fold log of x and P is a purely large, exact series whose
// terms carry no bare l_j factor (those are absorbed into the log powers).
// Immutable; copies share the exponent series. Monomials with an exponential
// part precompute their log series, which drives every comparison.
class monomial {
public:
    monomial() = default; // the unit monomial 1

    // Canonicalizing factory: absorbs single-log terms of the exponent,
    // trims trailing zero log powers, recomputes the height and enforces
    // the depth/height budgets.
    static monomial make(const context& ctx, std::vector<coefficient> log_powers,
                         const series& exp_part);

    // l_k^e
    static monomial log_atom(const context& ctx, int k, const coefficient& e);

    static const monomial& one() {
        static const monomial unit;
        return unit;
    }

    bool is_one() const { return log_powers_.empty() && !exp_part_; }
    bool is_pure_log() const { return !exp_part_; }
    bool has_exp_part() const { return static_cast<bool>(exp_part_); }
    const series& exp_part() const; // defined with series
    const std::vector<coefficient>& log_powers() const { return log_powers_; }
    int height() const { return height_; }
    int log_depth() const { return static_cast<int>(log_powers_.size()) - 1; }

    coefficient log_power(size_t k) const {
        return k < log_powers_.size() ? log_powers_[k] : coefficient(0L);
    }

    // True when the monomial is exactly l_k (single log, exponent 1).
    bool is_single_log(const context& ctx, int* k_out = nullptr) const;

private:
    static monomial raw_log_atom(int k); // unchecked l_k, for internal logs

    std::vector<coefficient> log_powers_;
    std::shared_ptr<const series> exp_part_;   // purely large, exact; null = 0
    std::shared_ptr<const series> log_series_; // cached log, null for pure logs
    int height_ = 0;

    friend series log_m(const context& ctx, const monomial& m);
    friend ordering cmp_m(const context& ctx, const monomial& a, const monomial& b);
    friend bool mono_is_large(const context& ctx, const monomial& m);
};

// Group operations and the total order (definitions follow series).
monomial mul_m(const context& ctx, const monomial& a, const monomial& b);
monomial inverse_m(const context& ctx, const monomial& m);
monomial pow_m(const context& ctx, const monomial& m, const coefficient& r);
ordering cmp_m(const context& ctx, const monomial& a, const monomial& b);
series log_m(const context& ctx, const monomial& m);
bool mono_is_large(const context& ctx, const monomial& m); // m ≻ 1
flatness flat_cmp(const context& ctx, const series& s, const series& t);
flatness flat_cmp_mono(const context& ctx, const monomial& a, const monomial& b);

inline ordering flip(ordering o) {
    if (o == ordering::less) return ordering::greater;
    if (o == ordering::greater) return ordering::less;
    return ordering::equal;
}

} // namespace logex
