#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

#include "logex/errors.hpp"

namespace logex {

using rat_t = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                            boost::multiprecision::et_off>;
using flt_t = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                            boost::multiprecision::et_off>;
using int_t = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                            boost::multiprecision::et_off>;

enum class scalar_mode { rational, bigfloat };

// Element of the ordered coefficient field. Holds either an exact rational
// or an arbitrary-precision float; mixed arithmetic promotes to float.
class coefficient {
public:
    coefficient() : v_(rat_t(0)) {}
    explicit coefficient(rat_t q) : v_(std::move(q)) {}
    explicit coefficient(flt_t f) : v_(std::move(f)) {}
    explicit coefficient(long n) : v_(rat_t(n)) {}

    static coefficient ratio(long num, long den) {
        if (den == 0)
            fail(errc::zero_division, "rational with zero denominator");
        return coefficient(rat_t(num) / rat_t(den));
    }

    bool is_rational() const { return std::holds_alternative<rat_t>(v_); }
    const rat_t& rat() const { return std::get<rat_t>(v_); }
    const flt_t& flt() const { return std::get<flt_t>(v_); }

    flt_t to_float() const {
        return is_rational() ? flt_t(rat()) : flt();
    }

    double to_double() const {
        return is_rational() ? rat().convert_to<double>() : flt().convert_to<double>();
    }

    coefficient operator-() const {
        return is_rational() ? coefficient(rat_t(-rat())) : coefficient(flt_t(-flt()));
    }

    friend coefficient operator+(const coefficient& a, const coefficient& b) {
        if (a.is_rational() && b.is_rational()) return coefficient(rat_t(a.rat() + b.rat()));
        return coefficient(flt_t(a.to_float() + b.to_float()));
    }
    friend coefficient operator-(const coefficient& a, const coefficient& b) {
        if (a.is_rational() && b.is_rational()) return coefficient(rat_t(a.rat() - b.rat()));
        return coefficient(flt_t(a.to_float() - b.to_float()));
    }
    friend coefficient operator*(const coefficient& a, const coefficient& b) {
        if (a.is_rational() && b.is_rational()) return coefficient(rat_t(a.rat() * b.rat()));
        return coefficient(flt_t(a.to_float() * b.to_float()));
    }
    friend coefficient operator/(const coefficient& a, const coefficient& b) {
        if (b.exact_zero())
            fail(errc::zero_division, "coefficient division by zero");
        if (a.is_rational() && b.is_rational()) return coefficient(rat_t(a.rat() / b.rat()));
        return coefficient(flt_t(a.to_float() / b.to_float()));
    }

    bool exact_zero() const {
        return is_rational() ? rat().is_zero() : flt().is_zero();
    }

    // Raw sign, no tolerance applied.
    int raw_sign() const {
        return is_rational() ? rat().sign() : flt().sign();
    }

    // Exact comparison of the stored values (promoting to float when mixed).
    std::strong_ordering raw_compare(const coefficient& b) const {
        if (is_rational() && b.is_rational()) {
            if (rat() < b.rat()) return std::strong_ordering::less;
            if (rat() > b.rat()) return std::strong_ordering::greater;
            return std::strong_ordering::equal;
        }
        flt_t x = to_float(), y = b.to_float();
        if (x < y) return std::strong_ordering::less;
        if (x > y) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // True when the value is an integer; fills n when it fits a long.
    bool integer_value(long* n = nullptr) const {
        if (is_rational()) {
            if (boost::multiprecision::denominator(rat()) != 1) return false;
            int_t num = boost::multiprecision::numerator(rat());
            if (n) {
                if (num < std::numeric_limits<long>::min() || num > std::numeric_limits<long>::max())
                    return false;
                *n = num.convert_to<long>();
            }
            return true;
        }
        flt_t f = flt();
        flt_t r = boost::multiprecision::round(f);
        if (f != r) return false;
        if (n) {
            if (boost::multiprecision::abs(r) > flt_t(1e18)) return false;
            *n = r.convert_to<long>();
        }
        return true;
    }

private:
    std::variant<rat_t, flt_t> v_;
};

inline coefficient abs(const coefficient& c) { return c.raw_sign() < 0 ? -c : c; }

} // namespace logex
