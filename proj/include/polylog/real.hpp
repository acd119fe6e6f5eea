#pragma once

#include <string>
#include <utility>

#include <mpfr.h>

#include "polylog/arith.hpp"

namespace pla {

/// Arbitrary-precision real scalar over MPFR. Precision is a property of
/// each value; binary operations work at the wider of the two precisions.
class Real {
public:
    Real() { mpfr_init2(x_, 64); mpfr_set_zero(x_, 1); }
    explicit Real(mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
    Real(const Real& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(x_, 64); mpfr_swap(x_, o.x_); }
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept { mpfr_swap(x_, o.x_); return *this; }
    ~Real() { mpfr_clear(x_); }

    static mpfr_prec_t prec_for_digits(long digits);
    static Real from_long(long v, long digits);
    static Real from_rat(const Rat& q, long digits);
    static Real from_double(double v, long digits);

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

    Real operator+(const Real& o) const;
    Real operator-(const Real& o) const;
    Real operator*(const Real& o) const;
    Real operator/(const Real& o) const;
    Real operator-() const;
    Real& operator+=(const Real& o) { return *this = *this + o; }
    Real& operator-=(const Real& o) { return *this = *this - o; }
    Real& operator*=(const Real& o) { return *this = *this * o; }
    Real& operator/=(const Real& o) { return *this = *this / o; }

    Real abs() const;
    Real sqrt() const;
    Real log() const;  // natural log
    Real exp() const;
    Real pow_si(long e) const;

    int cmp(const Real& o) const { return mpfr_cmp(x_, o.x_); }
    bool operator<(const Real& o) const { return cmp(o) < 0; }
    bool operator>(const Real& o) const { return cmp(o) > 0; }
    bool operator<=(const Real& o) const { return cmp(o) <= 0; }
    bool operator>=(const Real& o) const { return cmp(o) >= 0; }
    bool is_zero() const { return mpfr_zero_p(x_); }
    int sign() const { return mpfr_sgn(x_); }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
    /// Fixed-notation decimal string with `digits` fractional digits.
    std::string to_string(long digits) const;

private:
    mpfr_t x_;
};

/// Complex value as a pair of Reals.
struct Complex {
    Real re, im;
    Real abs() const { return (re * re + im * im).sqrt(); }
};

} // namespace pla
