#include "polylog/real.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace pla {

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
}

mpfr_prec_t Real::prec_for_digits(long digits) {
    if (digits < 1) digits = 1;
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 16;
}

Real Real::from_long(long v, long digits) {
    Real r(prec_for_digits(digits));
    mpfr_set_si(r.x_, v, MPFR_RNDN);
    return r;
}

Real Real::from_rat(const Rat& q, long digits) {
    Real r(prec_for_digits(digits));
    mpfr_set_q(r.x_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real Real::from_double(double v, long digits) {
    Real r(prec_for_digits(digits));
    mpfr_set_d(r.x_, v, MPFR_RNDN);
    return r;
}

namespace {
mpfr_prec_t wider(const Real& a, const Real& b) {
    return std::max(a.prec(), b.prec());
}
} // namespace

#define PLA_BINOP(name, fn)                                   \
    Real Real::operator name(const Real& o) const {           \
        Real r(wider(*this, o));                              \
        fn(r.raw(), raw(), o.raw(), MPFR_RNDN);               \
        return r;                                             \
    }

PLA_BINOP(+, mpfr_add)
PLA_BINOP(-, mpfr_sub)
PLA_BINOP(*, mpfr_mul)
PLA_BINOP(/, mpfr_div)
#undef PLA_BINOP

Real Real::operator-() const {
    Real r(prec());
    mpfr_neg(r.raw(), raw(), MPFR_RNDN);
    return r;
}

Real Real::abs() const {
    Real r(prec());
    mpfr_abs(r.raw(), raw(), MPFR_RNDN);
    return r;
}

Real Real::sqrt() const {
    Real r(prec());
    mpfr_sqrt(r.raw(), raw(), MPFR_RNDN);
    return r;
}

Real Real::log() const {
    Real r(prec());
    mpfr_log(r.raw(), raw(), MPFR_RNDN);
    return r;
}

Real Real::exp() const {
    Real r(prec());
    mpfr_exp(r.raw(), raw(), MPFR_RNDN);
    return r;
}

Real Real::pow_si(long e) const {
    Real r(prec());
    mpfr_pow_si(r.raw(), raw(), e, MPFR_RNDN);
    return r;
}

std::string Real::to_string(long digits) const {
    if (digits < 1) digits = 1;
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%ldRf", digits);
    long bufsize = digits + 64;
    std::vector<char> buf(static_cast<size_t>(bufsize));
    mpfr_snprintf(buf.data(), static_cast<size_t>(bufsize), fmt, x_);
    return std::string(buf.data());
}

} // namespace pla
