#pragma once

#include <string>
#include <vector>

#include "polylog/ratpoly.hpp"
#include "polylog/real.hpp"

namespace pla {

enum class RecurrenceName { Thm1, Thm2, Thm3, AperyZ2 };

std::string to_string(RecurrenceName name);
RecurrenceName recurrence_from_string(const std::string& s);

/// Linear recurrence sum_{i=0}^{order} coeff_polys[i](n) * x_{n+1-i} = 0
/// with polynomial-in-n coefficients, valid for n >= valid_from.
struct Recurrence {
    int order = 3;
    std::vector<RatPoly> coeff_polys; // size order+1; [0] multiplies x_{n+1}
    long valid_from = 2;
    std::vector<Rat> char_poly; // constant-coefficient, leading first, size order+1
};

Recurrence builtin(RecurrenceName name);

/// Characteristic polynomial of the z-dependent log/dilog operator:
/// z(z-1) L^3 - (3z^2-20z+16) L^2 + z(3z+8) L - z^2, leading first.
std::vector<Rat> log_dilog_char_poly(const Rat& z);

struct VerifyResult {
    bool ok = true;
    long first_failure = -1; // n at which the combination first fails to vanish
};

/// Checks sum_i c_i(n) seq[n+1-i] == 0 exactly for every n in [n_lo, n_hi].
/// seq is indexed from 0 and must cover n_hi+1.
VerifyResult verify(const Recurrence& rec, const std::vector<Rat>& seq,
                    long n_lo, long n_hi);

/// Forward iteration from initial values seq[0..order-1] (order-2) or
/// seq[0..2] (order-3) through index `upto`, solving for x_{n+1}.
std::vector<Rat> extend(const Recurrence& rec, std::vector<Rat> initial, long upto);

/// All roots of char_poly to `digits` decimal digits, modulus descending.
/// Real Newton iteration on the dominant root, then deflation and the
/// quadratic formula for the remaining pair.
std::vector<Complex> char_roots(const Recurrence& rec, long digits);

/// Estimate of lim |x_n|^{1/n} by ratio extrapolation: the least-squares
/// slope of log|x_n| over the trailing `window` steps. Removes the O(1/N)
/// prefactor bias of the plain root and smooths root-pair oscillation.
Real growth_exponent(const std::vector<Real>& magnitudes, long window);

} // namespace pla
