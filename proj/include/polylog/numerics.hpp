#pragma once

#include <optional>

#include "polylog/linforms.hpp"
#include "polylog/real.hpp"

namespace pla {

enum class ConstantName { Log2, Pi, Zeta2, Zeta3 };

Real constant(ConstantName name, long digits);

/// Li_s(z) for s = 1, 2, 3 and rational |z| <= 1 to `digits` accuracy.
/// z = 1 requires s >= 2 (returns zeta(s)); s = 1, z = 1 throws.
Real polylog(int s, const Rat& z, long digits);

/// The linear-form values a*L - b for each b-field present in the row,
/// with the construction's target constants.
struct RemainderValues {
    std::optional<Real> r;        // vs b
    std::optional<Real> r_tilde;  // vs b_tilde
    std::optional<Real> r_tilde2; // vs b_tilde2
};
RemainderValues remainder(const LinearFormCoeffs& row, long digits);

/// Direct numerical summation of sum_nu z^nu f(nu) with f = R_n (order 0),
/// -R_n' (order 1) or (1/2) R_n'' (order 2); the independent oracle for the
/// assembled linear forms. |z| < 1: plain summation of the exact jet values.
/// z = -1: pole part summed by Cohen-Villegas-Zagier alternating-series
/// acceleration, polynomial part by its exact geometric-type closed form.
Real direct_tail(ConstructionId c, long n, const Rat& z, int derivative_order,
                 long digits);

/// Adaptive tensor Gauss-Legendre quadrature of
///   int_0^1 int_0^1 x^n(1-x)^n y^n(1-y)^n / (1-x+zxy)^{n+1} dx dy
/// for 0 < z <= 1; equals z^{-(n+1)} (r~_n(z) - r_n(z) log z).
double double_integral(long n, const Rat& z, double tol = 1e-9);

/// digits = ceil(n log10 lambda3) + guard; the cancellation budget for
/// theorem-scale remainder evaluation at index n.
long digits_for_n(ConstructionId c, long n, long guard = 30);

} // namespace pla
