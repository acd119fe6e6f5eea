#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "polylog/ratpoly.hpp"

namespace pla {

/// The three rational-function families.
///   LogDilog:   ((t-1)...(t-n))^2 / (n! t(t+1)...(t+n))
///   Trilog:     ((t-1)...(t-n))^3 / (n!^2 t(t+1)...(t+n))
///   WellPoised: (-1)^{n+1} (t+n/2) ((t-1)...(t-n)(t+n+1)...(t+2n))^2
///                 / (n! (t(t+1)...(t+n))^3)
enum class ConstructionId { LogDilog, Trilog, WellPoised };

std::string to_string(ConstructionId c);
ConstructionId construction_from_string(const std::string& s);

struct PoleEvaluationError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exact partial-fraction decomposition
///   R(t) = sum_{k=0}^n sum_{o=1}^{pole_order} pole_coeffs[k][o-1] / (t+k)^o
///          + poly part,
/// the polynomial part stored as shifted-falling binomial-basis coefficients.
struct PartialFraction {
    long n = 0;
    int pole_order = 1;
    std::vector<std::vector<Rat>> pole_coeffs; // [k][o-1], k = 0..n
    std::vector<Rat> poly_part;                // empty = zero polynomial

    RatPoly poly_dense() const;
    long poly_degree() const { return static_cast<long>(poly_part.size()) - 1; }

    /// Exact value of the decomposition at a non-pole t.
    Rat eval(const Rat& t) const;
};

/// Direct product evaluation of R_n(t). Throws PoleEvaluationError at poles.
Rat eval_R(ConstructionId c, long n, const Rat& t);

/// R_n, -R_n' and (1/2) R_n'' at a non-pole t, by second-order Taylor
/// expansion of the product form. Independent of decompose().
std::array<Rat, 3> eval_R_jet(ConstructionId c, long n, const Rat& t);

/// Exact decomposition: simple poles for LogDilog/Trilog, order-3 poles
/// (Laurent data) for WellPoised.
PartialFraction decompose(ConstructionId c, long n);

/// Decomposition of -dR/dt (order 1) or (1/2) d^2R/dt^2 (order 2);
/// pole orders shift up by `order`.
PartialFraction derivative_decomposition(const PartialFraction& pf, int order);

} // namespace pla
