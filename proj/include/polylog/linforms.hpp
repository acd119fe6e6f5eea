#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polylog/ratdecomp.hpp"

namespace pla {

/// One row (n; a_n, b_n, b~_n, b~~_n) of a construction's table.
/// Which b-fields are present depends on the construction:
///   LogDilog:   b (vs Li_1), b_tilde (vs Li_2)
///   Trilog:     b (vs Li_1), b_tilde (vs Li_2), b_tilde2 (vs Li_3);
///               at z = 1 only a, b_tilde (vs zeta(2)), b_tilde2 (vs zeta(3))
///   WellPoised: z fixed at -1; b (vs pi^2/12), b_tilde (vs 3 zeta(3)/2)
struct LinearFormCoeffs {
    ConstructionId construction = ConstructionId::LogDilog;
    long n = 0;
    Rat z;
    Rat a;
    std::optional<Rat> b;
    std::optional<Rat> b_tilde;
    std::optional<Rat> b_tilde2;
};

/// Series assembly: given pole data and the polynomial part of a
/// decomposition, the series sum_nu z^nu (decomposition at t=nu) equals
///   sum_o li_coeff[o] Li_o(z) - constant.
struct SeriesForm {
    std::vector<Rat> li_coeff; // index o-1 -> coefficient of Li_o(z)
    Rat constant;
};
SeriesForm assemble_series(const PartialFraction& pf, const Rat& z);

LinearFormCoeffs coeffs_log_dilog(long n, const Rat& z);
LinearFormCoeffs coeffs_trilog(long n, const Rat& z);
LinearFormCoeffs coeffs_well_poised(long n);

/// Closed binomial-sum formulas for a_n (the Remark in each construction;
/// for WellPoised the Almkvist-style double sum).
Rat a_explicit(ConstructionId c, long n, const Rat& z);

/// The other double-sum formula for the well-poised a_n (derivative form);
/// equal to a_explicit(WellPoised, n, -1).
Rat a_well_poised_derivative_sum(long n);

/// Denominators z1, z2 of 1/z and z/(1-z), in lowest terms.
Int z1_denominator(const Rat& z);
Int z2_denominator(const Rat& z);

struct IntegralityCheck {
    std::string name;   // e.g. "z1^n * a_n"
    Rat scaled_value;
    bool pass = false;
    bool stated = true; // false for informational variants beyond the stated claim
};

struct IntegralityReport {
    ConstructionId construction;
    long n = 0;
    std::vector<IntegralityCheck> checks;
    bool all_stated_pass() const;
};

/// Inclusion checks for one row; the trilog z = 1 (theorem-mode) scalings
/// are selected when row.z == 1.
IntegralityReport integrality_report(const LinearFormCoeffs& row);

} // namespace pla
