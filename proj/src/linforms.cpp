#include "polylog/linforms.hpp"

#include <cassert>
#include <stdexcept>

namespace pla {

namespace {

Rat rat_pow(const Rat& x, long e) {
    if (e < 0) return 1 / rat_pow(x, -e);
    Rat acc = 1, base = x;
    for (long i = 0; i < e; ++i) acc *= base;
    return acc;
}

void require_z_in_domain(const Rat& z) {
    if (z == 0 || z == 1)
        throw std::domain_error("z must satisfy 0 < |z| <= 1, z != 1");
    if (abs(z) > 1)
        throw std::domain_error("z must satisfy |z| <= 1");
}

} // namespace

SeriesForm assemble_series(const PartialFraction& pf, const Rat& z) {
    SeriesForm out;
    out.li_coeff.assign(static_cast<size_t>(pf.pole_order), Rat(0));
    for (long k = 0; k <= pf.n; ++k) {
        Rat zk = rat_pow(z, -k);
        for (int o = 1; o <= pf.pole_order; ++o) {
            const Rat& a = pf.pole_coeffs[static_cast<size_t>(k)][static_cast<size_t>(o - 1)];
            if (a == 0) continue;
            out.li_coeff[static_cast<size_t>(o - 1)] += a * zk;
            // partial sum sum_{l=1}^k z^{l-k} / l^o
            Rat partial = 0;
            for (long l = 1; l <= k; ++l)
                partial += rat_pow(z, l - k) / rat_pow(Rat(l), o);
            out.constant += a * partial;
        }
    }
    Rat q = z / (1 - z);
    Rat qp = 1;
    for (size_t j = 0; j < pf.poly_part.size(); ++j) {
        qp *= q;
        out.constant -= pf.poly_part[j] * qp;
    }
    return out;
}

LinearFormCoeffs coeffs_log_dilog(long n, const Rat& z) {
    require_z_in_domain(z);
    PartialFraction pf = decompose(ConstructionId::LogDilog, n);
    SeriesForm s = assemble_series(pf, z);
    SeriesForm sd = assemble_series(derivative_decomposition(pf, 1), z);
    assert(sd.li_coeff[1] == s.li_coeff[0]); // shared leading coefficient

    LinearFormCoeffs row;
    row.construction = ConstructionId::LogDilog;
    row.n = n;
    row.z = z;
    row.a = s.li_coeff[0];
    row.b = s.constant;
    row.b_tilde = sd.constant;
    return row;
}

LinearFormCoeffs coeffs_trilog(long n, const Rat& z) {
    require_z_in_domain(z);
    PartialFraction pf = decompose(ConstructionId::Trilog, n);
    SeriesForm s = assemble_series(pf, z);
    SeriesForm sd1 = assemble_series(derivative_decomposition(pf, 1), z);
    SeriesForm sd2 = assemble_series(derivative_decomposition(pf, 2), z);
    assert(sd1.li_coeff[1] == s.li_coeff[0]);
    assert(sd2.li_coeff[2] == s.li_coeff[0]);

    LinearFormCoeffs row;
    row.construction = ConstructionId::Trilog;
    row.n = n;
    row.z = z;
    row.a = s.li_coeff[0];
    row.b = s.constant;
    row.b_tilde = sd1.constant;
    row.b_tilde2 = sd2.constant;
    return row;
}

LinearFormCoeffs coeffs_well_poised(long n) {
    const Rat z(-1);
    PartialFraction pf = decompose(ConstructionId::WellPoised, n);
    SeriesForm s = assemble_series(pf, z);
    // Well-poised cancellation at z = -1: the Li_1 and Li_3 coefficients
    // (from A_k'' and A_k) must vanish; only Li_2 survives in r_n.
    if (s.li_coeff[0] != 0 || s.li_coeff[2] != 0)
        throw std::logic_error("well-poised cancellation failed in r_n");
    Rat a = -s.li_coeff[1]; // r_n = a pi^2/12 - b with Li_2(-1) = -pi^2/12

    SeriesForm sd = assemble_series(derivative_decomposition(pf, 1), z);
    // For -dR/dt the surviving term is 2 (sum_k A_k'(-1)^k) Li_3(-1) = a * 3 zeta(3)/2.
    if (sd.li_coeff[1] != 0 || sd.li_coeff[3] != 0)
        throw std::logic_error("well-poised cancellation failed in r~_n");
    if (sd.li_coeff[2] != -2 * a)
        throw std::logic_error("well-poised Li_3 coefficient mismatch");

    LinearFormCoeffs row;
    row.construction = ConstructionId::WellPoised;
    row.n = n;
    row.z = z;
    row.a = a;
    row.b = s.constant;
    row.b_tilde = sd.constant;
    return row;
}

Rat a_explicit(ConstructionId c, long n, const Rat& z) {
    if (z == 0) throw std::domain_error("a_explicit: z must be nonzero");
    switch (c) {
        case ConstructionId::LogDilog: {
            Rat s = 0;
            for (long k = 0; k <= n; ++k)
                s += Rat(binom(n, k) * binom(n + k, k) * binom(n + k, k)) * rat_pow(-1 / z, k);
            return s;
        }
        case ConstructionId::Trilog: {
            Rat s = 0;
            for (long k = 0; k <= n; ++k) {
                Int bk = binom(n + k, k);
                s += Rat(binom(n, k) * bk * bk * bk) * rat_pow(-1 / z, k);
            }
            return (n % 2 == 0) ? s : -s;
        }
        case ConstructionId::WellPoised: {
            if (z != -1) throw std::domain_error("a_explicit: well-poised form is fixed at z = -1");
            Int s = 0;
            for (long i = 0; i <= n; ++i)
                for (long j = 0; j <= n; ++j) {
                    Int ci = binom(n, i), cj = binom(n, j);
                    s += ci * ci * cj * cj * binom(n + i, n) * binom(i + j, i);
                }
            return Rat(s);
        }
    }
    throw std::logic_error("unreachable");
}

Rat a_well_poised_derivative_sum(long n) {
    Int s = 0;
    for (long j = 0; j <= n; ++j)
        for (long i = 0; i <= j; ++i) {
            Int ci = binom(n, i);
            Int term = ci * ci * binom(n, j) * binom(2 * n - i, n) * binom(n + j, n) *
                       binom(n + j - i, n);
            if ((n + j) % 2 != 0) term = -term;
            s += term;
        }
    return Rat(s);
}

Int z1_denominator(const Rat& z) {
    if (z == 0) throw std::domain_error("z1: z must be nonzero");
    Rat inv = 1 / z;
    return inv.get_den();
}

Int z2_denominator(const Rat& z) {
    if (z == 1) throw std::domain_error("z2: z must differ from 1");
    Rat w = z / (1 - z);
    return w.get_den();
}

bool IntegralityReport::all_stated_pass() const {
    for (const auto& c : checks)
        if (c.stated && !c.pass) return false;
    return true;
}

namespace {

void add_check(IntegralityReport& rep, std::string name, const Rat& scaled, bool stated = true) {
    rep.checks.push_back({std::move(name), scaled, is_integer(scaled), stated});
}

} // namespace

IntegralityReport integrality_report(const LinearFormCoeffs& row) {
    IntegralityReport rep;
    rep.construction = row.construction;
    rep.n = row.n;
    long n = row.n;
    Int Dn = lcm_upto(n);

    switch (row.construction) {
        case ConstructionId::LogDilog: {
            Rat z1n = rat_pow(Rat(z1_denominator(row.z)), n);
            Rat z12n = z1n * rat_pow(Rat(z2_denominator(row.z)), n);
            add_check(rep, "z1^n*a", z1n * row.a);
            add_check(rep, "(z1*z2)^n*Dn*b", z12n * Rat(Dn) * *row.b);
            add_check(rep, "(z1*z2)^n*Dn^2*b~", z12n * Rat(Dn * Dn) * *row.b_tilde);
            break;
        }
        case ConstructionId::Trilog: {
            Int D2n = lcm_upto(2 * n);
            if (row.z == 1) {
                // z = 1 theorem-mode inclusions. The Dn^3 b~~ member is off by a
                // factor 2 for every n >= 1; 2 Dn^3 b~~ is what actually holds.
                add_check(rep, "a", row.a);
                if (row.b_tilde) add_check(rep, "Dn*D2n*b~", Rat(Dn * D2n) * *row.b_tilde);
                if (row.b_tilde2) {
                    add_check(rep, "Dn^3*b~~", Rat(Dn * Dn * Dn) * *row.b_tilde2);
                    add_check(rep, "2*Dn^3*b~~", Rat(2 * Dn * Dn * Dn) * *row.b_tilde2, false);
                }
            } else {
                // The polynomial part of the cube construction has degree 2n-1,
                // so powers of z/(z-1) up to 2n appear in b, b~, b~~ and z2^n is
                // not enough to clear their denominators (first counterexample:
                // n=1, z=-1, for b).  z1^n z2^{2n} is; see the tests for both.
                Rat z1n = rat_pow(Rat(z1_denominator(row.z)), n);
                Rat z12n = z1n * rat_pow(Rat(z2_denominator(row.z)), n);
                Rat z122n = z1n * rat_pow(Rat(z2_denominator(row.z)), 2 * n);
                add_check(rep, "z1^n*a", z1n * row.a);
                add_check(rep, "(z1*z2)^n*Dn*b", z12n * Rat(Dn) * *row.b, false);
                add_check(rep, "(z1*z2)^n*Dn*D2n*b~", z12n * Rat(Dn * D2n) * *row.b_tilde, false);
                add_check(rep, "(z1*z2)^n*Dn*D2n^2*b~~",
                          z12n * Rat(Dn * D2n * D2n) * *row.b_tilde2, false);
                add_check(rep, "z1^n*z2^2n*Dn*b", z122n * Rat(Dn) * *row.b);
                add_check(rep, "z1^n*z2^2n*Dn*D2n*b~", z122n * Rat(Dn * D2n) * *row.b_tilde);
                add_check(rep, "z1^n*z2^2n*Dn*D2n^2*b~~",
                          z122n * Rat(Dn * D2n * D2n) * *row.b_tilde2);
            }
            break;
        }
        case ConstructionId::WellPoised: {
            Int phi = phi_tilde(n);
            Rat twon = rat_pow(Rat(2), n);
            Int Dn2 = Dn * Dn, Dn3 = Dn * Dn * Dn;
            // baseline inclusions
            add_check(rep, "2*Dn*a", Rat(2 * Dn) * row.a);
            add_check(rep, "2^n*Dn^3*b", twon * Rat(Dn3) * *row.b);
            // the second 2^n Dn^4 member is ambiguous (b vs b~); report both
            add_check(rep, "2^n*Dn^4*b", twon * Rat(Dn3 * Dn) * *row.b, false);
            add_check(rep, "2^n*Dn^4*b~", twon * Rat(Dn3 * Dn) * *row.b_tilde, false);
            // sharpened inclusions with the prime product
            add_check(rep, "a/phi~", make_rat(Int(1), phi) * row.a);
            add_check(rep, "2*Dn^2*b/phi~", make_rat(2 * Dn2, phi) * *row.b);
            add_check(rep, "2*Dn^3*b/phi~", make_rat(2 * Dn3, phi) * *row.b, false);
            add_check(rep, "2*Dn^3*b~/phi~", make_rat(2 * Dn3, phi) * *row.b_tilde, false);
            break;
        }
    }
    return rep;
}

} // namespace pla
