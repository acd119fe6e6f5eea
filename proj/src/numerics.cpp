#include "polylog/numerics.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace pla {

Real constant(ConstantName name, long digits) {
    Real r(Real::prec_for_digits(digits + 10));
    switch (name) {
        case ConstantName::Log2:
            mpfr_const_log2(r.raw(), MPFR_RNDN);
            break;
        case ConstantName::Pi:
            mpfr_const_pi(r.raw(), MPFR_RNDN);
            break;
        case ConstantName::Zeta2: {
            mpfr_const_pi(r.raw(), MPFR_RNDN);
            mpfr_sqr(r.raw(), r.raw(), MPFR_RNDN);
            mpfr_div_ui(r.raw(), r.raw(), 6, MPFR_RNDN);
            break;
        }
        case ConstantName::Zeta3:
            mpfr_zeta_ui(r.raw(), 3, MPFR_RNDN);
            break;
    }
    return r;
}

namespace {

// Cohen-Rodriguez Villegas-Zagier acceleration of sum_{k>=0} (-1)^k a_k
// for a_k given as exact rationals; geometric convergence in N.
Real cvz_alternating(const std::function<Rat(long)>& a, long digits) {
    long N = static_cast<long>(std::ceil(digits * 2.302585 / std::log(3.0 + std::sqrt(8.0)))) + 10;
    long work = digits + 20;
    Real big = (Real::from_long(3, work) + Real::from_long(8, work).sqrt()).pow_si(N);
    Real d = (big + Real::from_long(1, work) / big) / Real::from_long(2, work);
    Real b = Real::from_long(-1, work);
    Real c = -d;
    Real s = Real::from_long(0, work);
    for (long k = 0; k < N; ++k) {
        c = b - c;
        s = s + c * Real::from_rat(a(k), work);
        // b <- b (k+N)(k-N) / ((k+1/2)(k+1))
        b = b * Real::from_long(k + N, work) * Real::from_long(k - N, work) /
            (Real::from_rat(make_rat(Int(2 * k + 1), Int(2)), work) * Real::from_long(k + 1, work));
    }
    return s / d;
}

Rat pow_rat(const Rat& x, long e) {
    if (e < 0) return 1 / pow_rat(x, -e);
    Rat acc = 1;
    for (long i = 0; i < e; ++i) acc *= x;
    return acc;
}

} // namespace

Real polylog(int s, const Rat& z, long digits) {
    if (s < 1 || s > 3) throw std::invalid_argument("polylog: s must be 1, 2 or 3");
    if (abs(z) > 1) throw std::domain_error("polylog: |z| <= 1 required");
    if (z == 1) {
        if (s == 1) throw std::domain_error("polylog: Li_1(1) diverges");
        return constant(s == 2 ? ConstantName::Zeta2 : ConstantName::Zeta3, digits);
    }
    long work = digits + 20;
    if (s == 1) {
        // Li_1(z) = -log(1-z)
        return -Real::from_rat(1 - z, work).log();
    }
    if (z == -1) {
        // alternating series, CVZ-accelerated
        return -cvz_alternating([s](long k) { return make_rat(Int(1), pow_rat(Rat(k + 1), s).get_num()); },
                                digits);
    }
    // plain series with geometric tail bound |z|^{N+1}/(1-|z|)
    Real acc = Real::from_long(0, work);
    Real zr = Real::from_rat(z, work);
    Real zpow = Real::from_long(1, work);
    Real eps = Real::from_long(10, work).pow_si(-(digits + 10));
    Real one_minus = Real::from_rat(1 - abs(z), work);
    for (long nu = 1;; ++nu) {
        zpow = zpow * zr;
        Real term = zpow / Real::from_long(nu, work).pow_si(s);
        acc = acc + term;
        if (term.abs() / one_minus < eps) break;
        if (nu > 100000000) throw std::runtime_error("polylog: series did not converge");
    }
    return acc;
}

long digits_for_n(ConstructionId c, long n, long guard) {
    double log10_lambda3 = 0;
    switch (c) {
        case ConstructionId::LogDilog: log10_lambda3 = std::log10(19.62866250); break;
        case ConstructionId::Trilog: log10_lambda3 = std::log10(54.96369509); break;
        case ConstructionId::WellPoised: log10_lambda3 = std::log10(101.34149804); break;
    }
    return static_cast<long>(std::ceil(n * log10_lambda3)) + guard;
}

RemainderValues remainder(const LinearFormCoeffs& row, long digits) {
    long work = digits + 20;
    Real a = Real::from_rat(row.a, work);
    RemainderValues out;
    auto form = [&](const Real& target, const Rat& bval) {
        return a * target - Real::from_rat(bval, work);
    };
    switch (row.construction) {
        case ConstructionId::LogDilog:
            if (row.b) out.r = form(polylog(1, row.z, work), *row.b);
            if (row.b_tilde) out.r_tilde = form(polylog(2, row.z, work), *row.b_tilde);
            break;
        case ConstructionId::Trilog:
            if (row.z == 1) {
                if (row.b_tilde)
                    out.r_tilde = form(constant(ConstantName::Zeta2, work), *row.b_tilde);
                if (row.b_tilde2)
                    out.r_tilde2 = form(constant(ConstantName::Zeta3, work), *row.b_tilde2);
            } else {
                if (row.b) out.r = form(polylog(1, row.z, work), *row.b);
                if (row.b_tilde) out.r_tilde = form(polylog(2, row.z, work), *row.b_tilde);
                if (row.b_tilde2) out.r_tilde2 = form(polylog(3, row.z, work), *row.b_tilde2);
            }
            break;
        case ConstructionId::WellPoised: {
            // r = a pi^2/12 - b, r~ = a 3 zeta(3)/2 - b~
            Real pi = constant(ConstantName::Pi, work);
            Real t1 = pi * pi / Real::from_long(12, work);
            Real t2 = constant(ConstantName::Zeta3, work) * Real::from_rat(make_rat(Int(3), Int(2)), work);
            if (row.b) out.r = form(t1, *row.b);
            if (row.b_tilde) out.r_tilde = form(t2, *row.b_tilde);
            break;
        }
    }
    return out;
}

Real direct_tail(ConstructionId c, long n, const Rat& z, int derivative_order, long digits) {
    if (derivative_order < 0 || derivative_order > 2)
        throw std::invalid_argument("direct_tail: derivative_order must be 0, 1 or 2");
    if (z == 0 || z == 1 || abs(z) > 1)
        throw std::domain_error("direct_tail: need 0 < |z| < 1 or z = -1");
    long work = digits + 25;

    if (z == -1) {
        // Pole part by alternating-series acceleration; polynomial part by its
        // exact geometric-type closed form sum_nu (-1)^nu C(nu-1, j) = q^{j+1}.
        PartialFraction pf = decompose(c, n);
        if (derivative_order > 0) pf = derivative_decomposition(pf, derivative_order);
        auto pole_value = [&pf](long k) { // k >= 0 -> nu = k+1
            Rat nu(k + 1);
            Rat acc = 0;
            for (long kk = 0; kk <= pf.n; ++kk) {
                Rat base = 1 / (nu + kk);
                Rat p = 1;
                for (int o = 1; o <= pf.pole_order; ++o) {
                    p *= base;
                    acc += pf.pole_coeffs[static_cast<size_t>(kk)][static_cast<size_t>(o - 1)] * p;
                }
            }
            return acc;
        };
        Real pole_sum = -cvz_alternating(pole_value, work);
        Rat q = z / (1 - z); // -1/2
        Rat poly_sum = 0;
        Rat qp = 1;
        for (size_t j = 0; j < pf.poly_part.size(); ++j) {
            qp *= q;
            poly_sum += pf.poly_part[j] * qp;
        }
        return pole_sum + Real::from_rat(poly_sum, work);
    }

    // |z| < 1: plain summation of exact jet values of the product form.
    Real acc = Real::from_long(0, work);
    Real zr = Real::from_rat(z, work);
    Real zpow = Real::from_long(1, work);
    Real eps = Real::from_long(10, work).pow_si(-(digits + 12));
    long min_terms = 4 * n + 10;
    for (long nu = 1;; ++nu) {
        zpow = zpow * zr;
        auto jet = eval_R_jet(c, n, Rat(nu));
        Real term = zpow * Real::from_rat(jet[static_cast<size_t>(derivative_order)], work);
        acc = acc + term;
        if (nu > min_terms && term.abs() < eps) break;
        if (nu > 10000000) throw std::runtime_error("direct_tail: series did not converge");
    }
    return acc;
}

namespace {

// Gauss-Legendre nodes/weights on [0,1] by Newton on the Legendre polynomial.
struct GaussRule {
    std::vector<double> x, w;
    explicit GaussRule(int m) {
        x.resize(static_cast<size_t>(m));
        w.resize(static_cast<size_t>(m));
        for (int i = 0; i < (m + 1) / 2; ++i) {
            double t = std::cos(M_PI * (i + 0.75) / (m + 0.5));
            double pp = 0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1, p1 = 0;
                for (int j = 0; j < m; ++j) {
                    double p2 = p1;
                    p1 = p0;
                    p0 = ((2 * j + 1) * t * p1 - j * p2) / (j + 1);
                }
                pp = m * (t * p0 - p1) / (t * t - 1);
                double dt = p0 / pp;
                t -= dt;
                if (std::abs(dt) < 1e-15) break;
            }
            // map [-1,1] -> [0,1]
            x[static_cast<size_t>(i)] = 0.5 * (1 - t);
            x[static_cast<size_t>(m - 1 - i)] = 0.5 * (1 + t);
            double wi = 1.0 / ((1 - t * t) * pp * pp);
            w[static_cast<size_t>(i)] = wi;
            w[static_cast<size_t>(m - 1 - i)] = wi;
        }
    }
};

struct Integrand {
    long n;
    double z;
    // Substituted variables x = 1 - u^2, y = v^2 (Jacobian 4uv).  The
    // denominator 1 - x + z x y vanishes at the corner (x,y) = (1,0); in the
    // (u,v) chart it becomes u^2 + z(1-u^2)v^2, so the Jacobian keeps the
    // integrand bounded and the adaptive refinement terminates quickly.
    double operator()(double u, double v) const {
        double x = 1 - u * u, y = v * v;
        double base = x * (1 - x) * y * (1 - y);
        double den = u * u + z * x * y;
        double p = 4 * u * v;
        for (long i = 0; i < n; ++i) p *= base;
        double dp = 1;
        for (long i = 0; i <= n; ++i) dp *= den;
        return p / dp;
    }
};

double tensor_rule(const Integrand& f, const GaussRule& g, double x0, double x1, double y0,
                   double y1) {
    double hx = x1 - x0, hy = y1 - y0;
    double acc = 0;
    for (size_t i = 0; i < g.x.size(); ++i)
        for (size_t j = 0; j < g.x.size(); ++j)
            acc += g.w[i] * g.w[j] * f(x0 + hx * g.x[i], y0 + hy * g.x[j]);
    return acc * hx * hy;
}

double integrate_cell(const Integrand& f, const GaussRule& lo, const GaussRule& hi, double x0,
                      double x1, double y0, double y1, double tol, int depth) {
    double a = tensor_rule(f, lo, x0, x1, y0, y1);
    double b = tensor_rule(f, hi, x0, x1, y0, y1);
    if (std::abs(a - b) < tol || depth > 32) return b;
    double xm = 0.5 * (x0 + x1), ym = 0.5 * (y0 + y1);
    double t = tol / 4;
    return integrate_cell(f, lo, hi, x0, xm, y0, ym, t, depth + 1) +
           integrate_cell(f, lo, hi, xm, x1, y0, ym, t, depth + 1) +
           integrate_cell(f, lo, hi, x0, xm, ym, y1, t, depth + 1) +
           integrate_cell(f, lo, hi, xm, x1, ym, y1, t, depth + 1);
}

} // namespace

double double_integral(long n, const Rat& z, double tol) {
    if (z <= 0 || z > 1)
        throw std::domain_error("double_integral: z must lie in (0, 1]");
    Integrand f{n, mpq_get_d(z.get_mpq_t())};
    static const GaussRule g8(8), g16(16);
    return integrate_cell(f, g8, g16, 0, 1, 0, 1, tol, 0);
}

} // namespace pla
