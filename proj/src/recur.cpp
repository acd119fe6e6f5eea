#include "polylog/recur.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pla {

std::string to_string(RecurrenceName name) {
    switch (name) {
        case RecurrenceName::Thm1: return "thm1";
        case RecurrenceName::Thm2: return "thm2";
        case RecurrenceName::Thm3: return "thm3";
        case RecurrenceName::AperyZ2: return "apery-z2";
    }
    return "?";
}

RecurrenceName recurrence_from_string(const std::string& s) {
    if (s == "thm1") return RecurrenceName::Thm1;
    if (s == "thm2") return RecurrenceName::Thm2;
    if (s == "thm3") return RecurrenceName::Thm3;
    if (s == "apery-z2") return RecurrenceName::AperyZ2;
    throw std::invalid_argument("unknown recurrence: " + s);
}

namespace {

RatPoly poly(std::initializer_list<long> ascending) {
    std::vector<Rat> c;
    for (long v : ascending) c.emplace_back(v);
    return RatPoly{std::move(c)};
}

std::vector<Rat> consts(std::initializer_list<long> leading_first) {
    std::vector<Rat> c;
    for (long v : leading_first) c.emplace_back(v);
    return c;
}

} // namespace

Recurrence builtin(RecurrenceName name) {
    Recurrence r;
    switch (name) {
        case RecurrenceName::Thm1:
            r.order = 3;
            r.valid_from = 2;
            r.coeff_polys = {
                poly({-24, 59}) * poly({1, 2, 1}) * Rat(2),     // 2(59n-24)(n+1)^2
                poly({240, 376, -1365, -2301}),                 // -(2301n^3+1365n^2-376n-240)
                poly({-35, 60, 120, -295}),                     // -(295n^3-120n^2-60n+35)
                poly({35, 59}) * poly({1, -2, 1}) * Rat(-1),    // -(59n+35)(n-1)^2
            };
            r.char_poly = consts({2, -39, -5, -1});
            break;
        case RecurrenceName::Thm2:
            r.order = 3;
            r.valid_from = 2;
            r.coeff_polys = {
                poly({153, -731, 946}) * poly({1, 2}) * poly({1, 3, 3, 1}) * Rat(2),
                poly({1071, 3298, -8482, -34525, 12788, 127710, 104060}) * Rat(-2),
                poly({0, -184, 328, 853, -1925, -1032, 3784}) * Rat(2),
                poly({368, 1161, 946}) * poly({0, 1}) * poly({-1, 3, -3, 1}) * Rat(-1),
            };
            r.char_poly = consts({4, -220, 8, -1});
            break;
        case RecurrenceName::Thm3:
            r.order = 3;
            r.valid_from = 2;
            r.coeff_polys = {
                poly({348, -1363, 1457}) * poly({1, 4, 6, 4, 1}),
                poly({2784, 8932, -11111, -61894, -9295, 158202, 148614}) * Rat(-1),
                poly({1768, -5678, -5440, 35343, -9443, -91321, 97619}),
                poly({442, 1551, 1457}) * poly({-2, 3}) * poly({-4, 3}) * poly({1, -2, 1}) * Rat(-3),
            };
            r.char_poly = consts({1, -102, 67, -27});
            break;
        case RecurrenceName::AperyZ2:
            r.order = 2;
            r.valid_from = 1;
            r.coeff_polys = {
                poly({1, 2, 1}),    // (n+1)^2
                poly({3, 11, 11}),  // 11n^2+11n+3
                poly({0, 0, -1}),   // -n^2
            };
            r.char_poly = consts({1, 11, -1});
            break;
    }
    return r;
}

std::vector<Rat> log_dilog_char_poly(const Rat& z) {
    return {
        z * (z - 1),
        -(3 * z * z - 20 * z + 16),
        z * (3 * z + 8),
        -z * z,
    };
}

VerifyResult verify(const Recurrence& rec, const std::vector<Rat>& seq, long n_lo, long n_hi) {
    if (n_lo < rec.valid_from) n_lo = rec.valid_from;
    if (n_hi + 1 >= static_cast<long>(seq.size()) || n_lo + 1 - rec.order < 0)
        throw std::invalid_argument("verify: sequence does not cover the requested range");
    for (long n = n_lo; n <= n_hi; ++n) {
        Rat acc = 0;
        for (int i = 0; i <= rec.order; ++i)
            acc += rec.coeff_polys[static_cast<size_t>(i)].eval(Rat(n)) *
                   seq[static_cast<size_t>(n + 1 - i)];
        if (acc != 0) return {false, n};
    }
    return {true, -1};
}

std::vector<Rat> extend(const Recurrence& rec, std::vector<Rat> seq, long upto) {
    if (static_cast<long>(seq.size()) < rec.valid_from + 1)
        throw std::invalid_argument("extend: not enough initial terms");
    while (static_cast<long>(seq.size()) <= upto) {
        long n = static_cast<long>(seq.size()) - 1;
        Rat lead = rec.coeff_polys[0].eval(Rat(n));
        if (lead == 0) throw std::domain_error("extend: leading coefficient vanished");
        Rat acc = 0;
        for (int i = 1; i <= rec.order; ++i)
            acc += rec.coeff_polys[static_cast<size_t>(i)].eval(Rat(n)) *
                   seq[static_cast<size_t>(n + 1 - i)];
        seq.push_back(-acc / lead);
    }
    return seq;
}

std::vector<Complex> char_roots(const Recurrence& rec, long digits) {
    if (digits < 10) digits = 10;
    long work = digits + 20;
    auto R = [&](const Rat& q) { return Real::from_rat(q, work); };
    const auto& cp = rec.char_poly;

    auto eval_pair = [&](const Real& x, Real& p, Real& dp) {
        p = R(cp[0]);
        dp = Real::from_long(0, work);
        for (size_t i = 1; i < cp.size(); ++i) {
            dp = dp * x + p;
            p = p * x + R(cp[i]);
        }
    };

    // Newton from above the Cauchy bound; the dominant root of each builtin
    // characteristic polynomial is real.
    Real x = Real::from_long(1, work);
    for (size_t i = 1; i < cp.size(); ++i) {
        Real b = R(abs(cp[i]) / abs(cp[0])) + Real::from_long(1, work);
        if (b > x) x = b;
    }
    Real tol = Real::from_long(10, work).pow_si(-(digits + 5));
    for (int it = 0; it < 4 * work; ++it) {
        Real p(Real::prec_for_digits(work)), dp(Real::prec_for_digits(work));
        eval_pair(x, p, dp);
        Real step = p / dp;
        x = x - step;
        if (step.abs() < tol) break;
    }

    std::vector<Complex> roots;
    Real zero = Real::from_long(0, work);
    if (rec.order == 2) {
        // quadratic formula
        Real a = R(cp[0]), b = R(cp[1]), c = R(cp[2]);
        Real disc = b * b - a * c * Real::from_long(4, work);
        Real two_a = a * Real::from_long(2, work);
        if (disc.sign() >= 0) {
            Real s = disc.sqrt();
            roots.push_back({(-b + s) / two_a, zero});
            roots.push_back({(-b - s) / two_a, zero});
        } else {
            Real s = (-disc).sqrt();
            roots.push_back({-b / two_a, s / two_a});
            roots.push_back({-b / two_a, zero - s / two_a});
        }
    } else {
        roots.push_back({x, zero});
        // synthetic division: c0 L^3 + ... = (L - x)(c0 L^2 + u L + v)
        Real u = R(cp[1]) + R(cp[0]) * x;
        Real v = R(cp[2]) + u * x;
        Real a = R(cp[0]);
        Real disc = u * u - a * v * Real::from_long(4, work);
        Real two_a = a * Real::from_long(2, work);
        if (disc.sign() >= 0) {
            Real s = disc.sqrt();
            roots.push_back({(-u + s) / two_a, zero});
            roots.push_back({(-u - s) / two_a, zero});
        } else {
            Real s = (-disc).sqrt();
            roots.push_back({-u / two_a, s / two_a});
            roots.push_back({-u / two_a, zero - s / two_a});
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const Complex& p, const Complex& q) { return p.abs() > q.abs(); });
    return roots;
}

Real growth_exponent(const std::vector<Real>& magnitudes, long window) {
    long N = static_cast<long>(magnitudes.size()) - 1;
    if (N < 1) throw std::invalid_argument("growth_exponent: need at least two terms");
    if (window < 1) window = 1;
    if (window > N) window = N;
    // least-squares slope of log|x_n| over the trailing window; the ratio
    // extrapolation removes the O(1/N) prefactor bias of |x_N|^{1/N} and
    // averages out oscillation from complex conjugate root pairs
    long lo = N - window;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long cnt = window + 1;
    for (long n = lo; n <= N; ++n) {
        double x = static_cast<double>(n - lo);
        double y = magnitudes[static_cast<size_t>(n)].log().to_double();
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double slope = (static_cast<double>(cnt) * sxy - sx * sy) /
                   (static_cast<double>(cnt) * sxx - sx * sx);
    return Real::from_double(std::exp(slope), 18);
}

} // namespace pla
