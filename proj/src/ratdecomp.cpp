#include "polylog/ratdecomp.hpp"

#include <stdexcept>

namespace pla {

std::string to_string(ConstructionId c) {
    switch (c) {
        case ConstructionId::LogDilog: return "log-dilog";
        case ConstructionId::Trilog: return "trilog";
        case ConstructionId::WellPoised: return "well-poised";
    }
    return "?";
}

ConstructionId construction_from_string(const std::string& s) {
    if (s == "log-dilog") return ConstructionId::LogDilog;
    if (s == "trilog") return ConstructionId::Trilog;
    if (s == "well-poised") return ConstructionId::WellPoised;
    throw std::invalid_argument("unknown construction: " + s);
}

namespace {

// (t - root)^mult factors; mult > 0 numerator, mult < 0 denominator.
struct Factor {
    Rat root;
    int mult;
};

struct ProductForm {
    Rat prefactor;
    std::vector<Factor> factors;

    long net_degree() const {
        long d = 0;
        for (const auto& f : factors) d += f.mult;
        return d;
    }
};

ProductForm product_form(ConstructionId c, long n) {
    ProductForm pf;
    pf.prefactor = Rat(1);
    switch (c) {
        case ConstructionId::LogDilog:
            pf.prefactor = Rat(Int(1), factorial(n));
            for (long i = 1; i <= n; ++i) pf.factors.push_back({Rat(i), 2});
            for (long i = 0; i <= n; ++i) pf.factors.push_back({Rat(-i), -1});
            break;
        case ConstructionId::Trilog:
            pf.prefactor = Rat(Int(1), factorial(n) * factorial(n));
            for (long i = 1; i <= n; ++i) pf.factors.push_back({Rat(i), 3});
            for (long i = 0; i <= n; ++i) pf.factors.push_back({Rat(-i), -1});
            break;
        case ConstructionId::WellPoised:
            pf.prefactor = Rat(Int((n % 2 == 0) ? -1 : 1), factorial(n));
            pf.factors.push_back({make_rat(Int(-n), Int(2)), 1}); // the (t + n/2) factor
            for (long i = 1; i <= n; ++i) pf.factors.push_back({Rat(i), 2});
            for (long i = n + 1; i <= 2 * n; ++i) pf.factors.push_back({Rat(-i), 2});
            for (long i = 0; i <= n; ++i) pf.factors.push_back({Rat(-i), -3});
            break;
    }
    return pf;
}

int construction_pole_order(ConstructionId c) {
    return c == ConstructionId::WellPoised ? 3 : 1;
}

// Truncated Taylor series c0 + c1 u + c2 u^2 (mod u^3).
struct Series3 {
    Rat c0, c1, c2;

    Series3 mul(const Series3& o) const {
        return {c0 * o.c0, c0 * o.c1 + c1 * o.c0, c0 * o.c2 + c1 * o.c1 + c2 * o.c0};
    }
    Series3 inv() const {
        if (c0 == 0) throw std::domain_error("Series3: inverting a series with zero constant term");
        Rat i0 = 1 / c0;
        Rat i1 = -c1 * i0 * i0;
        Rat i2 = (c1 * c1 - c0 * c2) * i0 * i0 * i0;
        return {i0, i1, i2};
    }
    // (a + u)^m for m >= 1
    static Series3 linear_pow(const Rat& a, int m) {
        Series3 s{a, Rat(1), Rat(0)};
        Series3 acc{Rat(1), Rat(0), Rat(0)};
        for (int i = 0; i < m; ++i) acc = acc.mul(s);
        return acc;
    }
};

// Taylor expansion of the product (with `skip` denominator factors at
// root = -skip_pole removed) around t = t0, to second order.
Series3 taylor_at(const ProductForm& pf, const Rat& t0, const Rat* removed_root) {
    Series3 num{pf.prefactor, Rat(0), Rat(0)};
    Series3 den{Rat(1), Rat(0), Rat(0)};
    for (const auto& f : pf.factors) {
        if (removed_root && f.mult < 0 && f.root == *removed_root) continue;
        Series3 p = Series3::linear_pow(t0 - f.root, f.mult > 0 ? f.mult : -f.mult);
        if (f.mult > 0)
            num = num.mul(p);
        else
            den = den.mul(p);
    }
    return num.mul(den.inv());
}

} // namespace

Rat eval_R(ConstructionId c, long n, const Rat& t) {
    ProductForm pf = product_form(c, n);
    for (const auto& f : pf.factors)
        if (f.mult < 0 && t == f.root)
            throw PoleEvaluationError("eval_R: t is a pole of R_n");
    Rat num = pf.prefactor, den = 1;
    for (const auto& f : pf.factors) {
        Rat base = t - f.root;
        for (int i = 0; i < (f.mult > 0 ? f.mult : -f.mult); ++i)
            (f.mult > 0 ? num : den) *= base;
    }
    return num / den;
}

std::array<Rat, 3> eval_R_jet(ConstructionId c, long n, const Rat& t) {
    ProductForm pf = product_form(c, n);
    for (const auto& f : pf.factors)
        if (f.mult < 0 && t == f.root)
            throw PoleEvaluationError("eval_R_jet: t is a pole of R_n");
    Series3 s = taylor_at(pf, t, nullptr);
    // R = c0, R' = c1, R'' = 2 c2  ->  {R, -R', R''/2}
    return {s.c0, -s.c1, s.c2};
}

RatPoly PartialFraction::poly_dense() const {
    return from_binomial_basis(poly_part, BasisAnchor::ShiftedFalling);
}

Rat PartialFraction::eval(const Rat& t) const {
    Rat acc = poly_dense().eval(t);
    for (long k = 0; k <= n; ++k) {
        Rat base = 1 / (t + k);
        Rat p = 1;
        for (int o = 1; o <= pole_order; ++o) {
            p *= base;
            acc += pole_coeffs[static_cast<size_t>(k)][static_cast<size_t>(o - 1)] * p;
        }
    }
    return acc;
}

PartialFraction decompose(ConstructionId c, long n) {
    ProductForm prod = product_form(c, n);
    PartialFraction out;
    out.n = n;
    out.pole_order = construction_pole_order(c);
    out.pole_coeffs.assign(static_cast<size_t>(n) + 1,
                           std::vector<Rat>(static_cast<size_t>(out.pole_order)));

    for (long k = 0; k <= n; ++k) {
        Rat pole = Rat(-k);
        // Laurent data of (t+k)^pole_order * R at t = -k.
        Series3 g = taylor_at(prod, pole, &pole);
        auto& row = out.pole_coeffs[static_cast<size_t>(k)];
        if (out.pole_order == 1) {
            row[0] = g.c0; // the residue
        } else {
            row[2] = g.c0; // coefficient of 1/(t+k)^3
            row[1] = g.c1; //                1/(t+k)^2
            row[0] = g.c2; //                1/(t+k)
        }
    }

    long deg = prod.net_degree();
    if (deg >= 0) {
        // Interpolate R - pole sum at t = 1..deg+1; forward differences at
        // these nodes are exactly the shifted-falling basis coefficients.
        std::vector<Rat> vals(static_cast<size_t>(deg) + 1);
        for (long m = 0; m <= deg; ++m) {
            Rat t(1 + m);
            Rat v = eval_R(c, n, t);
            for (long k = 0; k <= n; ++k) {
                Rat base = 1 / (t + k);
                Rat p = 1;
                for (int o = 1; o <= out.pole_order; ++o) {
                    p *= base;
                    v -= out.pole_coeffs[static_cast<size_t>(k)][static_cast<size_t>(o - 1)] * p;
                }
            }
            vals[static_cast<size_t>(m)] = v;
        }
        out.poly_part.resize(vals.size());
        for (size_t j = 0; j < vals.size(); ++j) {
            out.poly_part[j] = vals[0];
            for (size_t i = 0; i + 1 < vals.size() - j; ++i) vals[i] = vals[i + 1] - vals[i];
        }
        while (!out.poly_part.empty() && out.poly_part.back() == 0) out.poly_part.pop_back();
    }
    return out;
}

PartialFraction derivative_decomposition(const PartialFraction& pf, int order) {
    if (order != 1 && order != 2)
        throw std::invalid_argument("derivative_decomposition: order must be 1 or 2");
    PartialFraction out;
    out.n = pf.n;
    out.pole_order = pf.pole_order + order;
    out.pole_coeffs.assign(pf.pole_coeffs.size(),
                           std::vector<Rat>(static_cast<size_t>(out.pole_order)));
    for (size_t k = 0; k < pf.pole_coeffs.size(); ++k) {
        for (int o = 1; o <= pf.pole_order; ++o) {
            const Rat& a = pf.pole_coeffs[k][static_cast<size_t>(o - 1)];
            // -d/dt: A/(t+k)^o -> o A/(t+k)^{o+1}
            // (1/2) d^2/dt^2: A/(t+k)^o -> o(o+1)/2 A/(t+k)^{o+2}
            Rat scale = (order == 1) ? Rat(o)
                                     : make_rat(Int(static_cast<long>(o) * (o + 1)), Int(2));
            out.pole_coeffs[k][static_cast<size_t>(o - 1 + order)] = a * scale;
        }
    }
    RatPoly p = pf.poly_dense();
    RatPoly dp = (order == 1) ? p.derivative() * Rat(-1)
                              : p.derivative().derivative() * Rat(1, 2);
    out.poly_part = to_binomial_basis(dp, BasisAnchor::ShiftedFalling);
    return out;
}

} // namespace pla
