#include "polylog/ratpoly.hpp"

#include <stdexcept>

namespace pla {

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(const Rat& c) {
    if (c == 0) return RatPoly{};
    return RatPoly{std::vector<Rat>{c}};
}

void RatPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& RatPoly::coeff(long i) const {
    static const Rat zero;
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(i)];
}

Rat RatPoly::eval(const Rat& t) const {
    Rat acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) return RatPoly{};
    std::vector<Rat> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
    return RatPoly{std::move(d)};
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> s(std::max(coeffs_.size(), o.coeffs_.size()));
    for (size_t i = 0; i < s.size(); ++i) {
        if (i < coeffs_.size()) s[i] += coeffs_[i];
        if (i < o.coeffs_.size()) s[i] += o.coeffs_[i];
    }
    return RatPoly{std::move(s)};
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    return *this + o * Rat(-1);
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly{};
    std::vector<Rat> p(coeffs_.size() + o.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) p[i + j] += coeffs_[i] * o.coeffs_[j];
    return RatPoly{std::move(p)};
}

RatPoly RatPoly::operator*(const Rat& c) const {
    std::vector<Rat> p(coeffs_);
    for (auto& x : p) x *= c;
    return RatPoly{std::move(p)};
}

// Both bases reduce to forward differences at integer nodes:
//   shifted-falling basis_j(1+m) = C(m, j), so c_j = Delta^j [m -> p(1+m)](0);
//   rising basis_j(-m) = (-1)^j C(m, j), so c_j = (-1)^j Delta^j [m -> p(-m)](0).
std::vector<Rat> to_binomial_basis(const RatPoly& p, BasisAnchor anchor) {
    long deg = p.degree();
    if (deg < 0) return {};
    std::vector<Rat> vals(static_cast<size_t>(deg) + 1);
    for (long m = 0; m <= deg; ++m) {
        Rat node = (anchor == BasisAnchor::ShiftedFalling) ? Rat(1 + m) : Rat(-m);
        vals[static_cast<size_t>(m)] = p.eval(node);
    }
    std::vector<Rat> c(vals.size());
    for (size_t j = 0; j < c.size(); ++j) {
        c[j] = vals[0];
        if (anchor == BasisAnchor::Rising && (j % 2) == 1) c[j] = -c[j];
        for (size_t i = 0; i + 1 < vals.size() - j; ++i) vals[i] = vals[i + 1] - vals[i];
    }
    return c;
}

static RatPoly basis_poly(size_t j, BasisAnchor anchor) {
    RatPoly b = RatPoly::constant(Rat(1));
    for (size_t i = 1; i <= j; ++i) {
        Rat root = (anchor == BasisAnchor::ShiftedFalling) ? Rat(-(long)i) : Rat((long)i - 1);
        b = b * RatPoly{std::vector<Rat>{root, Rat(1)}}; // (t - i) or (t + i - 1)
    }
    return b * Rat(Int(1), factorial(static_cast<long>(j)));
}

RatPoly from_binomial_basis(const std::vector<Rat>& c, BasisAnchor anchor) {
    RatPoly p;
    for (size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        p = p + basis_poly(j, anchor) * c[j];
    }
    return p;
}

bool is_integer_valued(const RatPoly& p) {
    for (const Rat& c : to_binomial_basis(p, BasisAnchor::ShiftedFalling))
        if (!is_integer(c)) return false;
    return true;
}

} // namespace pla
