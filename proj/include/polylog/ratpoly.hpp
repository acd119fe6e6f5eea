#pragma once

#include <vector>

#include "polylog/arith.hpp"

namespace pla {

/// Dense polynomial over the rationals, coefficient index = power of t.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    static RatPoly constant(const Rat& c);

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const Rat& coeff(long i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat eval(const Rat& t) const;
    RatPoly derivative() const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rat& c) const;
    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }

private:
    void trim();
    std::vector<Rat> coeffs_; // empty = zero polynomial
};

/// Which integer-valued binomial basis is meant.
///   ShiftedFalling: basis_j(t) = (t-1)(t-2)...(t-j)/j!
///   Rising:         basis_j(t) = t(t+1)...(t+j-1)/j!
enum class BasisAnchor { ShiftedFalling, Rising };

/// Coefficients c_j with p(t) = sum_j c_j basis_j(t), j = 0..deg(p).
/// Extracted by exact forward differences at integer nodes.
std::vector<Rat> to_binomial_basis(const RatPoly& p, BasisAnchor anchor);

/// Inverse of to_binomial_basis.
RatPoly from_binomial_basis(const std::vector<Rat>& c, BasisAnchor anchor);

/// True iff p takes integer values at all integers (integer coefficients
/// in the shifted-falling basis).
bool is_integer_valued(const RatPoly& p);

} // namespace pla
