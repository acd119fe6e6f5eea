#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pla {

using Int = mpz_class;
using Rat = mpq_class;

/// D_n = lcm(1, 2, ..., n); D_0 = D_1 = 1.
Int lcm_upto(long n);

/// Primes p <= n, by deterministic sieve.
std::vector<long> primes_upto(long n);

/// Product of primes p <= n whose fractional part {n/p} lies in [2/3, 1).
Int phi_tilde(long n);

/// Exact binomial coefficient; 0 when k < 0 or k > n (n >= 0).
Int binom(long n, long k);

Int factorial(long n);

bool is_integer(const Rat& x);

/// num/den in lowest terms (mpq_class(a, b) does not canonicalize).
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Canonical "p/q" string, denominator omitted when 1.
std::string to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

} // namespace pla
