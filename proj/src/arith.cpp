#include "polylog/arith.hpp"

#include <stdexcept>

namespace pla {

Int lcm_upto(long n) {
    Int d = 1;
    for (long i = 2; i <= n; ++i) {
        Int t;
        mpz_lcm_ui(t.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(i));
        d = t;
    }
    return d;
}

std::vector<long> primes_upto(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<size_t>(n) + 1, false);
    for (long i = 2; i <= n; ++i) {
        if (composite[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * i; j <= n; j += i) composite[static_cast<size_t>(j)] = true;
    }
    return out;
}

Int phi_tilde(long n) {
    Int prod = 1;
    for (long p : primes_upto(n)) {
        long frac_num = n % p; // {n/p} = frac_num / p
        if (3 * frac_num >= 2 * p) prod *= p;
    }
    return prod;
}

Int binom(long n, long k) {
    if (n < 0) throw std::invalid_argument("binom: negative n not in contract");
    if (k < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return r;
}

bool is_integer(const Rat& x) {
    return x.get_den() == 1;
}

std::string to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("not a rational: " + s);
    r.canonicalize();
    return r;
}

} // namespace pla
