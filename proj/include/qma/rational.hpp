#pragma once
// Exact arbitrary-precision integer/rational arithmetic (GMP-backed) plus
// the small numeric helpers shared across the library.

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qma {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms.  Always use this instead of the two-argument
/// mpq_class constructor, which does not canonicalize its operands.
inline Rational frac(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// x^e for integer e >= 0.
inline Integer ipow(const Integer& x, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

/// x^e for integer exponents; negative e requires x != 0.
inline Rational rpow(const Rational& x, long e) {
    if (e == 0) return Rational(1);
    if (x == 0 && e < 0) throw std::domain_error("rpow: zero has no negative powers");
    Rational base = e > 0 ? x : Rational(1) / x;
    unsigned long n = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational r(1), b = base;
    while (n > 0) {
        if (n & 1UL) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

inline long gcd_long(long a, long b) { return std::gcd(a, b); }

inline long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    return std::lcm(a, b);
}

/// Euler totient for small positive arguments.
inline long euler_phi(long n) {
    if (n <= 0) throw std::invalid_argument("euler_phi: argument must be positive");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

/// Ascending list of the positive divisors of n.
inline std::vector<long> divisors(long n) {
    if (n <= 0) throw std::invalid_argument("divisors: argument must be positive");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qma
