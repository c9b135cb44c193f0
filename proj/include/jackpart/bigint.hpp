#pragma once

#include <gmpxx.h>

#include <string>

namespace jackpart {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Odd double factorial (2n-1)!! = 1*3*5*...*(2n-1); n = 0 gives 1.
inline BigInt odd_double_factorial(unsigned long n) {
    BigInt r = 1;
    for (unsigned long k = 1; k <= n; ++k) r *= 2 * k - 1;
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_rational(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;  // canonical since base is canonical
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// "p/q" if q != 1, else "p".
inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace jackpart
