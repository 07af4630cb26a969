#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace eulersum {

// Exact rational value type. mpq_class keeps every value reduced with a
// positive denominator through all arithmetic, which is exactly the
// invariant we need; helpers below cover construction and formatting.
using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline BigRational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

// C(a, b) with the out-of-range convention C(a,b) = 0 for b < 0 or b > a.
inline BigInt binom(long a, long b) {
    if (b < 0 || b > a || a < 0) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

inline BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline BigInt pow2z(long e) {
    if (e < 0) throw std::invalid_argument("pow2z: negative exponent");
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

// 2^e as a rational, e may be negative.
inline BigRational pow2q(long e) {
    if (e >= 0) return BigRational(pow2z(e));
    return make_rational(BigInt(1), pow2z(-e));
}

inline int sign_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

inline std::string to_string(const BigRational& r) { return r.get_str(); }

inline BigRational rational_from_string(const std::string& s) {
    BigRational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace eulersum
