#pragma once

#include <gmpxx.h>

#include <string>

namespace qharm {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// a * (a-1) * ... * (a-k+1); zero as soon as the range crosses zero for a >= 0.
inline Int falling_factorial(long a, unsigned long k) {
    Int r = 1;
    for (unsigned long i = 0; i < k; ++i) r *= Int(a - static_cast<long>(i));
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Rat make_rat(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    Rat r(s);
    r.canonicalize();
    return r;
}

}  // namespace qharm
