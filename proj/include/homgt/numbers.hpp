#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers for counts,
// rationals for weights, volumes and normalized sums.  Thin helpers over GMP.

#include <gmpxx.h>

#include <string>

namespace homgt {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;  // base was canonical, so num/den stay coprime
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// "p" for integers, "p/q" in lowest terms otherwise.
inline std::string rat_str(const Rat& q) {
    return q.get_str();
}

inline std::string int_str(const Int& n) {
    return n.get_str();
}

}  // namespace homgt
