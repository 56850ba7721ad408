#pragma once

#include <gmpxx.h>

#include <string>

namespace grasscf {

// Exact arbitrary-precision integer. All coordinate arithmetic in the
// library goes through this type; machine words are used only for
// dimensions and ranks.
using Int = mpz_class;

inline int sign_of(const Int& a) { return mpz_sgn(a.get_mpz_t()); }

inline Int abs_of(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

// gcd(|a|, |b|), never negative.
inline Int gcd_of(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Quotient rounded toward -infinity, so a - floor_div(a,b)*b lies in
// [0, b) for b > 0 and in (b, 0] for b < 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floor_mod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Division known to be exact (used by fraction-free elimination).
inline Int exact_div(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline std::string to_decimal(const Int& a) { return a.get_str(); }

// Strict decimal parse (optional leading '-'); throws ValidationError.
Int parse_int(const std::string& text);

} // namespace grasscf
