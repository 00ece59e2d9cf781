#pragma once

#include <gmpxx.h>

#include <string>

#include "hyperform/error.hpp"

namespace hyperform {

// Exact arbitrary-precision scalars. mpq_class keeps the canonical form
// gcd(num, den) = 1, den > 0 after every operation, which is exactly the
// invariant we need, so Rational is a plain alias.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

/// Serialize as "p" or "p/q", never as a float.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

/// Parse "p" or "p/q". Throws parse_error on garbage.
inline Rational rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw parse_error("invalid rational literal '" + s + "'", 0);
    q.canonicalize();
    return q;
}

inline Rational pow_rational(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    r.canonicalize();
    return r;
}

} // namespace hyperform
