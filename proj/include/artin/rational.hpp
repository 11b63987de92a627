#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace artin {

/// Exact arbitrary-precision fraction. Always kept in lowest terms with a
/// positive denominator (GMP canonical form); every constructor below
/// canonicalizes.
using Rational = mpq_class;

inline Rational rational(std::int64_t num, std::int64_t den = 1) {
    Rational q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    q.canonicalize();
    return q;
}

/// "num/den" with the canonical sign on the numerator.
inline std::string to_fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace artin
