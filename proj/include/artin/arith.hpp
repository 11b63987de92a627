#pragma once

#include <cstdint>
#include <vector>

#include "artin/errors.hpp"

namespace artin {

using i64 = std::int64_t;
using u64 = std::uint64_t;

struct PrimePower {
    u64 prime;
    int exponent;
    bool operator==(const PrimePower&) const = default;
};

/// Ordered list of (prime, exponent) pairs with distinct increasing primes;
/// the empty list is the factorization of 1.
using Factorization = std::vector<PrimePower>;

class SpfTable; // census.hpp

/// Canonical factorization by deterministic trial division up to sqrt(n),
/// optionally accelerated by a smallest-prime-factor table for n within its
/// range.
Factorization factorize(u64 n, const SpfTable* spf = nullptr);

/// Distinct prime divisors of n, increasing.
std::vector<u64> prime_divisors(u64 n);

bool is_squarefree(u64 n);

/// Kronecker symbol (a|n), defined for all integer pairs. Conventions:
/// (a|0) = 1 iff a = +-1, (a|-1) = -1 iff a < 0, and the bottom argument 2
/// follows the mod-8 rule.
int kronecker(i64 a, i64 n);

int mobius(u64 n);

u64 euler_phi(u64 n);

/// base^exp mod modulus, with 128-bit intermediates. modulus >= 2; a negative
/// base is reduced into [0, modulus) first.
u64 mod_pow(i64 base, u64 exp, u64 modulus);

/// The x in [1, n) with a*x = 1 mod n. Throws NotCoprime if gcd(a, n) > 1.
u64 mod_inverse(i64 a, u64 n);

/// Arithmetic profile of an admissible g: the squarefree/square split
/// g = g1 * g2^2, the power index h (largest n with g an exact n-th power,
/// odd when g < 0), and the fundamental discriminant delta of the quadratic
/// field generated by a square root of g (g1 if g1 = 1 mod 4, else 4*g1).
struct GInvariants {
    i64 g;
    i64 g1;
    i64 g2;
    u64 h;
    i64 delta;
};

/// Throws InvalidG for g in {0, -1} or g a perfect square.
GInvariants g_invariants(i64 g);

/// The unique residue u in [0, d^2) with a*u = -b mod d^2.
/// Throws NotCoprime when gcd(a, d) > 1.
u64 shift_residue(u64 a, i64 b, u64 d);

/// Floor of the real square root.
u64 isqrt(u64 n);

/// Nonnegative gcd helpers that accept signed input.
u64 gcd_abs(i64 a, u64 b);

} // namespace artin
