#pragma once

#include "artin/arith.hpp"
#include "artin/density.hpp"
#include "artin/interval.hpp"
#include "artin/rational.hpp"

namespace artin {

/// Inputs of the squarefree-shift problem: primes p with primitive root g
/// such that a*p + b is squarefree. a > 0, b != 0, gcd(a, b) = 1.
struct ShiftContext {
    u64 a;
    i64 b;
    GInvariants ginv;
};

/// Validates and builds the context. Throws NotCoprime / InvalidG /
/// std::invalid_argument (a = 0 or b = 0).
ShiftContext shift_context(u64 a, i64 b, i64 g);

/// Per-prime data of the Moebius form: b_m = delta/(delta, d^2) and
/// gamma_d = (-1)^((b_m-1)/2) (d^2, delta) if b_m odd, else 1.
struct DFactorData {
    u64 d;
    i64 b_m;
    i64 gamma_d;
};

/// d squarefree and coprime to a. Throws NotCoprime / NotSquarefree.
DFactorData gamma_d_data(u64 d, const ShiftContext& ctx);

/// The local factor of the shift Euler product at a qualifying prime p
/// (p ∤ delta, p ∤ ab, p ∤ gcd(a+b, h)):
///   1 - (p-1)/(p^3-p^2-p)  if p | a+b (and then p ∤ h),
///   1 - 1/(p^2-2p)         if p ∤ a+b and p | h,
///   1 - 1/(p^2-p-1)        if p ∤ a+b and p ∤ h.
/// Throws PreconditionViolated at excluded primes.
Rational euler_factor(u64 p, const ShiftContext& ctx);

/// True iff euler_factor(p) equals 1 - delta_natural(u0(p), p^2, g) as exact
/// rationals -- the closed form of the local factor.
bool factor_identity_check(u64 p, const ShiftContext& ctx);

/// Enclosure of prod (1 - delta_natural(u0(p), p^2, g)) over qualifying
/// primes. The partial product over p <= prime_bound is exact (accumulated
/// as unreduced big integers, OpenMP over prime ranges, merged by
/// multiplication); the tail is bounded by:
///   each omitted factor lies in (1 - 2/p^2, 1) for p >= 5, since every
///   delta_natural case value is at most 2/p^2 there; hence
///   |log tail| <= sum_{p>B} 2/(p^2-2) <= sum_{n>B} 2/(n^2-2) <= 3/B
///   for B >= 100 (integral comparison with margin).
/// So the true product lies in [partial * exp(-3/B), partial].
IntervalReal euler_product(const ShiftContext& ctx, u64 prime_bound, int thread_count = 0);

/// Exact sum of density(c, |delta|, g) over residues c in [1, |delta|]
/// coprime to delta such that no prime p | delta has p^2 | ac+b. Classes not
/// coprime to delta carry no primes and contribute zero.
ArtinMultiple residue_sum(const ShiftContext& ctx);

/// The same quantity through the Moebius identity
/// sum_{d0 | delta, (a,d0)=1} mu(d0) delta(u0(d0), d0^2, g); equality with
/// residue_sum is enforced by the tests as a zero-tolerance identity.
ArtinMultiple residue_sum_mobius(const ShiftContext& ctx);

/// Leading constant of the shift count: residue_sum evaluated through the
/// tight Artin enclosure, times the euler_product enclosure, with outward
/// rounding.
IntervalReal shift_leading_constant(const ShiftContext& ctx, u64 prime_bound,
                                    int thread_count = 0);

} // namespace artin
