#pragma once

#include "artin/arith.hpp"
#include "artin/interval.hpp"
#include "artin/rational.hpp"

namespace artin {

/// An exact rational multiple q of Artin's constant
/// A = prod_p (1 - 1/(p(p-1))). Every density produced by this module is of
/// this shape: the infinite Euler product over p outside a finite set S is
/// rewritten as A divided by the finite product over p in S, so the
/// transcendental tail is shared and cancels in all identities.
struct ArtinMultiple {
    Rational q;
    bool operator==(const ArtinMultiple&) const = default;
};

/// Enclosure of Artin's constant from the direct truncated product over
/// primes p <= tail_bound_prime, widened by the rigorous tail estimate: the
/// omitted log-factor lies in (-sum_{n>B} 2/(n(n-1)), 0) = (-2/B, 0).
/// Requires tail_bound_prime >= 100.
IntervalReal artin_constant(u64 tail_bound_prime);

/// Tight enclosure of Artin's constant (width well below 1e-9) via the
/// prime-zeta acceleration: the tail over p > 100 is summed as
/// -sum_{k>=2} (L_k - 1)/k * P_{>100}(k) with L_k the Lucas numbers and the
/// prime zeta function P evaluated through Euler-Maclaurin zeta values.
/// Computed once and cached.
IntervalReal artin_constant_tight();

/// The finite part A(a,m,h) of the progression density, as a multiple of A:
/// zero when gcd(a-1, m, h) > 1, else
///   prod_{p | (a-1,m)} (1-1/p) * prod_{p|h, p∤m} (1-1/(p-1))
///     / prod_{p | mh} (1-1/(p(p-1))).
/// Throws NotCoprime when gcd(a, m) > 1.
ArtinMultiple density_main_factor(u64 a, u64 m, u64 h);

/// Hooley's constant C(h) as a multiple of A:
/// q = prod_{p|h} (1-1/(p-1)) / (1-1/(p(p-1))). Zero iff h is even.
ArtinMultiple hooley_constant(u64 h);

/// Discriminant data entering the correction factor: b = delta/(m, delta)
/// (gcd taken on |delta|, sign carried by delta) and
/// gamma = (-1)^((b-1)/2) (m, delta) if b is odd, else 1.
struct DensityContext {
    u64 a;
    u64 m;
    GInvariants ginv;
    i64 b;
    i64 gamma;
};

/// Throws NotCoprime / InvalidG. a is reduced into [1, m].
DensityContext density_context(u64 a, u64 m, i64 g);

/// The entanglement correction
///   1 + (gamma|a) mu(|2b|) / (prod_{p|b, p|h} (p-2) prod_{p|b, p∤h} (p^2-p-1)).
Rational correction_factor(const DensityContext& ctx);

/// The density delta(a,m,g) of primes p = a mod m with primitive root g,
/// among all primes: density_main_factor * correction_factor / phi(m).
ArtinMultiple density(u64 a, u64 m, i64 g);

/// The two-case closed form for delta(1,1,g): C(h) when g1 != 1 mod 4, else
/// C(h) (1 - mu(|g1|) / (prod_{p|h,p|g1} (p-2) prod_{p∤h,p|g1} (p^2-p-1))).
ArtinMultiple hooley_density(i64 g);

/// The relative density A(a,m,h)/(phi(m) C(h)) within the primes admitting
/// g as a primitive root; the A's cancel, leaving an exact rational.
/// Throws DegenerateH if C(h) = 0 (h even, impossible for admissible g).
Rational delta_natural(u64 a, u64 m, i64 g);

/// Numeric enclosure of q*A given an enclosure of A.
IntervalReal density_value(const ArtinMultiple& d, const IntervalReal& artin);

} // namespace artin
