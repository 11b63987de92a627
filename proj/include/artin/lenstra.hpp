#pragma once

#include "artin/arith.hpp"
#include "artin/density.hpp"
#include "artin/interval.hpp"
#include "artin/rational.hpp"

namespace artin {

/// One term of the splitting series: value = mu(k) * c / degree where c
/// indicates compatibility of the progression with splitting in the degree-k
/// Kummer field.
struct SeriesTerm {
    u64 k;
    bool compatible;
    u64 degree;
    Rational value;
};

/// Degree of Q(zeta_m, zeta_k, g^(1/k)) over Q for squarefree k:
/// k1 * phi([m,k]) / eps(m,k), with k1 = k/(k,h) and eps = 2 exactly when
/// 2 | k and delta | [m,k] (divisibility on |delta|). Throws NotSquarefree.
u64 field_degree(u64 m, u64 k, const GInvariants& ginv);

/// The splitting indicator c_a(k): 1 iff a = 1 mod (m,k), and additionally
/// (gamma|a) = 1 whenever 2 | k, delta ∤ k and delta | [m,k].
/// gamma comes from density_context(a, m, g). Throws NotSquarefree.
bool splitting_compatible(u64 a, u64 m, u64 k, const GInvariants& ginv, i64 gamma);

/// Exact value of one series term (test and inspection path).
SeriesTerm series_term(u64 a, u64 m, u64 k, const GInvariants& ginv, i64 gamma);

/// Independent oracle for the progression density: the partial sum of
/// mu(k) c_a(k) / [Q(zeta_m, zeta_k, g^(1/k)) : Q] over squarefree k <=
/// max_k, widened by the tail bound
///   T(N) = sum_{k>N} 2 (k,h) phi((m,k)) / (k phi(k) phi(m))
///        <= (2 h m / phi(m)) * 2*sqrt(2)/sqrt(N)
/// (using phi(k) >= sqrt(k/2)), so the interval contains the true limit.
/// Terms are exact small fractions accumulated into an outward-rounded
/// interval. Requires max_k >= 16 and gcd(a, m) = 1.
IntervalReal delta_series(u64 a, u64 m, i64 g, u64 max_k);

} // namespace artin
