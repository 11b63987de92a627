#include "artin/shift.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include <omp.h>

#include "artin/census.hpp"

namespace artin {

namespace {

u64 abs_u64(i64 x) { return x < 0 ? static_cast<u64>(-x) : static_cast<u64>(x); }

bool divides(u64 d, i64 v) {
    return d != 0 && (v % static_cast<i64>(d)) == 0;
}

// Case split of the local factor; p is already known to qualify.
Rational euler_factor_cases(u64 p, bool div_a_plus_b, bool div_h) {
    mpz_class pp(static_cast<long>(p));
    if (div_a_plus_b) {
        // 1 - (p-1)/(p^3-p^2-p)
        mpz_class den = pp * pp * pp - pp * pp - pp;
        Rational q(den - (pp - 1), den);
        q.canonicalize();
        return q;
    }
    if (div_h) {
        mpz_class den = pp * pp - 2 * pp;
        Rational q(den - 1, den);
        q.canonicalize();
        return q;
    }
    mpz_class den = pp * pp - pp - 1;
    Rational q(den - 1, den);
    q.canonicalize();
    return q;
}

std::vector<u64> squarefree_divisors(u64 n) {
    std::vector<u64> divs{1};
    for (u64 p : prime_divisors(n)) {
        size_t sz = divs.size();
        for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * p);
    }
    return divs;
}

} // namespace

ShiftContext shift_context(u64 a, i64 b, i64 g) {
    if (a == 0) throw std::invalid_argument("shift: a must be positive");
    if (b == 0) throw std::invalid_argument("shift: b must be nonzero");
    if (gcd_abs(b, a) != 1) throw NotCoprime("shift: gcd(a, b) > 1");
    return {a, b, g_invariants(g)};
}

DFactorData gamma_d_data(u64 d, const ShiftContext& ctx) {
    if (d == 0 || !is_squarefree(d)) throw NotSquarefree("gamma_d_data: d must be squarefree");
    if (std::gcd(d, ctx.a) != 1) throw NotCoprime("gamma_d_data: gcd(a, d) > 1");
    u64 dd = d * d;
    u64 shared = gcd_abs(ctx.ginv.delta, dd);
    i64 bm = ctx.ginv.delta / static_cast<i64>(shared);
    i64 gd = 1;
    if (bm % 2 != 0) {
        int sign = (((bm - 1) / 2) % 2 == 0) ? 1 : -1;
        gd = sign * static_cast<i64>(shared);
    }
    return {d, bm, gd};
}

Rational euler_factor(u64 p, const ShiftContext& ctx) {
    if (divides(p, ctx.ginv.delta))
        throw PreconditionViolated("euler_factor: p divides delta");
    if (ctx.a % p == 0 || divides(p, ctx.b))
        throw PreconditionViolated("euler_factor: p divides ab");
    i64 apb = static_cast<i64>(ctx.a) + ctx.b;
    bool div_apb = divides(p, apb);
    bool div_h = ctx.ginv.h % p == 0;
    if (div_apb && div_h)
        throw PreconditionViolated("euler_factor: p divides gcd(a+b, h)");
    return euler_factor_cases(p, div_apb, div_h);
}

bool factor_identity_check(u64 p, const ShiftContext& ctx) {
    Rational lhs = euler_factor(p, ctx);
    u64 u = shift_residue(ctx.a, ctx.b, p);
    Rational rhs = rational(1) - delta_natural(u, p * p, ctx.ginv.g);
    return lhs == rhs;
}

IntervalReal euler_product(const ShiftContext& ctx, u64 prime_bound, int thread_count) {
    if (prime_bound < 100)
        throw std::invalid_argument("euler_product: prime bound must be >= 100");
    const std::vector<u64> primes = primes_up_to(prime_bound);
    const u64 h = ctx.ginv.h;
    const i64 apb = static_cast<i64>(ctx.a) + ctx.b;

    struct Case {
        u64 p;
        bool div_apb;
        bool div_h;
    };
    std::vector<Case> qualifying;
    qualifying.reserve(primes.size());
    for (u64 p : primes) {
        if (divides(p, ctx.ginv.delta) || ctx.a % p == 0 || divides(p, ctx.b)) continue;
        bool div_apb = divides(p, apb);
        bool div_h = h % p == 0;
        if (div_apb && div_h) continue;
        qualifying.push_back({p, div_apb, div_h});
    }

    // Exact partial product, accumulated unreduced in parallel chunks and
    // merged by multiplication (associative, fixed order: deterministic).
    const size_t n = qualifying.size();
    const size_t chunks = 64;
    std::vector<mpz_class> nums(chunks, 1), dens(chunks, 1);
    int nt = thread_count > 0 ? thread_count : omp_get_max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
        size_t begin = n * c / chunks, end = n * (c + 1) / chunks;
        mpz_class num = 1, den = 1;
        for (size_t i = begin; i < end; ++i) {
            const Case& q = qualifying[i];
            mpz_class pp(static_cast<long>(q.p));
            mpz_class d, e;
            if (q.div_apb) {
                d = pp * pp * pp - pp * pp - pp;
                e = d - (pp - 1);
            } else if (q.div_h) {
                d = pp * pp - 2 * pp;
                e = d - 1;
            } else {
                d = pp * pp - pp - 1;
                e = d - 1;
            }
            num *= e;
            den *= d;
        }
        nums[c] = num;
        dens[c] = den;
    }
    mpz_class num = 1, den = 1;
    for (size_t c = 0; c < chunks; ++c) {
        num *= nums[c];
        den *= dens[c];
    }
    Rational partial(num, den);
    partial.canonicalize();
    IntervalReal part = interval_of(partial);

    // Tail: every omitted factor 1 - delta_natural(u0(p), p^2, g) lies in
    // (1 - 2/p^2, 1) for p >= 5, because each case value is at most 2/p^2
    // there. Hence |log tail| <= sum_{p>B} 2/(p^2-2) <= sum_{n>B} 2/(n^2-2)
    // <= 3/B for B >= 100, and the true product is in
    // [partial * exp(-3/B), partial].
    double shrink = std::exp(-3.0 / static_cast<double>(prime_bound));
    double lo = detail::down(detail::down(part.lo * detail::down(shrink)));
    return {lo, part.hi};
}

ArtinMultiple residue_sum(const ShiftContext& ctx) {
    // The squarefree-at-delta condition p^2 | ac+b is a condition mod p^2,
    // which |delta| alone does not resolve at its odd prime divisors; the
    // classes are therefore taken mod M = lcm(|delta|, rad(delta)^2), over
    // which the condition is well defined. For even discriminants (4 | delta)
    // M = |delta| at p = 2, so this agrees with the residues-mod-|delta|
    // picture exactly where that picture is already meaningful.
    u64 ad = abs_u64(ctx.ginv.delta);
    std::vector<u64> ps = prime_divisors(ad);
    u64 modulus = ad;
    for (u64 p : ps) {
        u64 pp = p * p;
        u64 g = std::gcd(modulus, pp);
        if (modulus / g > (u64{1} << 40) / pp)
            throw std::invalid_argument("residue_sum: discriminant too large");
        modulus = modulus / g * pp;
    }
    Rational acc = 0;
    for (u64 c = 1; c <= modulus; ++c) {
        if (std::gcd(c, modulus) != 1) continue;
        bool ok = true;
        for (u64 p : ps) {
            i64 v = static_cast<i64>(ctx.a * c) + ctx.b;
            i64 pp = static_cast<i64>(p * p);
            if (((v % pp) + pp) % pp == 0) { ok = false; break; }
        }
        if (ok) acc += density(c, modulus, ctx.ginv.g).q;
    }
    return {acc};
}

ArtinMultiple residue_sum_mobius(const ShiftContext& ctx) {
    u64 ad = abs_u64(ctx.ginv.delta);
    Rational acc = 0;
    for (u64 d0 : squarefree_divisors(ad)) {
        if (std::gcd(d0, ctx.a) != 1) continue;
        int mu = mobius(d0);
        u64 u = shift_residue(ctx.a, ctx.b, d0);
        u64 dd = d0 * d0;
        if (std::gcd(u, dd) != 1) continue; // class without primes
        acc += mu * density(u, dd, ctx.ginv.g).q;
    }
    return {acc};
}

IntervalReal shift_leading_constant(const ShiftContext& ctx, u64 prime_bound,
                                    int thread_count) {
    ArtinMultiple sum = residue_sum(ctx);
    if (sum.q == 0) return {0.0, 0.0};
    IntervalReal numeric = density_value(sum, artin_constant_tight());
    return numeric * euler_product(ctx, prime_bound, thread_count);
}

} // namespace artin
