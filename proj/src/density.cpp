#include "artin/density.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "artin/census.hpp"

namespace artin {

namespace {

// Residue normalized into [1, m] (so m=1 maps everything to 1).
u64 reduce_residue(u64 a, u64 m) {
    a %= m;
    return a == 0 ? m : a;
}

void require_coprime(u64 a, u64 m) {
    if (m == 0) throw std::invalid_argument("modulus must be positive");
    if (std::gcd(a, m) != 1)
        throw NotCoprime("a and m share the factor " + std::to_string(std::gcd(a, m)));
}

IntervalReal interval_pow(IntervalReal x, u64 e) {
    IntervalReal r{1.0, 1.0};
    while (e > 0) {
        if (e & 1) r *= x;
        x *= x;
        e >>= 1;
    }
    return r;
}

// One factor 1 - 1/(p(p-1)) as a safe enclosure.
IntervalReal artin_factor(u64 p) {
    double d = static_cast<double>(p) * static_cast<double>(p - 1);
    IntervalReal inv{detail::down(1.0 / detail::up(d)), detail::up(1.0 / detail::down(d))};
    return interval_point(1.0) - inv;
}

// zeta(s) for integer s in [2, 64] by Euler-Maclaurin at N = 64 with three
// correction terms; the remainder is bounded by the first omitted (B8) term.
// N is a power of two, so every N-power below is exact in double.
IntervalReal zeta_em(int s) {
    constexpr int kLogN = 6;
    constexpr int kN = 1 << kLogN;
    IntervalReal sum{0.0, 0.0};
    for (int n = 1; n < kN; ++n)
        sum += interval_pow(interval_ratio(1.0, static_cast<double>(n)), static_cast<u64>(s));
    double s_d = static_cast<double>(s);
    sum += interval_ratio(std::ldexp(1.0, kLogN * (1 - s)), s_d - 1.0);
    sum += interval_point(std::ldexp(0.5, -kLogN * s));
    double r1 = s_d;
    double r3 = r1 * (s_d + 1) * (s_d + 2);
    double r5 = r3 * (s_d + 3) * (s_d + 4);
    double r7 = r5 * (s_d + 5) * (s_d + 6);
    sum += interval_ratio(r1 * std::ldexp(1.0, -kLogN * (s + 1)), 12.0);
    sum += interval_ratio(-r3 * std::ldexp(1.0, -kLogN * (s + 3)), 720.0);
    sum += interval_ratio(r5 * std::ldexp(1.0, -kLogN * (s + 5)), 30240.0);
    double rem = r7 * std::ldexp(1.0, -kLogN * (s + 7)) / 1209600.0 * 1.01;
    sum += IntervalReal{-rem, rem};
    return sum;
}

// Prime zeta P(s) = sum_p p^{-s} through Moebius inversion of log zeta.
// Terms with argument beyond 64 contribute at most sum_{t>64} ln zeta(t)
// <= 4 * 2^-64 in absolute value.
IntervalReal prime_zeta(int s, const IntervalReal* ln_zeta_table) {
    IntervalReal acc{0.0, 0.0};
    for (int j = 1; s * j <= 64; ++j) {
        int mu = mobius(static_cast<u64>(j));
        if (mu == 0) continue;
        acc += interval_ratio(static_cast<double>(mu), static_cast<double>(j)) *
               ln_zeta_table[s * j];
    }
    double tail = 4.0 * std::ldexp(1.0, -64);
    acc += IntervalReal{-tail, tail};
    return acc;
}

// Tight enclosure: exact rational product over p <= 100, tail via
//   -log prod_{p>100} (1 - 1/(p(p-1))) = sum_{k>=2} (L_k - 1)/k * P_{>100}(k),
// which follows from 1 - t - t^2 = (1 - phi t)(1 + t/phi) and the Lucas
// recurrence L_k = L_{k-1} + L_{k-2}. Terms past k = 32 are below 1e-55.
IntervalReal compute_artin_tight() {
    const std::vector<u64> primes = primes_up_to(100);
    Rational partial = 1;
    for (u64 p : primes) {
        i64 pp = static_cast<i64>(p * p - p);
        partial *= rational(pp - 1, pp);
    }

    IntervalReal ln_zeta_table[65];
    for (int s = 2; s <= 64; ++s) ln_zeta_table[s] = log_interval(zeta_em(s));

    i64 lucas[33];
    lucas[1] = 1;
    lucas[2] = 3;
    for (int k = 3; k <= 32; ++k) lucas[k] = lucas[k - 1] + lucas[k - 2];

    IntervalReal log_tail{0.0, 0.0};
    for (int k = 2; k <= 32; ++k) {
        IntervalReal beyond = prime_zeta(k, ln_zeta_table);
        for (u64 p : primes)
            beyond = beyond - interval_pow(interval_ratio(1.0, static_cast<double>(p)),
                                           static_cast<u64>(k));
        // Intersect with the elementary bound 0 <= P_{>100}(k) <= 101^-k +
        // 101^(1-k)/(k-1): for large k the zeta route's fixed absolute width
        // would be amplified by the Lucas weight, while this bound decays.
        if (beyond.lo < 0.0) beyond.lo = 0.0;
        double direct = std::pow(101.0, -k) * (1.0 + 101.0 / (k - 1.0)) * 1.0001;
        if (beyond.hi > direct) beyond.hi = direct;
        log_tail += interval_ratio(static_cast<double>(lucas[k] - 1),
                                   static_cast<double>(k)) * beyond;
    }
    log_tail += IntervalReal{0.0, 1e-40}; // k > 32 remainder, generously
    return interval_of(partial) * exp_interval(IntervalReal{-log_tail.hi, -log_tail.lo});
}

// Primes dividing m or h, each taken once.
std::set<u64> primes_of_product(u64 m, u64 h) {
    std::set<u64> ps;
    for (u64 p : prime_divisors(m)) ps.insert(p);
    for (u64 p : prime_divisors(h)) ps.insert(p);
    return ps;
}

} // namespace

IntervalReal artin_constant(u64 tail_bound_prime) {
    if (tail_bound_prime < 100)
        throw std::invalid_argument("artin_constant: tail bound must be >= 100");
    IntervalReal prod{1.0, 1.0};
    for_each_prime(tail_bound_prime, u64{1} << 20,
                   [&](u64 p) { prod *= artin_factor(p); });
    // Omitted log-factor lies in (-sum_{n>B} 2/(n(n-1)), 0) = (-2/B, 0).
    double shrink = std::exp(-2.0 / static_cast<double>(tail_bound_prime));
    double lo = detail::down(detail::down(prod.lo * detail::down(shrink)));
    return {lo, prod.hi};
}

IntervalReal artin_constant_tight() {
    static const IntervalReal cached = compute_artin_tight();
    return cached;
}

ArtinMultiple density_main_factor(u64 a, u64 m, u64 h) {
    require_coprime(a, m);
    a = reduce_residue(a, m);
    u64 shared = std::gcd(std::gcd(a - 1, m), h);
    if (shared > 1) return {rational(0)};
    Rational q = 1;
    for (u64 p : prime_divisors(std::gcd(a - 1, m)))
        q *= rational(static_cast<i64>(p) - 1, static_cast<i64>(p));
    for (u64 p : prime_divisors(h))
        if (m % p != 0)
            q *= rational(static_cast<i64>(p) - 2, static_cast<i64>(p) - 1);
    for (u64 p : primes_of_product(m, h)) {
        // divide out this prime's factor of Artin's constant
        mpz_class pp(static_cast<long>(p));
        mpz_class den = pp * (pp - 1);
        q *= Rational(den, den - 1);
    }
    return {q};
}

ArtinMultiple hooley_constant(u64 h) {
    Rational q = 1;
    for (u64 p : prime_divisors(h)) {
        mpz_class pp(static_cast<long>(p));
        // (1 - 1/(p-1)) / (1 - 1/(p(p-1))) = p(p-2) / (p^2-p-1)
        q *= Rational(pp * (pp - 2), pp * pp - pp - 1);
    }
    q.canonicalize();
    return {q};
}

DensityContext density_context(u64 a, u64 m, i64 g) {
    require_coprime(a, m);
    GInvariants ginv = g_invariants(g);
    a = reduce_residue(a, m);
    u64 md = gcd_abs(ginv.delta, m);
    i64 b = ginv.delta / static_cast<i64>(md);
    i64 gamma = 1;
    if (b % 2 != 0) {
        int sign = (((b - 1) / 2) % 2 == 0) ? 1 : -1;
        gamma = sign * static_cast<i64>(md);
    }
    return {a, m, ginv, b, gamma};
}

Rational correction_factor(const DensityContext& ctx) {
    u64 ab = ctx.b < 0 ? static_cast<u64>(-ctx.b) : static_cast<u64>(ctx.b);
    int mu = mobius(2 * ab);
    if (mu == 0) return rational(1);
    int kr = kronecker(ctx.gamma, static_cast<i64>(ctx.a));
    mpz_class den = 1;
    for (u64 p : prime_divisors(ab)) {
        mpz_class pp(static_cast<long>(p));
        den *= (ctx.ginv.h % p == 0) ? mpz_class(pp - 2) : mpz_class(pp * pp - pp - 1);
    }
    Rational q(mpz_class(kr * mu), den);
    q.canonicalize();
    return rational(1) + q;
}

ArtinMultiple density(u64 a, u64 m, i64 g) {
    DensityContext ctx = density_context(a, m, g);
    ArtinMultiple base = density_main_factor(ctx.a, m, ctx.ginv.h);
    if (base.q == 0) return base;
    Rational q = base.q * correction_factor(ctx) / rational(static_cast<i64>(euler_phi(m)));
    return {q};
}

ArtinMultiple hooley_density(i64 g) {
    GInvariants ginv = g_invariants(g);
    ArtinMultiple c = hooley_constant(ginv.h);
    i64 g1m4 = ((ginv.g1 % 4) + 4) % 4;
    if (g1m4 != 1) return c;
    u64 ag1 = ginv.g1 < 0 ? static_cast<u64>(-ginv.g1) : static_cast<u64>(ginv.g1);
    mpz_class den = 1;
    for (u64 p : prime_divisors(ag1)) {
        mpz_class pp(static_cast<long>(p));
        den *= (ginv.h % p == 0) ? mpz_class(pp - 2) : mpz_class(pp * pp - pp - 1);
    }
    Rational corr(mpz_class(mobius(ag1)), den);
    corr.canonicalize();
    return {c.q * (rational(1) - corr)};
}

Rational delta_natural(u64 a, u64 m, i64 g) {
    GInvariants ginv = g_invariants(g);
    if (ginv.h % 2 == 0)
        throw DegenerateH("C(h) = 0: h is even"); // unreachable for admissible g
    ArtinMultiple base = density_main_factor(a, m, ginv.h);
    ArtinMultiple c = hooley_constant(ginv.h);
    return base.q / (rational(static_cast<i64>(euler_phi(m))) * c.q);
}

IntervalReal density_value(const ArtinMultiple& d, const IntervalReal& artin) {
    return interval_of(d.q) * artin;
}

} // namespace artin
