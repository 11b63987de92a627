#include "artin/arith.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "artin/census.hpp"

namespace artin {

namespace {

u64 abs_u64(i64 x) {
    return x < 0 ? ~static_cast<u64>(x) + 1 : static_cast<u64>(x);
}

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

} // namespace

u64 gcd_abs(i64 a, u64 b) { return std::gcd(abs_u64(a), b); }

u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

Factorization factorize(u64 n, const SpfTable* spf) {
    Factorization out;
    if (n <= 1) return out;
    if (spf != nullptr && n <= spf->limit()) {
        while (n > 1) {
            u64 p = spf->spf(n);
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.push_back({p, e});
        }
        return out;
    }
    auto strip = [&](u64 p) {
        if (n % p != 0) return;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (u64 d = 5; d <= n / d; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<u64> prime_divisors(u64 n) {
    std::vector<u64> ps;
    for (const auto& f : factorize(n)) ps.push_back(f.prime);
    return ps;
}

bool is_squarefree(u64 n) {
    if (n == 0) return false;
    for (const auto& f : factorize(n))
        if (f.exponent > 1) return false;
    return true;
}

int mobius(u64 n) {
    int sign = 1;
    for (const auto& f : factorize(n)) {
        if (f.exponent > 1) return 0;
        sign = -sign;
    }
    return sign;
}

u64 euler_phi(u64 n) {
    u64 phi = 1;
    for (const auto& f : factorize(n)) {
        u64 pe = f.prime - 1;
        for (int i = 1; i < f.exponent; ++i) pe *= f.prime;
        phi *= pe;
    }
    return phi;
}

int kronecker(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        if (a < 0) result = -result;
        n = -n; // |n| < 2^62 in every caller; no overflow concern
    }
    u64 ua = abs_u64(a);
    u64 un = static_cast<u64>(n);
    if ((ua & 1) == 0 && (un & 1) == 0) return 0;
    // Split off the even part of n via the mod-8 rule for (a|2).
    int twos = std::countr_zero(un);
    un >>= twos;
    if (twos & 1) {
        u64 r = ua & 7; // |a| mod 8; a odd here since (a|2)=0 was handled
        bool sign_flip = (r == 3 || r == 5);
        // (a|2) depends on a mod 8, and -a = 8-r mod 8 flips 3 <-> 5 only.
        if (a < 0) sign_flip = ((8 - r) % 8 == 3 || (8 - r) % 8 == 5);
        if (sign_flip) result = -result;
    }
    // Jacobi loop on the odd part, tracking the sign of a separately.
    if (a < 0 && (un & 3) == 3) result = -result;
    u64 x = ua % un;
    u64 y = un;
    while (x != 0) {
        int z = std::countr_zero(x);
        x >>= z;
        if ((z & 1) && ((y & 7) == 3 || (y & 7) == 5)) result = -result;
        if ((x & 3) == 3 && (y & 3) == 3) result = -result;
        std::swap(x, y);
        x %= y;
    }
    return y == 1 ? result : 0;
}

u64 mod_pow(i64 base, u64 exp, u64 modulus) {
    u64 b = static_cast<u64>(((base % static_cast<i64>(modulus)) + static_cast<i64>(modulus))) % modulus;
    u64 result = 1 % modulus;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, b, modulus);
        b = mulmod(b, b, modulus);
        exp >>= 1;
    }
    return result;
}

u64 mod_inverse(i64 a, u64 n) {
    i64 nn = static_cast<i64>(n);
    i64 r0 = nn, r1 = ((a % nn) + nn) % nn;
    i64 t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    if (r0 != 1)
        throw NotCoprime("mod_inverse: arguments share the factor " + std::to_string(r0));
    return static_cast<u64>(((t0 % nn) + nn) % nn);
}

GInvariants g_invariants(i64 g) {
    if (g == 0 || g == -1) throw InvalidG("g must not be 0 or -1");
    u64 ag = abs_u64(g);
    Factorization fact = factorize(ag);
    u64 exp_gcd = 0;
    for (const auto& f : fact) exp_gcd = std::gcd(exp_gcd, static_cast<u64>(f.exponent));
    if (ag == 1) exp_gcd = 1; // g = 1 is caught below as a perfect square
    if (g > 0 && (ag == 1 || exp_gcd % 2 == 0))
        throw InvalidG("g must not be a perfect square");
    u64 h = exp_gcd;
    if (g < 0)
        h >>= std::countr_zero(h); // (-x)^(2k) > 0, so only odd powers remain
    i64 g2 = 1;
    for (const auto& f : fact)
        for (int i = 0; i < f.exponent / 2; ++i) g2 *= static_cast<i64>(f.prime);
    i64 g1 = g / (g2 * g2);
    i64 delta = (((g1 % 4) + 4) % 4 == 1) ? g1 : 4 * g1;
    return {g, g1, g2, h, delta};
}

u64 shift_residue(u64 a, i64 b, u64 d) {
    if (std::gcd(a, d) != 1)
        throw NotCoprime("shift_residue: gcd(a, d) > 1");
    u64 dd = d * d;
    u64 inv = mod_inverse(static_cast<i64>(a % dd), dd);
    u64 nb = (dd - static_cast<u64>(((b % static_cast<i64>(dd)) + static_cast<i64>(dd)) % static_cast<i64>(dd))) % dd;
    return mulmod(inv, nb, dd);
}

} // namespace artin
