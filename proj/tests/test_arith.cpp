#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "artin/arith.hpp"
#include "oracles.hpp"

using namespace artin;

TEST_CASE("factorize basics") {
    CHECK(factorize(1).empty());
    CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
    CHECK(factorize(9999991) == Factorization{{9999991, 1}});
    CHECK(oracle::is_prime(9999991));
}

TEST_CASE("factorize reconstructs random inputs") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 2000; ++t) {
        u64 n = rng() % 1'000'000'000 + 1;
        u64 prod = 1;
        u64 last = 0;
        for (const auto& f : factorize(n)) {
            CHECK(f.prime > last);
            last = f.prime;
            for (int e = 0; e < f.exponent; ++e) prod *= f.prime;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("kronecker examples and conventions") {
    CHECK(kronecker(1, 1) == 1);
    CHECK(kronecker(5, 3) == -1);
    CHECK(kronecker(3, 2) == -1);
    CHECK(kronecker(5, 2) == -1);
    CHECK(kronecker(7, 2) == 1);
    CHECK(kronecker(2, 7) == 1);
    // bottom 0: nonzero only at a = +-1
    CHECK(kronecker(1, 0) == 1);
    CHECK(kronecker(-1, 0) == 1);
    CHECK(kronecker(2, 0) == 0);
    CHECK(kronecker(0, 0) == 0);
    // bottom -1 tracks the sign of a
    CHECK(kronecker(3, -1) == 1);
    CHECK(kronecker(-3, -1) == -1);
    CHECK(kronecker(0, 1) == 1);
    CHECK(kronecker(0, 3) == 0);
    CHECK(kronecker(-8, 3) == 1);
    CHECK(kronecker(-1, 3) == -1);
    CHECK(kronecker(-1, 5) == 1);
}

TEST_CASE("kronecker is completely multiplicative in the top argument") {
    for (i64 n = 1; n <= 200; ++n)
        for (i64 a = -200; a <= 200; ++a) {
            int ka = kronecker(a, n);
            for (i64 b = -200; b <= 200; ++b)
                CHECK(kronecker(a * b, n) == ka * kronecker(b, n));
        }
}

TEST_CASE("kronecker agrees with its bottom-multiplicative definition") {
    // (a|n) = (a|sign) * (a|2)^e * prod (a|p_i) with Legendre factors via the
    // Euler criterion; checks the even-bottom plumbing end to end.
    auto legendre = [](i64 a, u64 p) -> int {
        if (gcd_abs(a, p) != 1) return 0;
        return mod_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
    };
    for (i64 a = -100; a <= 100; ++a)
        for (i64 n = -300; n <= 300; ++n) {
            if (n == 0) continue;
            int expected = (n < 0 && a < 0) ? -1 : 1;
            u64 un = n < 0 ? static_cast<u64>(-n) : static_cast<u64>(n);
            while (un % 2 == 0) {
                un /= 2;
                if (a % 2 == 0) expected = 0;
                else {
                    i64 r = ((a % 8) + 8) % 8;
                    if (r == 3 || r == 5) expected = -expected;
                }
            }
            for (u64 p : oracle::primes_below(301)) {
                if (p == 2) continue;
                while (un % p == 0) {
                    un /= p;
                    expected *= legendre(a, p);
                }
            }
            CHECK(kronecker(a, n) == expected);
        }
}

TEST_CASE("kronecker matches the Euler criterion at odd primes") {
    for (u64 p : oracle::primes_below(500)) {
        if (p == 2) continue;
        for (i64 a = -500; a <= 500; ++a) {
            if (gcd_abs(a, p) != 1) continue;
            u64 e = mod_pow(a, (p - 1) / 2, p);
            int via_euler = e == 1 ? 1 : -1;
            CHECK(e == 1 + (via_euler == 1 ? 0 : p - 2)); // e in {1, p-1}
            CHECK(kronecker(a, static_cast<i64>(p)) == via_euler);
        }
    }
}

TEST_CASE("mobius and euler_phi") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(16) == 0);
    CHECK(mobius(30) == -1);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(10) == 4);
    CHECK(euler_phi(9999991) == 9999990);
}

TEST_CASE("mod_pow") {
    CHECK(mod_pow(2, 0, 7) == 1);
    CHECK(mod_pow(2, 3, 7) == 1);
    CHECK(mod_pow(3, 9999990, 9999991) == 1); // Fermat at a prime
    CHECK(mod_pow(-1, 3, 5) == 4);
    CHECK(mod_pow(-2, 2, 5) == 4);
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(1, 5) == 1);
    CHECK(mod_inverse(2, 9) == 5);
    CHECK_THROWS_AS(mod_inverse(3, 9), NotCoprime);
    std::mt19937_64 rng(11);
    int done = 0;
    while (done < 10000) {
        u64 n = rng() % 1'000'000 + 2;
        i64 a = static_cast<i64>(rng() % 2'000'000) - 1'000'000;
        if (a == 0 || gcd_abs(a, n) != 1) continue;
        u64 inv = mod_inverse(a, n);
        CHECK(inv >= 1);
        CHECK(inv < n);
        i64 prod = ((a % static_cast<i64>(n)) + static_cast<i64>(n)) % static_cast<i64>(n);
        CHECK(static_cast<u64>(prod) * inv % n == 1);
        ++done;
    }
}

TEST_CASE("g_invariants examples") {
    GInvariants g2 = g_invariants(2);
    CHECK(g2.g1 == 2);
    CHECK(g2.g2 == 1);
    CHECK(g2.h == 1);
    CHECK(g2.delta == 8);

    GInvariants g8 = g_invariants(8);
    CHECK(g8.g1 == 2);
    CHECK(g8.g2 == 2);
    CHECK(g8.h == 3);
    CHECK(g8.delta == 8);

    GInvariants gm8 = g_invariants(-8);
    CHECK(gm8.g1 == -2);
    CHECK(gm8.g2 == 2);
    CHECK(gm8.h == 3);
    CHECK(gm8.delta == -8);

    GInvariants gm4 = g_invariants(-4);
    CHECK(gm4.g1 == -1);
    CHECK(gm4.g2 == 2);
    CHECK(gm4.h == 1);
    CHECK(gm4.delta == -4);

    GInvariants g5 = g_invariants(5);
    CHECK(g5.delta == 5);

    CHECK_THROWS_AS(g_invariants(16), InvalidG);
    CHECK_THROWS_AS(g_invariants(1), InvalidG);
    CHECK_THROWS_AS(g_invariants(0), InvalidG);
    CHECK_THROWS_AS(g_invariants(-1), InvalidG);
    CHECK_THROWS_AS(g_invariants(49), InvalidG);
}

namespace {

// Is g an exact e-th power of an integer?
bool is_power(i64 g, u64 e) {
    if (e == 1) return true;
    if (g < 0 && e % 2 == 0) return false;
    u64 ag = g < 0 ? static_cast<u64>(-g) : static_cast<u64>(g);
    u64 r = static_cast<u64>(std::llround(std::pow(static_cast<double>(ag), 1.0 / e)));
    for (u64 c = r > 2 ? r - 2 : 1; c <= r + 2; ++c) {
        u64 pw = 1;
        bool of = false;
        for (u64 i = 0; i < e && !of; ++i) {
            if (pw > ag / c + 1) of = true;
            pw *= c;
        }
        if (!of && pw == ag) return true;
    }
    return false;
}

} // namespace

TEST_CASE("g_invariants round-trip over |g| <= 10^4") {
    for (i64 g = -10000; g <= 10000; ++g) {
        if (g == 0 || g == -1) continue;
        if (g > 0 && is_power(g, 2)) continue;
        GInvariants inv = g_invariants(g);
        CHECK(inv.g1 * inv.g2 * inv.g2 == g);
        CHECK(oracle::is_squarefree(static_cast<u64>(inv.g1 < 0 ? -inv.g1 : inv.g1)));
        CHECK(is_power(g, inv.h));
        if (g < 0) CHECK(inv.h % 2 == 1);
        for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61})
            CHECK_FALSE(is_power(g, q * inv.h));
        i64 g1m4 = ((inv.g1 % 4) + 4) % 4;
        CHECK(inv.delta == (g1m4 == 1 ? inv.g1 : 4 * inv.g1));
    }
}

TEST_CASE("shift_residue") {
    CHECK(shift_residue(1, -1, 2) == 1);
    CHECK(shift_residue(2, 1, 3) == 4);
    CHECK_THROWS_AS(shift_residue(3, 1, 3), NotCoprime);
    std::mt19937_64 rng(13);
    int done = 0;
    while (done < 10000) {
        u64 a = rng() % 1000 + 1;
        i64 b = static_cast<i64>(rng() % 2001) - 1000;
        u64 d = rng() % 500 + 1;
        if (std::gcd(a, d) != 1) continue;
        u64 u = shift_residue(a, b, d);
        u64 dd = d * d;
        CHECK(u < dd);
        i64 v = static_cast<i64>(a * u) + b;
        i64 sq = static_cast<i64>(dd);
        CHECK(((v % sq) + sq) % sq == 0);
        ++done;
    }
}

TEST_CASE("isqrt") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(3) == 1);
    CHECK(isqrt(4) == 2);
    CHECK(isqrt(99) == 9);
    CHECK(isqrt(100) == 10);
    CHECK(isqrt(u64{1} << 40) == (u64{1} << 20));
    for (u64 n = 0; n < 5000; ++n) {
        u64 r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
    }
}
