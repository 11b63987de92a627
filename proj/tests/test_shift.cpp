#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "artin/shift.hpp"
#include "oracles.hpp"

using namespace artin;

namespace {

struct AB { u64 a; i64 b; };
const std::vector<i64> kG = {2, 5, 8};
const std::vector<AB> kAB = {{1, 2}, {1, -1}, {2, 1}, {3, 2}};

bool div_i(u64 p, i64 v) { return v % static_cast<i64>(p) == 0; }

} // namespace

TEST_CASE("shift_context validation") {
    CHECK_THROWS_AS(shift_context(2, 4, 2), NotCoprime);
    CHECK_THROWS_AS(shift_context(0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(shift_context(1, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(shift_context(1, 2, 16), InvalidG);
    ShiftContext ok = shift_context(3, -2, 2);
    CHECK(ok.ginv.delta == 8);
}

TEST_CASE("gamma_d_data") {
    ShiftContext c2 = shift_context(1, 2, 2);
    DFactorData d1 = gamma_d_data(1, c2);
    CHECK(d1.b_m == 8);
    CHECK(d1.gamma_d == 1);
    DFactorData d2 = gamma_d_data(2, c2);
    CHECK(d2.b_m == 2);
    CHECK(d2.gamma_d == 1);

    ShiftContext c5 = shift_context(1, 1, 5);
    DFactorData d5 = gamma_d_data(5, c5);
    CHECK(d5.b_m == 1);
    CHECK(d5.gamma_d == 5);

    CHECK_THROWS_AS(gamma_d_data(4, c2), NotSquarefree);
    CHECK_THROWS_AS(gamma_d_data(3, shift_context(3, 2, 2)), NotCoprime);
}

TEST_CASE("euler_factor cases") {
    ShiftContext c12 = shift_context(1, 2, 2);
    CHECK(euler_factor(3, c12) == rational(13, 15));
    CHECK(euler_factor(5, c12) == rational(18, 19));
    ShiftContext c811 = shift_context(1, 1, 8);
    CHECK(euler_factor(3, c811) == rational(2, 3)); // p | h, p does not divide a+b

    CHECK_THROWS_AS(euler_factor(2, c12), PreconditionViolated);          // p | delta
    CHECK_THROWS_AS(euler_factor(5, shift_context(1, 5, 2)), PreconditionViolated); // p | b
    CHECK_THROWS_AS(euler_factor(3, shift_context(1, 2, 8)), PreconditionViolated); // p | (a+b, h)
}

TEST_CASE("local factor equals 1 - relative density (criterion grid)") {
    for (i64 g : kG)
        for (AB ab : kAB) {
            ShiftContext ctx = shift_context(ab.a, ab.b, g);
            i64 apb = static_cast<i64>(ab.a) + ab.b;
            for (u64 p : oracle::primes_below(1000)) {
                if (div_i(p, ctx.ginv.delta) || ab.a % p == 0 || div_i(p, ab.b)) continue;
                if (div_i(p, apb) && ctx.ginv.h % p == 0) continue;
                CHECK(factor_identity_check(p, ctx));
            }
        }
}

TEST_CASE("u0 arithmetic (random)") {
    std::mt19937_64 rng(17);
    int done = 0;
    while (done < 1000) {
        u64 a = rng() % 50 + 1;
        i64 b = static_cast<i64>(rng() % 101) - 50;
        u64 d = rng() % 200 + 1;
        if (b == 0 || gcd_abs(b, a) != 1) continue;
        if (!oracle::is_squarefree(d) || std::gcd(a, d) != 1) continue;
        u64 u = shift_residue(a, b, d);
        // (u0(d), d) = (b, d)
        CHECK(std::gcd(u, d) == gcd_abs(b, d));
        for (u64 p : oracle::primes_below(200)) {
            if (d % p != 0) continue;
            // p | u0 iff p | b; p | u0 - 1 iff p | a + b
            CHECK((u % p == 0) == div_i(p, b));
            CHECK(div_i(p, static_cast<i64>(u) - 1) ==
                  div_i(p, static_cast<i64>(a) + b));
        }
        ++done;
    }
}

TEST_CASE("character of u0 matches character of -ab (random)") {
    std::mt19937_64 rng(19);
    for (i64 g : {2, 5, 8, 12, -2, -8, 21, -15}) {
        int done = 0;
        while (done < 300) {
            u64 a = rng() % 50 + 1;
            i64 b = static_cast<i64>(rng() % 101) - 50;
            u64 d = rng() % 100 + 1;
            if (b == 0 || gcd_abs(b, a) != 1) continue;
            if (!oracle::is_squarefree(d) || std::gcd(a, d) != 1) continue;
            ShiftContext ctx = shift_context(a, b, g);
            DFactorData data = gamma_d_data(d, ctx);
            u64 u = shift_residue(a, b, d);
            i64 minus_ab = -static_cast<i64>(a) * b;
            CHECK(kronecker(data.gamma_d, static_cast<i64>(u)) ==
                  kronecker(data.gamma_d, minus_ab));
            ++done;
        }
    }
}

TEST_CASE("euler_product enclosures") {
    ShiftContext ctx = shift_context(1, 2, 2);
    IntervalReal e2 = euler_product(ctx, 100);
    IntervalReal e3 = euler_product(ctx, 1000);
    IntervalReal e4 = euler_product(ctx, 10000);
    CHECK(e2.overlaps(e3));
    CHECK(e3.overlaps(e4));
    CHECK(e4.width() < e3.width());
    CHECK(e2.lo > 0.0);
    CHECK(e2.hi <= 1.0);
    CHECK(e3.lo > 0.0);
    CHECK(e3.hi <= 1.0);
    CHECK_THROWS_AS(euler_product(ctx, 50), std::invalid_argument);

    // thread count must not change the exact partial product
    IntervalReal t1 = euler_product(ctx, 10000, 1);
    IntervalReal t2 = euler_product(ctx, 10000, 2);
    CHECK(t1.lo == t2.lo);
    CHECK(t1.hi == t2.hi);
}

TEST_CASE("residue_sum examples") {
    // g=2, a=1, b=2: no class mod 8 has 4 | c+2, so the sum is the full
    // partition, i.e. Artin's constant itself.
    CHECK(residue_sum(shift_context(1, 2, 2)).q == rational(1));
    // g=2, a=1, b=-1: classes with 4 | c-1 drop out, leaving {3, 7} mod 8.
    Rational expect = density(3, 8, 2).q + density(7, 8, 2).q;
    CHECK(residue_sum(shift_context(1, -1, 2)).q == expect);
    CHECK(expect == rational(1, 2));
    CHECK_THROWS_AS(shift_context(1, 0, 5), std::invalid_argument);
}

TEST_CASE("residue sum equals its Moebius form (criterion grid)") {
    for (i64 g : kG)
        for (AB ab : kAB) {
            ShiftContext ctx = shift_context(ab.a, ab.b, g);
            CHECK(residue_sum(ctx).q == residue_sum_mobius(ctx).q);
        }
    // a couple of odd-discriminant extras
    for (AB ab : kAB) {
        ShiftContext ctx = shift_context(ab.a, ab.b, 21); // delta = 21
        CHECK(residue_sum(ctx).q == residue_sum_mobius(ctx).q);
    }
}

TEST_CASE("shift_leading_constant") {
    ShiftContext ctx = shift_context(1, 2, 2);
    IntervalReal c = shift_leading_constant(ctx, 10000);
    CHECK(c.lo > 0.0);
    CHECK(c.hi < 0.374);
    IntervalReal finer = shift_leading_constant(ctx, 100000);
    CHECK(c.overlaps(finer));
}
