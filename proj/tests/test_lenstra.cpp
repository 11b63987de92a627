#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "artin/lenstra.hpp"
#include "oracles.hpp"

using namespace artin;

TEST_CASE("field_degree") {
    GInvariants g2 = g_invariants(2);
    GInvariants g5 = g_invariants(5);
    GInvariants g8 = g_invariants(8);
    CHECK(field_degree(1, 1, g2) == 1);
    CHECK(field_degree(1, 2, g2) == 2);   // Q(sqrt 2)
    CHECK(field_degree(5, 2, g5) == 4);   // sqrt 5 lies in Q(zeta_5)
    CHECK(field_degree(1, 3, g8) == 2);   // rational cube root
    CHECK(field_degree(8, 2, g2) == 4);   // sqrt 2 lies in Q(zeta_8)
    CHECK_THROWS_AS(field_degree(1, 4, g2), NotSquarefree);
    CHECK_THROWS_AS(field_degree(3, 12, g2), NotSquarefree);
}

TEST_CASE("splitting_compatible") {
    GInvariants g2 = g_invariants(2);
    GInvariants g5 = g_invariants(5);
    // a = 1 always splits
    for (u64 m : {1, 3, 5, 8})
        for (u64 k : {1, 2, 3, 6, 10}) {
            i64 gamma2 = density_context(1, m, 2).gamma;
            CHECK(splitting_compatible(1, m, k, g2, gamma2));
        }
    CHECK_FALSE(splitting_compatible(2, 5, 2, g5, density_context(2, 5, 5).gamma));
    CHECK_FALSE(splitting_compatible(2, 3, 3, g2, density_context(2, 3, 2).gamma));
    CHECK_THROWS_AS(splitting_compatible(1, 1, 8, g2, 1), NotSquarefree);
}

TEST_CASE("series terms match the reduced main-term function") {
    // mu(k) eps(m,k) c_a(k) / (k1 phi([m,k])) must equal mu(k) c_a(k)/degree
    // as exact rationals.
    struct Point { u64 a, m; i64 g; };
    for (const Point& pt : {Point{1, 1, 2}, Point{2, 5, 5}, Point{1, 3, 8},
                            Point{3, 8, 2}, Point{7, 12, 12}, Point{5, 8, -8}}) {
        DensityContext ctx = density_context(pt.a, pt.m, pt.g);
        for (u64 k = 1; k <= 1000; ++k) {
            if (mobius(k) == 0) continue;
            SeriesTerm t = series_term(ctx.a, pt.m, k, ctx.ginv, ctx.gamma);
            u64 k1 = k / std::gcd(k, ctx.ginv.h);
            u64 g = std::gcd(pt.m, k);
            u64 lcm = pt.m / g * k;
            u64 phi_lcm = euler_phi(lcm);
            u64 ad = ctx.ginv.delta < 0 ? static_cast<u64>(-ctx.ginv.delta)
                                        : static_cast<u64>(ctx.ginv.delta);
            i64 eps = (k % 2 == 0 && lcm % ad == 0) ? 2 : 1;
            Rational reduced = t.compatible
                ? Rational(mpz_class(mobius(k) * eps),
                           mpz_class(static_cast<long>(k1)) * static_cast<long>(phi_lcm))
                : rational(0);
            reduced.canonicalize();
            CHECK(t.value == reduced);
            CHECK(t.degree == k1 * phi_lcm / static_cast<u64>(eps));
        }
    }
}

TEST_CASE("non-squarefree k cannot contribute") {
    for (u64 k = 1; k <= 500; ++k)
        if (!is_squarefree(k)) CHECK(mobius(k) == 0);
}

TEST_CASE("delta_series encloses the closed form") {
    IntervalReal artin = artin_constant_tight();

    IntervalReal zero_case = delta_series(1, 3, 8, 10000);
    CHECK(zero_case.contains(0.0));

    IntervalReal s255 = delta_series(2, 5, 5, 10000);
    CHECK(s255.contains(density_value(density(2, 5, 5), artin).mid()));

    IntervalReal s112 = delta_series(1, 1, 2, 10000);
    CHECK(s112.contains(density_value(density(1, 1, 2), artin).mid()));

    IntervalReal s382 = delta_series(3, 8, 2, 10000);
    CHECK(s382.contains(density_value(density(3, 8, 2), artin).mid()));

    CHECK_THROWS_AS(delta_series(1, 1, 2, 8), std::invalid_argument);
    CHECK_THROWS_AS(delta_series(2, 4, 2, 1000), NotCoprime);
}

TEST_CASE("monotone enclosure in the truncation point") {
    for (u64 m : {1, 5, 12}) {
        for (u64 a = 1; a <= m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            IntervalReal coarse = delta_series(a, m, 2, 1000);
            IntervalReal fine = delta_series(a, m, 2, 10000);
            CHECK(coarse.overlaps(fine));
            CHECK(fine.width() < coarse.width());
            double closed = density_value(density(a, m, 2), artin_constant_tight()).mid();
            CHECK(coarse.contains(closed));
            CHECK(fine.contains(closed));
        }
    }
}
