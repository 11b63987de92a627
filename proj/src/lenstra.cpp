#include "artin/lenstra.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "artin/census.hpp"

namespace artin {

namespace {

u64 abs_u64(i64 x) { return x < 0 ? static_cast<u64>(-x) : static_cast<u64>(x); }

void require_squarefree(u64 k) {
    if (k == 0 || !is_squarefree(k))
        throw NotSquarefree("k must be a squarefree positive integer");
}

} // namespace

u64 field_degree(u64 m, u64 k, const GInvariants& ginv) {
    require_squarefree(k);
    if (m == 0) throw std::invalid_argument("field_degree: m must be positive");
    u64 k1 = k / std::gcd(k, ginv.h);
    u64 g = std::gcd(m, k);
    u64 lcm = (m / g) * k;
    // phi([m,k]) phi((m,k)) = phi(m) phi(k)
    u64 phi_lcm = euler_phi(m) / euler_phi(g) * euler_phi(k);
    u64 deg = k1 * phi_lcm;
    if (k % 2 == 0 && lcm % abs_u64(ginv.delta) == 0) deg /= 2;
    return deg;
}

bool splitting_compatible(u64 a, u64 m, u64 k, const GInvariants& ginv, i64 gamma) {
    require_squarefree(k);
    u64 g = std::gcd(m, k);
    if (a % g != 1 % g) return false;
    if (k % 2 == 0) {
        u64 ad = abs_u64(ginv.delta);
        u64 lcm = (m / g) * k;
        if (k % ad != 0 && lcm % ad == 0 && kronecker(gamma, static_cast<i64>(a)) != 1)
            return false;
    }
    return true;
}

SeriesTerm series_term(u64 a, u64 m, u64 k, const GInvariants& ginv, i64 gamma) {
    u64 deg = field_degree(m, k, ginv);
    bool c = splitting_compatible(a, m, k, ginv, gamma);
    int mu = mobius(k);
    Rational value = c ? rational(mu, static_cast<i64>(deg)) : rational(0);
    return {k, c, deg, value};
}

IntervalReal delta_series(u64 a, u64 m, i64 g, u64 max_k) {
    if (max_k < 16)
        throw std::invalid_argument("delta_series: max_k must be >= 16");
    if (m > 10'000'000)
        throw std::invalid_argument("delta_series: m must be <= 1e7");
    DensityContext ctx = density_context(a, m, g); // validates gcd(a,m)=1 and g
    const GInvariants& ginv = ctx.ginv;
    const u64 ad = abs_u64(ginv.delta);
    const u64 h = ginv.h;
    const u64 phi_m = euler_phi(m);
    a = ctx.a;

    // Divisors d | m appear as (m,k); cache phi(d) for the hot loop.
    std::vector<u64> phi_small(m + 1, 0);
    for (u64 d = 1; d <= m; ++d)
        if (m % d == 0) phi_small[d] = euler_phi(d);

    SpfTable spf(max_k);
    IntervalReal sum{0.0, 0.0};
    for (u64 k = 1; k <= max_k; ++k) {
        // factor k; skip non-squarefree, collect mu and phi
        u64 rest = k;
        int sign = 1;
        u64 phi_k = 1;
        bool squarefree = true;
        while (rest > 1) {
            u64 p = spf.spf(rest);
            rest /= p;
            if (rest % p == 0) { squarefree = false; break; }
            sign = -sign;
            phi_k *= p - 1;
        }
        if (!squarefree) continue;

        u64 gm = std::gcd(m, k);
        if (a % gm != 1 % gm) continue;
        u64 lcm = (m / gm) * k;
        bool eps2 = false;
        if (k % 2 == 0) {
            bool delta_div_lcm = (lcm % ad == 0);
            if (k % ad != 0 && delta_div_lcm &&
                kronecker(ctx.gamma, static_cast<i64>(a)) != 1)
                continue;
            eps2 = delta_div_lcm;
        }
        u64 k1 = k / std::gcd(k, h);
        u64 deg = k1 * (phi_m / phi_small[gm] * phi_k);
        if (eps2) deg /= 2;
        sum += interval_ratio(static_cast<double>(sign), static_cast<double>(deg));
    }

    // Tail: sum_{k>N} 2 (k,h) phi((m,k)) / (k phi(k) phi(m))
    //       <= (2 h m / phi(m)) * 2 sqrt(2) / sqrt(N), via phi(k) >= sqrt(k/2).
    IntervalReal root_n{detail::down(std::sqrt(static_cast<double>(max_k))),
                        detail::up(std::sqrt(static_cast<double>(max_k)))};
    IntervalReal root2{detail::down(std::sqrt(2.0)), detail::up(std::sqrt(2.0))};
    IntervalReal tail = interval_ratio(2.0 * static_cast<double>(h) * static_cast<double>(m),
                                       static_cast<double>(phi_m)) *
                        interval_ratio(2.0, 1.0) * root2 *
                        interval_ratio(1.0, root_n.lo);
    double t = tail.hi;
    return sum + IntervalReal{-t, t};
}

} // namespace artin
