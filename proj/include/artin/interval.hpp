#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "artin/rational.hpp"

namespace artin {

/// A pair [lo, hi] guaranteed to contain a true real value.
///
/// Arithmetic is done in double precision and widened outward by one ulp per
/// endpoint after every operation, which dominates the at-most-half-ulp
/// rounding error of the operation itself. Transcendental endpoints (exp,
/// log) are widened by two ulps to cover the documented worst-case libm
/// error on this platform.
struct IntervalReal {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(const IntervalReal& other) const {
        return lo <= other.lo && other.hi <= hi;
    }
    bool overlaps(const IntervalReal& other) const {
        return lo <= other.hi && other.lo <= hi;
    }
};

namespace detail {
inline double down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}
} // namespace detail

inline IntervalReal interval_point(double x) { return {x, x}; }

/// Smallest safe enclosure of an exact rational.
inline IntervalReal interval_of(const Rational& q) {
    if (q == 0) return {0.0, 0.0};
    // mpq_get_d truncates toward zero with error below one ulp.
    double v = q.get_d();
    return {detail::down(v), detail::up(v)};
}

inline IntervalReal interval_ratio(double num, double den) {
    double v = num / den;
    return {detail::down(v), detail::up(v)};
}

inline IntervalReal operator+(IntervalReal x, IntervalReal y) {
    return {detail::down(x.lo + y.lo), detail::up(x.hi + y.hi)};
}

inline IntervalReal operator-(IntervalReal x, IntervalReal y) {
    return {detail::down(x.lo - y.hi), detail::up(x.hi - y.lo)};
}

inline IntervalReal operator*(IntervalReal x, IntervalReal y) {
    double a = x.lo * y.lo, b = x.lo * y.hi, c = x.hi * y.lo, d = x.hi * y.hi;
    return {detail::down(std::min({a, b, c, d})), detail::up(std::max({a, b, c, d}))};
}

inline IntervalReal& operator+=(IntervalReal& x, IntervalReal y) { return x = x + y; }
inline IntervalReal& operator*=(IntervalReal& x, IntervalReal y) { return x = x * y; }

inline IntervalReal mul(const Rational& q, IntervalReal x) {
    return interval_of(q) * x;
}

inline IntervalReal exp_interval(IntervalReal x) {
    double lo = std::exp(x.lo), hi = std::exp(x.hi);
    return {detail::down(detail::down(lo)), detail::up(detail::up(hi))};
}

/// Requires x.lo > 0.
inline IntervalReal log_interval(IntervalReal x) {
    double lo = std::log(x.lo), hi = std::log(x.hi);
    return {detail::down(detail::down(lo)), detail::up(detail::up(hi))};
}

inline IntervalReal hull(IntervalReal x, IntervalReal y) {
    return {std::min(x.lo, y.lo), std::max(x.hi, y.hi)};
}

} // namespace artin
