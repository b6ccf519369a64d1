// Closed intervals with exact rational endpoints.  All certification in this
// project happens through these; floating point appears only when rendering.

#ifndef EXTREMAL_INTERVAL_HPP
#define EXTREMAL_INTERVAL_HPP

#include <algorithm>
#include <utility>

#include "extremal/errors.hpp"
#include "extremal/numeric.hpp"

namespace extremal {

struct RatInterval {
    Rat lo;
    Rat hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) std::swap(lo, hi);
    }

    static RatInterval point(const Rat& v) { return RatInterval(v, v); }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }

    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains(const RatInterval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
    bool is_positive() const { return sign(lo) > 0; }
    bool is_negative() const { return sign(hi) < 0; }
};

inline RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

inline RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }

inline RatInterval operator-(const RatInterval& a, const RatInterval& b) { return a + (-b); }

inline RatInterval operator+(const RatInterval& a, const Rat& b) { return {a.lo + b, a.hi + b}; }
inline RatInterval operator-(const RatInterval& a, const Rat& b) { return {a.lo - b, a.hi - b}; }

inline RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

inline RatInterval operator*(const RatInterval& a, const Rat& s) {
    return sign(s) >= 0 ? RatInterval{a.lo * s, a.hi * s} : RatInterval{a.hi * s, a.lo * s};
}

inline RatInterval operator*(const Rat& s, const RatInterval& a) { return a * s; }

inline RatInterval square(const RatInterval& a) {
    if (sign(a.lo) >= 0) return {a.lo * a.lo, a.hi * a.hi};
    if (sign(a.hi) <= 0) return {a.hi * a.hi, a.lo * a.lo};
    return {Rat(0), std::max(a.lo * a.lo, a.hi * a.hi)};
}

inline RatInterval cube(const RatInterval& a) {
    return {a.lo * a.lo * a.lo, a.hi * a.hi * a.hi};
}

inline RatInterval abs_interval(const RatInterval& a) {
    if (sign(a.lo) >= 0) return a;
    if (sign(a.hi) <= 0) return -a;
    return {Rat(0), std::max(Rat(-a.lo), a.hi)};
}

inline RatInterval max_interval(const RatInterval& a, const RatInterval& b) {
    return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

// Reciprocal; the interval must not contain zero.
inline RatInterval reciprocal(const RatInterval& a) {
    if (a.contains_zero()) throw Error("reciprocal of interval containing zero");
    return {Rat(1) / a.hi, Rat(1) / a.lo};
}

inline RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    return a * reciprocal(b);
}

// Distance |a - b| as an interval.
inline RatInterval dist_interval(const RatInterval& a, const RatInterval& b) {
    return abs_interval(a - b);
}

// Outward-rounded natural log bounds of a strictly positive interval.
inline std::pair<double, double> log_bounds(const RatInterval& a) {
    if (!a.is_positive()) throw Error("log_bounds: interval not strictly positive");
    double lo = log_rat(a.lo), hi = log_rat(a.hi);
    // pad for the double rounding of log_rat itself
    const double slop = 1e-9 + 1e-12 * (std::abs(lo) + std::abs(hi));
    return {lo - slop, hi + slop};
}

} // namespace extremal

#endif
