// Brute-force scan for the Davenport-Schmidt minimal point sequence of xi,
// extraction of the independent-triple subsequence, consecutive-subspace
// statistics, and the first minimum of the planar convex body
// |x0| <= X, |x0 xi - x1| <= 1/X.

#ifndef EXTREMAL_MINIMAL_POINTS_HPP
#define EXTREMAL_MINIMAL_POINTS_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "extremal/interval.hpp"
#include "extremal/sequence.hpp"
#include "extremal/triple.hpp"

namespace extremal {

struct MinimalPointRecord {
    Triple point;           // x0 >= 1, x1/x2 the certified nearest integers
    RatInterval l_interval; // certified interval for L(point)
};

namespace detail {

// Double-double value; enough head room to prefilter |x0 xi - n| down to
// ~1e-18 absolute before falling back to exact arithmetic.
struct DD {
    double hi = 0, lo = 0;
};

// Split an exact rational into double head + double tail.
inline DD dd_split(const Rat& v) {
    DD r;
    r.hi = to_double(v);
    Rat head;
    mpq_set_d(head.get_mpq_t(), r.hi);
    r.lo = to_double(Rat(v - head));
    return r;
}

// Signed distance of x0 * v to its nearest integer, where v is held as a DD.
inline double frac_near(double x0, const DD& v) {
    double p = x0 * v.hi;
    double err = std::fma(x0, v.hi, -p);
    double tail = err + x0 * v.lo;
    double n = std::nearbyint(p + tail);
    return (p - n) + tail;
}

// Certified nearest integer to x0 * [lo, hi]; empty optional when ambiguous.
inline bool certified_nearest(const Int& x0, const RatInterval& v, Int& out) {
    RatInterval scaled = v * Rat(x0);
    Int n = round_rat(scaled.mid());
    Rat half(1, 2);
    if (scaled.lo > Rat(n) - half && scaled.hi < Rat(n) + half) {
        out = std::move(n);
        return true;
    }
    return false;
}

} // namespace detail

// Running strict minima of L over x0 = 1..x_max with x1, x2 the certified
// nearest integers to x0 xi, x0 xi^2.  A float prefilter discards candidates
// that are certifiably far from the current record; only near-record
// candidates are confirmed exactly.
inline std::vector<MinimalPointRecord> minimal_points(
        XiEnclosure xi, long x_max, long level_cap = XiEnclosure::kDefaultLevelCap) {
    if (x_max < 1) throw ValidationError("x_max must be >= 1");

    // Deep fixed enclosure keeps nearest-integer decisions unambiguous in
    // practice; individual decisions still refine on demand.
    Rat deep = Rat(1, Int(1) << 200);
    xi.refine_to_width(deep, level_cap);

    RatInterval xii = xi.interval();
    detail::DD xd = detail::dd_split(xii.mid());
    detail::DD xd2 = detail::dd_split(square(xii).mid());

    std::vector<MinimalPointRecord> records;
    double rec_hi_d = std::numeric_limits<double>::infinity();

    auto exact_candidate = [&](const Int& x0) {
        Int n1, n2;
        while (!detail::certified_nearest(x0, xi.interval(), n1) ||
               !detail::certified_nearest(x0, square(xi.interval()), n2)) {
            if (xi.level() >= level_cap)
                throw PrecisionExhausted("minimal_points: nearest-integer decision at x0=" +
                                         x0.get_str());
            xi.refine();
        }
        Triple cand{x0, n1, n2};
        RatInterval l = l_value(cand, xi.interval());
        if (records.empty()) {
            records.push_back({cand, l});
            rec_hi_d = to_double(l.hi);
            return;
        }
        while (true) {
            RatInterval rec = l_value(records.back().point, xi.interval());
            if (l.hi < rec.lo) {
                records.push_back({cand, l});
                rec_hi_d = to_double(l.hi);
                return;
            }
            if (l.lo > rec.hi) return;
            if (xi.level() >= level_cap)
                throw PrecisionExhausted("minimal_points: L comparison at x0=" + x0.get_str());
            xi.refine();
            l = l_value(cand, xi.interval());
        }
    };

    for (long x0 = 1; x0 <= x_max; ++x0) {
        double f1 = detail::frac_near(static_cast<double>(x0), xd);
        double f2 = detail::frac_near(static_cast<double>(x0), xd2);
        double l_d = std::max(std::fabs(f1), std::fabs(f2));
        double margin = 1e-15 * static_cast<double>(x0) + 1e-18;
        if (l_d - margin > rec_hi_d * (1 + 1e-9) + margin) continue;
        exact_candidate(Int(x0));
    }
    return records;
}

struct IndependentTriples {
    std::vector<std::size_t> indices;  // positions i with x_{i-1}, x_i, x_{i+1} independent
    std::vector<Triple> subsequence;   // the points x_i at those positions
};

inline IndependentTriples independent_triples(const std::vector<MinimalPointRecord>& records) {
    IndependentTriples out;
    if (records.size() < 3) return out;
    for (std::size_t i = 1; i + 1 < records.size(); ++i) {
        if (det3(records[i - 1].point, records[i].point, records[i + 1].point) != 0) {
            out.indices.push_back(i);
            out.subsequence.push_back(records[i].point);
        }
    }
    return out;
}

struct SubspaceStatRow {
    std::size_t i;
    Int subspace_height;  // H(V_i) for V_i = <x_i, x_{i+1}>
    bool saturated;
    RatInterval ratio;    // H(V_i) / (||x_{i+1}|| L(x_i))
};

inline std::vector<SubspaceStatRow> subspace_stats(const std::vector<MinimalPointRecord>& records,
                                             const XiEnclosure& xi) {
    if (records.size() < 2) throw ValidationError("subspace_stats requires >= 2 records");
    std::vector<SubspaceStatRow> rows;
    for (std::size_t i = 0; i + 1 < records.size(); ++i) {
        SubspacePlucker p = plucker(records[i].point, records[i + 1].point);
        RatInterval l = l_value(records[i].point, xi);
        RatInterval denom = l * Rat(norm_sup(records[i + 1].point));
        rows.push_back({i, p.height(), p.is_saturated_basis(),
                        RatInterval::point(Rat(p.height())) / denom});
    }
    return rows;
}

// First minimum lambda(X) = min over nonzero (x0,x1) in Z^2 of
// max(|x0|/X, X |x0 xi - x1|).  The minimum over the finite candidate set
// {(0,+-1)} u {(x0, nearest(x0 xi)) : 1 <= x0 <= X} realizes it: |x0| > X
// would give a value > 1 and, for fixed x0, the nearest x1 is optimal.
inline RatInterval first_minimum(XiEnclosure xi, const Rat& big_x,
                                 long level_cap = XiEnclosure::kDefaultLevelCap) {
    if (big_x < 1) throw ValidationError("first_minimum requires X >= 1");
    xi.refine_to_width(Rat(1, Int(1) << 160), level_cap);

    auto value_of = [&](const Int& x0, const Int& n) {
        if (x0 == 0) return RatInterval::point(big_x); // the (0, +-1) candidate
        RatInterval scaled = xi.interval() * Rat(x0);
        return max_interval(RatInterval::point(Rat(x0) / big_x),
                            abs_interval(scaled - Rat(n)) * big_x);
    };

    Int best_x0 = 0, best_n = 1;
    RatInterval best = value_of(best_x0, best_n);
    Int x_floor = floor_rat(big_x);
    detail::DD xd = detail::dd_split(xi.interval().mid());
    double xd_big = to_double(big_x);
    for (Int x0 = 1; x0 <= x_floor; ++x0) {
        double f = detail::frac_near(x0.get_d(), xd);
        double cand_d = std::max(x0.get_d() / xd_big, xd_big * std::fabs(f));
        if (cand_d > to_double(best.hi) * (1 + 1e-9) + 1e-15) continue;
        Int n;
        while (!detail::certified_nearest(x0, xi.interval(), n)) {
            if (xi.level() >= level_cap)
                throw PrecisionExhausted("first_minimum: nearest integer at x0=" + x0.get_str());
            xi.refine();
        }
        // Non-strict comparisons: val.hi <= best.lo certifies val <= best even
        // when the two are an exact tie (e.g. X = 1, where (0,1) and (1,1)
        // both realize the minimum), which strict bounds could never separate.
        while (true) {
            RatInterval val = value_of(x0, n);
            best = value_of(best_x0, best_n);
            if (val.hi <= best.lo) {
                best_x0 = x0;
                best_n = n;
                best = val;
                break;
            }
            if (val.lo >= best.hi) break;
            if (xi.level() >= level_cap)
                throw PrecisionExhausted("first_minimum: comparison at x0=" + x0.get_str());
            xi.refine();
        }
    }
    return value_of(best_x0, best_n);
}

} // namespace extremal

#endif
