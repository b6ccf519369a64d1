// Certified continued fraction expansion from a refinable enclosure.

#ifndef EXTREMAL_CF_HPP
#define EXTREMAL_CF_HPP

#include <utility>
#include <vector>

#include "extremal/interval.hpp"
#include "extremal/sequence.hpp"

namespace extremal {

// First n partial quotients of xi.  Each floor is certified by refining the
// enclosure until it is unambiguous; hitting the level cap first raises
// PrecisionExhausted.
inline std::vector<Int> cf_expand(XiEnclosure xi, int n,
                                  long level_cap = XiEnclosure::kDefaultLevelCap) {
    if (n < 1) throw ValidationError("cf_expand requires n >= 1");
    while (true) {
        std::vector<Int> out;
        RatInterval x = xi.interval();
        bool ambiguous = false;
        for (int i = 0; i < n; ++i) {
            Int fl = floor_rat(x.lo);
            if (floor_rat(x.hi) != fl) {
                ambiguous = true;
                break;
            }
            out.push_back(fl);
            if (i + 1 == n) break;
            RatInterval frac = x - Rat(fl);
            if (frac.contains_zero()) {
                ambiguous = true; // cannot certify irrational remainder yet
                break;
            }
            x = reciprocal(frac);
        }
        if (!ambiguous) return out;
        if (xi.level() >= level_cap)
            throw PrecisionExhausted("cf_expand: level cap reached before quotient " +
                                     std::to_string(out.size() + 1) + " certified");
        xi.refine();
    }
}

// Convergents p_i/q_i of a partial quotient list (a_0, a_1, ...).
inline std::vector<std::pair<Int, Int>> convergents(const std::vector<Int>& quotients) {
    std::vector<std::pair<Int, Int>> out;
    Int p_prev = 0, q_prev = 1, p = 1, q = 0; // p_{-2}/q_{-2} = 0/1, p_{-1}/q_{-1} = 1/0
    for (const Int& a : quotients) {
        Int p_next = a * p + p_prev;
        Int q_next = a * q + q_prev;
        p_prev = std::exchange(p, std::move(p_next));
        q_prev = std::exchange(q, std::move(q_next));
        out.emplace_back(p, q);
    }
    return out;
}

} // namespace extremal

#endif
