// Quadratic approximant polynomials attached to an extremal sequence, roots
// nearest to xi with certified enclosures and measured approximation
// exponents, an exhaustive low-height degree<=2 spectrum search, and the
// monic cubic construction driven by fractional parts of y_{k,0} xi^3.

#ifndef EXTREMAL_APPROXIMANTS_HPP
#define EXTREMAL_APPROXIMANTS_HPP

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <vector>

#include "extremal/interval.hpp"
#include "extremal/numeric.hpp"
#include "extremal/poly.hpp"
#include "extremal/sequence.hpp"

namespace extremal {

struct AlgebraicApproximant {
    IntPoly defining;      // primitive irreducible factor vanishing at the root
    RatInterval enclosure; // contains exactly one real root of `defining`
    Int height;
    int degree = 0;
};

// det [[1, T, T^2], [row1], [row2]] expanded along the first row.
inline IntPoly row_determinant_poly(const Triple& row1, const Triple& row2) {
    return {row1.x1 * row2.x2 - row1.x2 * row2.x1,
            -(row1.x0 * row2.x2 - row1.x2 * row2.x0),
            row1.x0 * row2.x1 - row1.x1 * row2.x0};
}

// Quadratic approximant with rows y_k, y_{k+1}.
inline IntPoly qk_poly(ExtremalSequence& seq, long k) {
    if (k < 1) throw ValidationError("qk_poly requires k >= 1");
    return row_determinant_poly(seq.y(k), seq.y(k + 1));
}

// Real root of p closest to xi, with the primitive irreducible factor
// vanishing there and its height.
inline AlgebraicApproximant root_near_xi(const IntPoly& p, XiEnclosure xi,
                                         long level_cap = XiEnclosure::kDefaultLevelCap) {
    if (p.degree() < 1) throw ValidationError("root_near_xi requires a nonconstant polynomial");
    auto refine = [&]() -> std::optional<RatInterval> {
        if (xi.level() >= level_cap) return std::nullopt;
        xi.refine();
        return xi.interval();
    };
    NearestRoot nr = nearest_real_root(p, xi.interval(), refine);
    IntPoly def = irreducible_factor_at(p, nr.enclosure);
    RatInterval enc = nr.enclosure;
    if (def.degree() == 1) {
        // rational root: report it exactly
        Rat r(-def.coeff(0), def.coeff(1));
        r.canonicalize();
        return {def, RatInterval::point(r), def.height(), 1};
    }
    // Present the enclosure as a sign-change bracket (or an exact point).
    int slo = sign(def.eval(enc.lo)), shi = sign(def.eval(enc.hi));
    if (slo == 0)
        enc = RatInterval(enc.lo, enc.lo);
    else if (shi == 0)
        enc = RatInterval(enc.hi, enc.hi);
    else if (slo == shi)
        throw Error("root_near_xi: enclosure does not bracket a sign change");
    return {def, enc, def.height(), def.degree()};
}

// Certified interval for |xi - alpha|, refining xi until the relative width
// of the bracket is small.
inline RatInterval approximant_distance(const AlgebraicApproximant& alpha, XiEnclosure xi,
                                        long level_cap = XiEnclosure::kDefaultLevelCap) {
    auto overlap = [&] {
        RatInterval t = xi.interval();
        return !(t.hi < alpha.enclosure.lo || t.lo > alpha.enclosure.hi);
    };
    while (overlap()) {
        if (xi.level() >= level_cap)
            throw PrecisionExhausted("approximant_distance: target overlaps root enclosure");
        xi.refine();
    }
    RatInterval d = root_distance(xi.interval(), alpha.enclosure);
    while (xi.width() * (Int(1) << 16) > d.lo && xi.level() < level_cap) {
        xi.refine();
        d = root_distance(xi.interval(), alpha.enclosure);
    }
    return d;
}

// e = -log|xi - alpha| / log H(alpha), as an outward-rounded interval.
inline RatInterval exponent(const AlgebraicApproximant& alpha, const XiEnclosure& xi,
                            long level_cap = XiEnclosure::kDefaultLevelCap) {
    if (alpha.height <= 1) throw DegenerateHeight();
    RatInterval d = approximant_distance(alpha, xi, level_cap);
    if (sign(d.lo) <= 0) throw PrecisionExhausted("exponent: distance not separated from zero");
    auto [llo, lhi] = log_bounds(d);
    double lh = log_int(alpha.height);
    double pad = 1e-12 * std::fabs(lh) + 1e-300;
    double e_lo = -lhi / (lh + pad), e_hi = -llo / (lh - pad);
    if (e_lo > e_hi) std::swap(e_lo, e_hi);
    return {Rat(e_lo), Rat(e_hi)};
}

// ---------------------------------------------------------------------------
// Exhaustive spectrum of degree <= 2 approximants of bounded height.
// ---------------------------------------------------------------------------

struct SpectrumEntry {
    IntPoly defining; // primitive, leading coefficient positive
    int degree = 0;
    Int height;
    RatInterval root;
    RatInterval dist;
    double exponent = 0; // -log(dist)/log(H); 0 when H = 1
};

struct QuadraticSpectrumReport {
    std::vector<SpectrumEntry> best;          // closest roots, ascending distance
    std::optional<SpectrumEntry> floor_entry; // minimizer of dist * H^4, exclusions applied
    double min_dist_h4 = 0;
};

namespace specdetail {

// sqrt of a non-negative integer as a shrinking rational interval.
inline RatInterval sqrt_interval(const Int& v, int bits) {
    if (sign(v) < 0) throw ValidationError("sqrt_interval: negative argument");
    Int s = isqrt(v);
    if (s * s == v) return RatInterval::point(Rat(s));
    RatInterval r(Rat(s), Rat(s + 1));
    for (int i = 0; i < bits; ++i) {
        Rat mid = r.mid();
        if (mid * mid <= Rat(v))
            r = RatInterval(mid, r.hi);
        else
            r = RatInterval(r.lo, mid);
    }
    return r;
}

struct Candidate {
    long a, b, c;
    int branch; // 0: linear or quadratic "-" root, 1: quadratic "+" root
    double dist_d;
};

} // namespace specdetail

inline QuadraticSpectrumReport quadratic_spectrum(XiEnclosure xi, long h_max, int top_n = 10,
                                                  const std::vector<IntPoly>& exclude = {}) {
    if (h_max < 1 || h_max > 200)
        throw ValidationError("quadratic_spectrum requires 1 <= h_max <= 200");
    xi.refine_to_width(Rat(1, Int(1) << 200));
    RatInterval xv = xi.interval();
    double xd = to_double(xv.mid());

    std::vector<specdetail::Candidate> cands;
    std::vector<double> best_d; // running smallest distances (size <= top_n)
    double floor_d = std::numeric_limits<double>::infinity();
    auto keep_threshold = [&] {
        double t = best_d.size() < static_cast<std::size_t>(top_n)
                       ? std::numeric_limits<double>::infinity()
                       : best_d.back();
        return t * (1 + 1e-9) + 1e-13;
    };
    auto note = [&](long a, long b, long c, int branch, double root_d) {
        double d = std::fabs(xd - root_d);
        double h = static_cast<double>(std::max({std::labs(a), std::labs(b), std::labs(c)}));
        bool keep = false;
        if (d <= keep_threshold()) {
            best_d.insert(std::upper_bound(best_d.begin(), best_d.end(), d), d);
            if (best_d.size() > static_cast<std::size_t>(top_n)) best_d.pop_back();
            keep = true;
        }
        double fh = d * h * h * h * h;
        if (fh <= floor_d * (1 + 1e-9) + 1e-13) {
            floor_d = std::min(floor_d, fh);
            keep = true;
        }
        if (keep) cands.push_back({a, b, c, branch, d});
    };

    for (long a = 0; a <= h_max; ++a) {
        long b_lo = (a == 0) ? 1 : -h_max;
        for (long b = b_lo; b <= h_max; ++b) {
            for (long c = -h_max; c <= h_max; ++c) {
                long g = std::gcd(std::labs(a), std::gcd(std::labs(b), std::labs(c)));
                if (g != 1) continue;
                if (a == 0) {
                    note(a, b, c, 0, -static_cast<double>(c) / static_cast<double>(b));
                    continue;
                }
                long long disc = static_cast<long long>(b) * b - 4LL * a * c;
                if (disc <= 0) continue;
                auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(disc))));
                if (r * r == disc || (r + 1) * (r + 1) == disc || (r - 1) * (r - 1) == disc)
                    continue; // reducible quadratic
                double s = std::sqrt(static_cast<double>(disc));
                note(a, b, c, 0, (-b - s) / (2.0 * a));
                note(a, b, c, 1, (-b + s) / (2.0 * a));
            }
        }
    }

    // Exact confirmation of the survivors.
    struct Exact {
        SpectrumEntry entry;
        bool excluded = false;
    };
    std::vector<Exact> exact;
    double d_cut = keep_threshold();
    for (const specdetail::Candidate& cd : cands) {
        double h = static_cast<double>(
            std::max({std::labs(cd.a), std::labs(cd.b), std::labs(cd.c)}));
        bool near = cd.dist_d <= d_cut;
        bool floorish = cd.dist_d * h * h * h * h <= floor_d * (1 + 1e-9) + 1e-13;
        if (!near && !floorish) continue;
        Exact e;
        SpectrumEntry& s = e.entry;
        if (cd.a == 0) {
            Int num(-cd.c), den(cd.b);
            if (sign(den) < 0) {
                num = -num;
                den = -den;
            }
            s.defining = IntPoly{-num, den}.primitive_part();
            s.degree = 1;
            Rat r(num, den);
            r.canonicalize();
            s.root = RatInterval::point(r);
        } else {
            s.defining = IntPoly{Int(cd.c), Int(cd.b), Int(cd.a)};
            s.degree = 2;
            Int disc = Int(cd.b) * Int(cd.b) - 4 * Int(cd.a) * Int(cd.c);
            RatInterval sq = specdetail::sqrt_interval(disc, 150);
            if (cd.branch == 0) sq = -sq;
            s.root = (sq - Rat(Int(cd.b))) * Rat(Int(1), Int(2) * Int(cd.a));
        }
        s.height = s.defining.height();
        s.dist = dist_interval(xv, s.root);
        if (s.height >= 2 && sign(s.dist.lo) > 0) {
            auto [llo, lhi] = log_bounds(s.dist);
            s.exponent = -(llo + lhi) / 2 / log_int(s.height);
        }
        for (const IntPoly& ex : exclude)
            if (ex.primitive_part() == s.defining) e.excluded = true;
        exact.push_back(std::move(e));
    }

    std::sort(exact.begin(), exact.end(),
              [](const Exact& u, const Exact& v) { return u.entry.dist.lo < v.entry.dist.lo; });

    QuadraticSpectrumReport rep;
    for (const Exact& e : exact) {
        if (rep.best.size() >= static_cast<std::size_t>(top_n)) break;
        rep.best.push_back(e.entry);
    }
    rep.min_dist_h4 = std::numeric_limits<double>::infinity();
    Rat h4_best;
    for (const Exact& e : exact) {
        if (e.excluded) continue;
        Rat h4 = Rat(e.entry.height);
        h4 = h4 * h4;
        h4 = h4 * h4;
        Rat v = e.entry.dist.hi * h4;
        if (!rep.floor_entry || v < h4_best) {
            h4_best = v;
            rep.floor_entry = e.entry;
            rep.min_dist_h4 = to_double(v);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Cubic fractional-part experiments and the monic cubic construction.
// ---------------------------------------------------------------------------

struct CubicCriterionRecord {
    long k = 0;
    Int d_k;
    Int ell;
    Int n_prev, n_k, n_next; // nearest integers to y_{j,0} xi^3 / ell
    RatInterval frac;        // distance of y_{k,0} xi^3 / ell to its nearest integer
    double delta = 0;        // -log(frac.hi) / log(Y_k)
};

inline CubicCriterionRecord cubic_frac(ExtremalSequence& seq, long k, const Int& ell,
                                       const Rat& tol = Rat(1, 1000000),
                                       long level_cap = XiEnclosure::kDefaultLevelCap) {
    if (k < 1) throw ValidationError("cubic_frac requires k >= 1");
    if (sign(ell) <= 0) throw ValidationError("ell must be positive");
    if (ell % abs_int(seq.d(k - 1)) != 0)
        throw ValidationError("ell must be divisible by |d_{k-1}|");

    XiEnclosure xi(seq, k + 3);
    auto scaled = [&](long j) {
        Rat f(seq.y(j).x0, ell);
        f.canonicalize();
        return cube(xi.interval()) * f;
    };
    auto settle = [&](long j, Int& n_out) {
        while (true) {
            RatInterval v = scaled(j);
            Int n = round_rat(v.mid());
            Rat half(1, 2);
            if (v.lo > Rat(n) - half && v.hi < Rat(n) + half && v.width() <= tol) {
                n_out = n;
                return abs_interval(v - Rat(n));
            }
            if (xi.level() >= level_cap)
                throw PrecisionExhausted("cubic_frac: enclosure cap at k=" + std::to_string(k));
            xi.refine();
        }
    };

    CubicCriterionRecord rec;
    rec.k = k;
    rec.d_k = seq.d(k);
    rec.ell = ell;
    settle(k - 1, rec.n_prev);
    rec.frac = settle(k, rec.n_k);
    settle(k + 1, rec.n_next);
    double lf = to_double(rec.frac.hi) > 0 ? std::log(to_double(rec.frac.hi)) : -700.0;
    rec.delta = -lf / log_int(seq.Y(k));
    return rec;
}

struct CubicConstruction {
    IntPoly P; // monic integral cubic
    AlgebraicApproximant alpha;
    RatInterval theta; // measured exponent of alpha
    CubicCriterionRecord record;
    Int identity_constant; // value of y_{k,0} A + y_{k-1,0} B + y_{k+1,0} C
};

inline CubicConstruction cubic_integer_poly(ExtremalSequence& seq, long k,
                                            long level_cap = XiEnclosure::kDefaultLevelCap) {
    if (k < 2) throw ValidationError("cubic_integer_poly requires k >= 2");
    IntPoly A = row_determinant_poly(seq.y(k - 1), seq.y(k + 1));
    IntPoly B = qk_poly(seq, k);     // rows y_k, y_{k+1}
    IntPoly C = qk_poly(seq, k - 1); // rows y_{k-1}, y_k

    IntPoly combo = A * seq.y(k).x0 - B * seq.y(k - 1).x0 - C * seq.y(k + 1).x0;
    if (combo.degree() > 0) throw IdentityFailure("combination is not a constant polynomial");
    Int c0 = combo.coeff(0);
    if (c0 == 0 || abs_int(c0) != abs_int(seq.d(k - 1)))
        throw IdentityFailure("constant differs from d_{k-1} in absolute value");

    Int ell = seq.seed().ell();
    if (ell % c0 != 0) throw IdentityFailure("ell not divisible by the identity constant");
    Int m = ell / c0;

    CubicConstruction out;
    out.identity_constant = c0;
    out.record = cubic_frac(seq, k, ell, Rat(1, 1000000), level_cap);
    out.P = IntPoly{Int(0), Int(0), Int(0), Int(1)} -
            (A * out.record.n_k - B * out.record.n_prev - C * out.record.n_next) * m;
    if (out.P.degree() != 3 || out.P.coeff(3) != 1)
        throw IdentityFailure("constructed polynomial is not monic of degree 3");
    XiEnclosure xi(seq, k + 3);
    out.alpha = root_near_xi(out.P, xi, level_cap);
    out.theta = exponent(out.alpha, xi, level_cap);
    return out;
}

struct SurveyRow {
    long k = 0;
    double frac = 0;  // midpoint of the certified fractional-part interval
    double delta = 0;
    double theta = 0;
    double bound_ratio = 0; // (gamma^2 + delta/gamma) / (1 - delta)
};

struct ExponentSurvey {
    std::vector<SurveyRow> rows;
    double theta_min = 0, theta_max = 0;
    double theta_floor = kGoldenRatio * kGoldenRatio + 1; // gamma^2 + 1
};

inline ExponentSurvey exponent_survey(ExtremalSequence& seq, long k_lo, long k_hi,
                                      long level_cap = XiEnclosure::kDefaultLevelCap) {
    if (k_lo < 2 || k_hi < k_lo) throw ValidationError("exponent_survey requires 2 <= k_lo <= k_hi");
    ExponentSurvey out;
    double g = kGoldenRatio;
    for (long k = k_lo; k <= k_hi; ++k) {
        CubicConstruction c = cubic_integer_poly(seq, k, level_cap);
        SurveyRow row;
        row.k = k;
        row.frac = to_double(c.record.frac.mid());
        row.delta = c.record.delta;
        row.theta = to_double(c.theta.mid());
        row.bound_ratio = (g * g + row.delta / g) / (1 - row.delta);
        out.rows.push_back(row);
        if (out.rows.size() == 1) {
            out.theta_min = out.theta_max = row.theta;
        } else {
            out.theta_min = std::min(out.theta_min, row.theta);
            out.theta_max = std::max(out.theta_max, row.theta);
        }
    }
    return out;
}

} // namespace extremal

#endif
