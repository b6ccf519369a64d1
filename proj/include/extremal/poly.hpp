// Integer polynomials of degree <= 3: heights, content, certified evaluation,
// Sturm-based real root counting, and isolation of the real root nearest a
// target interval.  Root searches are windowed around the target so that the
// cost scales with log(log(1/distance)) rather than with the height of the
// polynomial.

#ifndef EXTREMAL_POLY_HPP
#define EXTREMAL_POLY_HPP

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "extremal/errors.hpp"
#include "extremal/interval.hpp"
#include "extremal/numeric.hpp"

namespace extremal {

class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(Int c0, Int c1, Int c2 = 0, Int c3 = 0)
        : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    const Int& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    Int& coeff(int i) { return c_[static_cast<std::size_t>(i)]; }

    int degree() const {
        for (int i = 3; i >= 0; --i)
            if (c_[static_cast<std::size_t>(i)] != 0) return i;
        return -1;
    }

    bool is_zero() const { return degree() < 0; }

    Int height() const {
        Int h = 0;
        for (const Int& c : c_) h = std::max(h, abs_int(c));
        return h;
    }

    Int content() const {
        Int g = 0;
        for (const Int& c : c_) g = gcd(g, c);
        return g;
    }

    // Content removed and leading coefficient made positive.
    IntPoly primitive_part() const {
        Int g = content();
        if (g == 0) return {};
        int d = degree();
        if (sign(c_[static_cast<std::size_t>(d)]) < 0) g = -g;
        IntPoly r;
        for (int i = 0; i < 4; ++i) r.coeff(i) = c_[static_cast<std::size_t>(i)] / g;
        return r;
    }

    IntPoly derivative() const {
        return {c_[1], 2 * c_[2], 3 * c_[3], Int(0)};
    }

    Rat eval(const Rat& t) const {
        Rat acc(c_[3]);
        for (int i = 2; i >= 0; --i) acc = acc * t + Rat(c_[static_cast<std::size_t>(i)]);
        return acc;
    }

    RatInterval eval(const RatInterval& t) const {
        RatInterval acc = RatInterval::point(Rat(c_[3]));
        for (int i = 2; i >= 0; --i)
            acc = acc * t + RatInterval::point(Rat(c_[static_cast<std::size_t>(i)]));
        return acc;
    }

    IntPoly operator+(const IntPoly& o) const {
        return {c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2], c_[3] + o.c_[3]};
    }
    IntPoly operator-(const IntPoly& o) const {
        return {c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2], c_[3] - o.c_[3]};
    }
    IntPoly operator*(const Int& s) const {
        return {c_[0] * s, c_[1] * s, c_[2] * s, c_[3] * s};
    }
    IntPoly operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
    bool operator==(const IntPoly& o) const = default;

  private:
    std::array<Int, 4> c_{Int(0), Int(0), Int(0), Int(0)};
};

inline bool is_perfect_square(const Int& v) {
    return sign(v) >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

inline Int isqrt(const Int& v) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

// Strict bound on the absolute value of every root.
inline Rat cauchy_bound(const IntPoly& p) {
    int d = p.degree();
    if (d <= 0) throw ValidationError("cauchy_bound: constant polynomial");
    Rat b(p.height(), abs_int(p.coeff(d)));
    b.canonicalize();
    return b + 1;
}

namespace polydetail {

using QPoly = std::vector<Rat>; // ascending coefficients, trailing zeros trimmed

inline void trim(QPoly& p) {
    while (!p.empty() && sign(p.back()) == 0) p.pop_back();
}

inline QPoly to_q(const IntPoly& p) {
    QPoly q;
    for (int i = 0; i <= p.degree(); ++i) q.emplace_back(p.coeff(i));
    return q;
}

inline QPoly qderiv(const QPoly& p) {
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    trim(d);
    return d;
}

inline Rat qeval(const QPoly& p, const Rat& t) {
    Rat acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
    return acc;
}

inline QPoly qrem(QPoly a, const QPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

struct Sturm {
    std::vector<QPoly> chain;
};

inline Sturm sturm(const IntPoly& p) {
    Sturm s;
    QPoly cur = to_q(p);
    if (cur.empty()) throw ValidationError("sturm: zero polynomial");
    s.chain.push_back(cur);
    QPoly next = qderiv(cur);
    while (!next.empty()) {
        s.chain.push_back(next);
        QPoly r = qrem(cur, next);
        for (Rat& c : r) c = -c;
        cur = std::move(next);
        next = std::move(r);
    }
    return s;
}

inline int variations(const Sturm& s, const Rat& t) {
    int count = 0, prev = 0;
    for (const QPoly& p : s.chain) {
        int sg = sign(qeval(p, t));
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++count;
        prev = sg;
    }
    return count;
}

// Number of distinct real roots in (a, b].  Requires p(a) != 0 and p(b) != 0.
inline int count_in(const Sturm& s, const Rat& a, const Rat& b) {
    return variations(s, a) - variations(s, b);
}

} // namespace polydetail

// p / gcd(p, p'), primitive with positive leading coefficient.
inline IntPoly squarefree_part(const IntPoly& p) {
    using namespace polydetail;
    int d = p.degree();
    if (d <= 1) return p.primitive_part();
    QPoly a = to_q(p), b = qderiv(a);
    while (!b.empty()) {
        QPoly r = qrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    // a is gcd(p, p') up to a rational factor
    if (a.size() <= 1) return p.primitive_part();
    // exact division in Q[T], then clear denominators
    QPoly num = to_q(p), quo(num.size() - a.size() + 1, Rat(0));
    while (num.size() >= a.size() && !num.empty()) {
        Rat f = num.back() / a.back();
        quo[num.size() - a.size()] = f;
        std::size_t shift = num.size() - a.size();
        for (std::size_t i = 0; i < a.size(); ++i) num[shift + i] -= f * a[i];
        num.pop_back();
        trim(num);
    }
    Int den(1);
    for (const Rat& c : quo) den = lcm(den, c.get_den());
    IntPoly out;
    for (std::size_t i = 0; i < quo.size() && i < 4; ++i) {
        Rat v = quo[i] * Rat(den);
        out.coeff(static_cast<int>(i)) = v.get_num();
    }
    return out.primitive_part();
}

// Smallest-denominator rational in the closed interval [lo, hi], found by an
// iterative Stern-Brocot (continued fraction) descent.  When max_den is set
// and every rational in the interval has a larger denominator, returns
// nullopt; the walk aborts as soon as the convergent denominators (a lower
// bound for any rational continuing the expansion) exceed it.
inline std::optional<Rat> simplest_rational_bounded(Rat lo, Rat hi,
                                                    const std::optional<Int>& max_den) {
    if (lo > hi) std::swap(lo, hi);
    bool negate = false;
    if (sign(lo) <= 0 && sign(hi) >= 0) return Rat(0);
    if (sign(hi) < 0) {
        negate = true;
        Rat t = -lo;
        lo = -hi;
        hi = t;
    }
    // convergent recurrence state for the partial quotients consumed so far
    Int p_prev = 0, q_prev = 1, p = 1, q = 0;
    auto emit = [&](const Rat& tail) {
        // value = (p * tail + p_prev) / (q * tail + q_prev)
        Rat v = (Rat(p) * tail + Rat(p_prev)) / (Rat(q) * tail + Rat(q_prev));
        if (max_den && v.get_den() > *max_den) return std::optional<Rat>();
        return std::optional<Rat>(negate ? Rat(-v) : v);
    };
    while (true) {
        Int fl = floor_rat(lo);
        if (lo == Rat(fl)) return emit(Rat(fl));
        if (Rat(fl + 1) <= hi) return emit(Rat(fl + 1));
        Int p_next = fl * p + p_prev;
        Int q_next = fl * q + q_prev;
        p_prev = std::move(p);
        q_prev = std::move(q);
        p = std::move(p_next);
        q = std::move(q_next);
        if (max_den && q > *max_den) return std::nullopt;
        Rat nlo = Rat(1) / (hi - Rat(fl));
        Rat nhi = Rat(1) / (lo - Rat(fl));
        lo = std::move(nlo);
        hi = std::move(nhi);
    }
}

inline Rat simplest_rational(const Rat& lo, const Rat& hi) {
    return *simplest_rational_bounded(lo, hi, std::nullopt);
}

struct NearestRootOptions {
    int distance_bits = 12;     // relative sharpness of the distance bracket
    long hard_bisection_cap = 3000;
    long target_refine_cap = 120;
    long max_exponent_bits = 1L << 24; // smallest admissible window is 2^-this
};

struct NearestRoot {
    RatInterval enclosure;  // certified to contain exactly one real root of p
    RatInterval target;     // the (possibly refined) target interval actually used
};

// Real root of p nearest to the target interval.  refine_target must return a
// strictly tighter interval (nested) or nullopt when it cannot.  The target is
// assumed to contain a number that is not a root of p (for this project:
// transcendental xi), so refinement eventually separates it from all roots.
inline NearestRoot nearest_real_root(
        const IntPoly& p, RatInterval target,
        const std::function<std::optional<RatInterval>()>& refine_target,
        const NearestRootOptions& opt = {}) {
    using namespace polydetail;
    IntPoly sf = squarefree_part(p);
    if (sf.degree() < 1) {
        if (p.degree() == 2) {
            Int disc = p.coeff(1) * p.coeff(1) - 4 * p.coeff(2) * p.coeff(0);
            throw NoRealRoot(std::move(disc));
        }
        throw ValidationError("nearest_real_root: constant polynomial");
    }
    Sturm st = sturm(sf);
    Rat bound = cauchy_bound(sf);

    long refines = 0;
    auto refine = [&] {
        auto next = refine_target();
        if (!next || ++refines > opt.target_refine_cap)
            throw PrecisionExhausted("nearest_real_root: cannot refine target");
        target = *next;
    };

    // Separate the target from every root of p.
    while (sign(sf.eval(target.lo)) == 0 || sign(sf.eval(target.hi)) == 0 ||
           (target.lo != target.hi && count_in(st, target.lo, target.hi) > 0))
        refine();

    if (count_in(st, -bound, bound) == 0) {
        if (p.degree() == 2) {
            Int disc = p.coeff(1) * p.coeff(1) - 4 * p.coeff(2) * p.coeff(0);
            throw NoRealRoot(std::move(disc));
        }
        throw NoRealRoot(Int(0));
    }

    // Roots within distance t of the given edge, boundary roots included.
    auto cnt_left = [&](const Rat& t) {
        Rat a = target.lo - t;
        int tries = 0;
        Rat nudge = t / (Int(1) << 50);
        Rat aa = a;
        while (sign(sf.eval(aa)) == 0) {
            aa -= nudge;
            if (++tries > 4) throw Error("nearest_real_root: repeated boundary roots");
        }
        return count_in(st, aa, target.lo);
    };
    auto cnt_right = [&](const Rat& t) {
        Rat b = target.hi + t;
        int tries = 0;
        Rat nudge = t / (Int(1) << 50);
        Rat bb = b;
        while (sign(sf.eval(bb)) == 0) {
            bb += nudge;
            if (++tries > 4) throw Error("nearest_real_root: repeated boundary roots");
        }
        return count_in(st, target.hi, bb);
    };

    struct SideResult {
        bool present = false;
        Rat t_lo, t_hi; // nearest root of this side at edge-distance in (t_lo, t_hi]
        int count = 0;  // roots in the bracket
    };

    auto search_side = [&](bool left) {
        auto cnt = left ? std::function<int(const Rat&)>(cnt_left)
                        : std::function<int(const Rat&)>(cnt_right);
        Rat t_cover = bound + abs_rat(target.lo) + abs_rat(target.hi) + 1;
        SideResult res;
        if (cnt(t_cover) == 0) return res;
        res.present = true;
        // Gallop for an exponent window: find t_out with count >= 1 and
        // t_in with count == 0, t_out / t_in = 2.
        Rat t_out, t_in;
        if (cnt(Rat(1)) >= 1) {
            long e = 1;
            Rat t = Rat(1, 2);
            while (cnt(t) >= 1) {
                if (2 * e > opt.max_exponent_bits)
                    throw PrecisionExhausted("nearest_real_root: root too close to target");
                e *= 2;
                t = Rat(1, Int(1) << static_cast<unsigned long>(e));
            }
            // count(2^-e) == 0, count(2^-(e/2)) >= 1: binary search exponent
            long lo_e = e / 2, hi_e = e; // cnt(2^-lo_e) >= 1, cnt(2^-hi_e) == 0
            while (hi_e - lo_e > 1) {
                long mid = lo_e + (hi_e - lo_e) / 2;
                if (cnt(Rat(1, Int(1) << static_cast<unsigned long>(mid))) >= 1)
                    lo_e = mid;
                else
                    hi_e = mid;
            }
            t_out = Rat(1, Int(1) << static_cast<unsigned long>(lo_e));
            t_in = Rat(1, Int(1) << static_cast<unsigned long>(hi_e));
        } else {
            // Nearest root is far out; double the exponent, then binary
            // search it, so huge root magnitudes cost log(log) counts.
            long cover_e = 2;
            while (Rat(Int(1) << static_cast<unsigned long>(cover_e)) < t_cover) cover_e *= 2;
            long lo_e = 0, hi_e = 1; // cnt(2^lo_e) == 0
            while (cnt(Rat(Int(1) << static_cast<unsigned long>(hi_e))) == 0) {
                lo_e = hi_e;
                if (hi_e >= cover_e) throw Error("nearest_real_root: lost side root");
                hi_e = std::min(2 * hi_e, cover_e);
            }
            while (hi_e - lo_e > 1) {
                long mid = lo_e + (hi_e - lo_e) / 2;
                if (cnt(Rat(Int(1) << static_cast<unsigned long>(mid))) == 0)
                    lo_e = mid;
                else
                    hi_e = mid;
            }
            t_out = Rat(Int(1) << static_cast<unsigned long>(hi_e));
            t_in = Rat(Int(1) << static_cast<unsigned long>(lo_e));
        }
        // Sharpen the bracket (t_in, t_out].
        for (int i = 0; i < opt.distance_bits; ++i) {
            Rat mid = (t_in + t_out) / 2;
            if (cnt(mid) >= 1)
                t_out = mid;
            else
                t_in = mid;
        }
        res.t_lo = t_in;
        res.t_hi = t_out;
        res.count = cnt(t_out);
        return res;
    };

    // Bisect the winning bracket until it holds exactly one root.  Deferred
    // to after side selection: the losing side may carry a pair of far
    // conjugate roots whose separation would cost thousands of bisections.
    auto separate_twins = [&](SideResult& s, bool is_left) {
        auto cnt = is_left ? std::function<int(const Rat&)>(cnt_left)
                           : std::function<int(const Rat&)>(cnt_right);
        long extra = 0;
        while (s.count > 1) {
            if (++extra > opt.hard_bisection_cap)
                throw PrecisionExhausted("nearest_real_root: clustered roots");
            Rat mid = (s.t_lo + s.t_hi) / 2;
            if (cnt(mid) >= 1)
                s.t_hi = mid;
            else
                s.t_lo = mid;
            s.count = cnt(s.t_hi);
        }
    };

    SideResult left = search_side(true);
    SideResult right = search_side(false);
    if (!left.present && !right.present) throw Error("nearest_real_root: lost all roots");

    bool pick_left;
    if (!right.present) {
        pick_left = true;
    } else if (!left.present) {
        pick_left = false;
    } else {
        // Edge distances differ by at most the target width; tighten until
        // the comparison is decisive.
        long extra = 0;
        while (true) {
            Rat w = target.width();
            if (left.t_hi + w < right.t_lo) {
                pick_left = true;
                break;
            }
            if (right.t_hi + w < left.t_lo) {
                pick_left = false;
                break;
            }
            if (++extra > opt.hard_bisection_cap)
                throw PrecisionExhausted("nearest_real_root: equidistant roots");
            if (w * 4 > std::min(left.t_lo, right.t_lo)) {
                refine();
                continue;
            }
            auto sharpen = [&](SideResult& s, bool is_left) {
                Rat mid = (s.t_lo + s.t_hi) / 2;
                int c = is_left ? cnt_left(mid) : cnt_right(mid);
                if (c >= 1)
                    s.t_hi = mid;
                else
                    s.t_lo = mid;
            };
            sharpen(left, true);
            sharpen(right, false);
        }
    }

    NearestRoot out;
    if (pick_left) {
        separate_twins(left, true);
        out.enclosure = RatInterval(target.lo - left.t_hi, target.lo - left.t_lo);
    } else {
        separate_twins(right, false);
        out.enclosure = RatInterval(target.hi + right.t_lo, target.hi + right.t_hi);
    }
    out.target = target;
    return out;
}

// Certified interval for the distance between a value known to lie in
// `target` and the root enclosed by `root` (intervals must be disjoint).
inline RatInterval root_distance(const RatInterval& target, const RatInterval& root) {
    if (root.hi < target.lo)
        return {target.lo - root.hi, target.hi - root.lo};
    if (root.lo > target.hi)
        return {root.lo - target.hi, root.hi - target.lo};
    throw Error("root_distance: intervals overlap");
}

// The primitive irreducible factor of p vanishing at the root isolated by
// `enclosure`.  Degree <= 3 only: rational-root detection via the simplest
// rational in a sufficiently narrow enclosure, then a quadratic-factor test.
inline IntPoly irreducible_factor_at(const IntPoly& p, RatInterval enclosure) {
    IntPoly pp = p.primitive_part();
    int d = pp.degree();
    if (d <= 0) throw ValidationError("irreducible_factor_at: constant polynomial");
    if (d == 1) return pp;
    Int lead = abs_int(pp.coeff(d));

    auto linear_from = [](const Rat& r) {
        return IntPoly{-r.get_num(), r.get_den()}.primitive_part();
    };

    if (d == 2) {
        Int disc = pp.coeff(1) * pp.coeff(1) - 4 * pp.coeff(2) * pp.coeff(0);
        if (!is_perfect_square(disc)) return pp; // irreducible over Q
        Int s = isqrt(disc);
        for (int sgn : {-1, 1}) {
            Rat r(-pp.coeff(1) + sgn * s, 2 * pp.coeff(2));
            r.canonicalize();
            if (enclosure.contains(r)) return linear_from(r);
        }
        throw Error("irreducible_factor_at: no rational root inside the enclosure");
    }

    // Cubic.  First: is the enclosed root itself rational?  Shrink the
    // enclosure until at most one rational of denominator <= |lead| fits,
    // then test the simplest rational inside (denominator-bounded walk, so
    // an irrational root with a tight enclosure costs almost nothing).
    IntPoly sf = squarefree_part(pp);
    polydetail::Sturm st = polydetail::sturm(sf);
    Rat limit = Rat(1, 2 * lead * lead);
    long steps = 0;
    while (enclosure.width() >= limit) {
        Rat mid = enclosure.mid();
        if (sign(sf.eval(mid)) == 0) {
            enclosure = RatInterval(mid, mid);
            break;
        }
        if (polydetail::count_in(st, enclosure.lo, mid) > 0)
            enclosure = RatInterval(enclosure.lo, mid);
        else
            enclosure = RatInterval(mid, enclosure.hi);
        if (++steps > 4000) throw PrecisionExhausted("irreducible_factor_at: shrink");
    }
    std::optional<Rat> cand =
        enclosure.width() == 0
            ? std::optional<Rat>(enclosure.lo)
            : simplest_rational_bounded(enclosure.lo, enclosure.hi, lead);
    if (cand && cand->get_den() <= lead && sign(pp.eval(*cand)) == 0) return linear_from(*cand);

    // The enclosed root is irrational.  If pp has a rational root elsewhere,
    // dividing it off leaves the quadratic factor of our root; otherwise a
    // cubic with no linear factor is irreducible.
    auto divide_off = [&](const Rat& r) {
        Int num = r.get_num(), den = r.get_den();
        // pp = (den T - num) * (q2 T^2 + q1 T + q0), integral by Gauss.
        Int q2 = pp.coeff(3) / den;
        Int q1 = (pp.coeff(2) + q2 * num) / den;
        Int q0 = (pp.coeff(1) + q1 * num) / den;
        IntPoly quad{q0, q1, q2};
        IntPoly recombined{-num * q0, den * q0 - num * q1, den * q1 - num * q2, den * q2};
        if (!(recombined == pp)) throw Error("irreducible_factor_at: inexact linear division");
        return quad.primitive_part();
    };

    if (pp.height() <= (Int(1) << 62)) {
        // Small heights: exhaustive real-root isolation, then test each
        // isolated root for rationality.
        Rat m = cauchy_bound(pp);
        std::vector<RatInterval> stack{RatInterval(-m, m)}, isolated;
        long guard = 0;
        while (!stack.empty()) {
            if (++guard > 4000) throw PrecisionExhausted("irreducible_factor_at: isolation");
            RatInterval cur = stack.back();
            stack.pop_back();
            Rat a = cur.lo, b = cur.hi;
            if (sign(sf.eval(a)) == 0) {
                isolated.push_back(RatInterval(a, a));
                a += (b - a) / 1024;
            }
            if (sign(sf.eval(b)) == 0) {
                isolated.push_back(RatInterval(b, b));
                b -= (b - a) / 1024;
            }
            int c = polydetail::count_in(st, a, b);
            if (c == 0) continue;
            if (c == 1) {
                isolated.push_back(RatInterval(a, b));
                continue;
            }
            Rat mid = (a + b) / 2;
            stack.push_back(RatInterval(a, mid));
            stack.push_back(RatInterval(mid, b));
        }
        for (RatInterval iso : isolated) {
            long inner = 0;
            while (iso.width() >= limit) {
                Rat mid = iso.mid();
                if (sign(sf.eval(mid)) == 0) {
                    iso = RatInterval(mid, mid);
                    break;
                }
                if (polydetail::count_in(st, iso.lo, mid) > 0)
                    iso = RatInterval(iso.lo, mid);
                else
                    iso = RatInterval(mid, iso.hi);
                if (++inner > 4000) break;
            }
            std::optional<Rat> r =
                iso.width() == 0 ? std::optional<Rat>(iso.lo)
                                 : simplest_rational_bounded(iso.lo, iso.hi, lead);
            if (r && r->get_den() <= lead && sign(pp.eval(*r)) == 0) return divide_off(*r);
        }
        return pp;
    }

    // Huge heights: a rational root would survive reduction modulo every
    // prime not dividing the leading coefficient, so a single rootless
    // reduction certifies irreducibility.  For an irreducible cubic a
    // positive fraction of primes is rootless, so the scan below fails with
    // probability ~ (2/3)^300; a reducible cubic always reaches the throw.
    Int prime(2);
    for (int tries = 0; tries < 300; ++tries) {
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        unsigned long q = prime.get_ui();
        auto residue = [&](int i) {
            Int r = pp.coeff(i) % static_cast<long>(q);
            if (sign(r) < 0) r += static_cast<long>(q);
            return r.get_ui();
        };
        unsigned long c0 = residue(0), c1 = residue(1), c2 = residue(2), c3 = residue(3);
        if (c3 == 0) continue;
        bool has_root = false;
        for (unsigned long t = 0; t < q && !has_root; ++t)
            has_root = ((c3 * t % q + c2) * t % q + c1) * t % q == (q - c0) % q || c0 == 0;
        if (!has_root) return pp;
    }
    throw PrecisionExhausted("irreducible_factor_at: cannot certify cubic factorization");
}

} // namespace extremal

#endif
