// Extremal sequences generated from validated seed matrices, with certified
// nested enclosures of the limit ratio xi.

#ifndef EXTREMAL_SEQUENCE_HPP
#define EXTREMAL_SEQUENCE_HPP

#include <cassert>
#include <cstddef>
#include <optional>
#include <vector>

#include "extremal/errors.hpp"
#include "extremal/interval.hpp"
#include "extremal/numeric.hpp"
#include "extremal/triple.hpp"

namespace extremal {

struct SeedPair {
    Mat2 A, B;
    Int det_a, det_b;
    Int trace_jab; // trace(J*A*B); nonzero iff A, B do not commute

    // Checks every hypothesis of the construction: symmetry, unimodularity,
    // non-commutation, A >= 0 entrywise, A*B > 0 entrywise.
    static SeedPair validate(const Mat2& a, const Mat2& b) {
        if (!a.symmetric()) throw NotSymmetric("A");
        if (!b.symmetric()) throw NotSymmetric("B");
        Int da = a.det(), db = b.det();
        if (da != 1 && da != -1) throw NotUnimodular("A", da);
        if (db != 1 && db != -1) throw NotUnimodular("B", db);
        Mat2 ab = a * b;
        Int tjab = (Mat2::j() * ab).trace();
        if (tjab == 0) throw Commuting();
        if (sign(a.a) < 0 || sign(a.b) < 0 || sign(a.c) < 0 || sign(a.d) < 0)
            throw PositivityFailure("entries of A must be non-negative");
        if (sign(ab.a) <= 0 || sign(ab.b) <= 0 || sign(ab.c) <= 0 || sign(ab.d) <= 0)
            throw PositivityFailure("entries of A*B must be positive");
        return SeedPair{a, b, std::move(da), std::move(db), std::move(tjab)};
    }

    // Seed of the Fibonacci continued fraction xi_{a,b}.
    static SeedPair fibonacci(const Int& a, const Int& b) {
        return validate(Mat2{a, 1, 1, 0}, Mat2{b, 1, 1, 0});
    }

    Int ell() const { return abs_int(trace_jab); }
};

// Points y_{-1}, y_0, y_1, ... with y_{-1}=B^{-1}, y_0=I, y_1=A and, for
// k >= 2, y_k = [y_{k-1}, y_{k-1}, y_{k-3}] up to sign.  Every stored point is
// sign-normalized; extension computes both the bracket recurrence and the
// matrix-product recurrence and insists they agree.
class ExtremalSequence {
  public:
    explicit ExtremalSequence(SeedPair seed) : seed_(std::move(seed)) {
        push(to_triple(seed_.B.inverse_unimodular())); // y_{-1}
        push(Triple{1, 0, 1});                         // y_0
        push(to_triple(seed_.A));                      // y_1
    }

    const SeedPair& seed() const { return seed_; }

    long max_computed() const { return static_cast<long>(pts_.size()) - 2; }

    const Triple& y(long k) {
        ensure(k);
        return pts_[static_cast<std::size_t>(k + 1)];
    }

    const Int& Y(long k) {
        ensure(k);
        return norms_[static_cast<std::size_t>(k + 1)];
    }

    // d_k = det3(y_k, y_{k+1}, y_{k+2}) of the stored (normalized) points.
    Int d(long k) { return det3(y(k), y(k + 1), y(k + 2)); }

    void ensure(long k) {
        if (k < -1) throw Error("sequence index must be >= -1");
        while (max_computed() < k) extend_one();
    }

  private:
    void push(const Triple& t) {
        pts_.push_back(sign_normalized(t));
        norms_.push_back(norm_sup(pts_.back()));
    }

    void extend_one() {
        long k = max_computed() + 1; // k >= 2 here
        const Triple& prev = pts_[static_cast<std::size_t>(k)];      // y_{k-1}
        const Triple& prev2 = pts_[static_cast<std::size_t>(k - 1)]; // y_{k-2}
        const Triple& prev3 = pts_[static_cast<std::size_t>(k - 2)]; // y_{k-3}
        Triple via_bracket = sign_normalized(bracket(prev, prev, prev3));
        Mat2 s = (k % 2 != 0) ? seed_.A * seed_.B : seed_.B * seed_.A;
        Triple via_product = sign_normalized(to_triple(prev.matrix() * s * prev2.matrix()));
        if (!(via_bracket == via_product))
            throw Error("recurrence mismatch at k=" + std::to_string(k));
        push(via_bracket);
    }

    SeedPair seed_;
    std::vector<Triple> pts_;  // pts_[i] = y_{i-1}
    std::vector<Int> norms_;
};

// Shrinking rational interval certified to contain xi.  Level k is the
// interval with endpoints y_{k,1}/y_{k,0} and y_{k,2}/y_{k,1}; its width is
// exactly 1/(y_{k,0} y_{k,1}) and levels are nested.
class XiEnclosure {
  public:
    XiEnclosure(ExtremalSequence& seq, long level) : seq_(&seq), level_(level < 2 ? 2 : level) {}

    long level() const { return level_; }
    ExtremalSequence& sequence() const { return *seq_; }

    RatInterval interval() const {
        const Triple& p = seq_->y(level_);
        Rat e1(p.x1, p.x0), e2(p.x2, p.x1);
        e1.canonicalize();
        e2.canonicalize();
        return {e1, e2};
    }

    Rat width() const {
        const Triple& p = seq_->y(level_);
        Rat w(Int(1), p.x0 * p.x1);
        w.canonicalize();
        return w;
    }

    void refine() { ++level_; }

    // Smallest level whose width is <= eps.
    void refine_to_width(const Rat& eps, long level_cap = kDefaultLevelCap) {
        while (width() > eps) {
            if (level_ >= level_cap)
                throw PrecisionExhausted("enclosure width " + width().get_str() +
                                         " above target at level cap");
            ++level_;
        }
    }

    static constexpr long kDefaultLevelCap = 200;

  private:
    ExtremalSequence* seq_;
    long level_;
};

inline XiEnclosure xi_enclosure(ExtremalSequence& seq, const Rat& eps,
                                long level_cap = XiEnclosure::kDefaultLevelCap) {
    if (sign(eps) <= 0) throw ValidationError("eps must be positive");
    XiEnclosure e(seq, 2);
    e.refine_to_width(eps, level_cap);
    return e;
}

inline RatInterval l_value(const Triple& x, const XiEnclosure& xi) {
    return l_value(x, xi.interval());
}

// Exact vector identity of the three-term relation:
//   det3(y_{k-2},y_{k-1},y_k) y_{k+1}
//     = det3(y_{k-2},y_{k-1},y_{k+1}) y_k + det3(y_{k-1},y_k,y_{k+1}) y_{k-2}.
// The check is invariant under the global sign of any point involved.
struct ThreeTermCheck {
    bool ok;
    Triple residual;
};

inline ThreeTermCheck verify_three_term_points(const Triple& a, const Triple& b,
                                               const Triple& c, const Triple& d) {
    Triple lhs = d * det3(a, b, c);
    Triple rhs = c * det3(a, b, d) + a * det3(b, c, d);
    Triple res = lhs - rhs;
    return {res.is_zero(), res};
}

inline ThreeTermCheck verify_three_term(ExtremalSequence& seq, long k) {
    if (k < 3) throw ValidationError("verify_three_term requires k >= 3");
    const Triple a = seq.y(k - 2), b = seq.y(k - 1), c = seq.y(k), d = seq.y(k + 1);
    return verify_three_term_points(a, b, c, d);
}

struct GrowthRow {
    long k;
    std::size_t y_digits;
    double q_k;          // Y_k / Y_{k-1}^gamma, meaningful for k >= 3
    double ly_lo, ly_hi; // certified bounds on L(y_k) * Y_k
    Int det_y;
    Int d_k;
};

struct GrowthReport {
    std::vector<GrowthRow> rows;
    double c1; // sup of Y_k / (Y_{k-2} Y_{k-1}) over 4 <= k <= k_max
    double q3;
    double c2; // max(c1^gamma, q3, q3^-gamma)
};

inline GrowthReport growth_report(ExtremalSequence& seq, long k_max) {
    if (k_max < 4) throw ValidationError("growth_report requires k_max >= 4");
    seq.ensure(k_max + 2);
    GrowthReport rep;
    Rat c1_exact(0);
    for (long k = 4; k <= k_max; ++k) {
        Rat r(seq.Y(k), seq.Y(k - 2) * seq.Y(k - 1));
        r.canonicalize();
        if (r > c1_exact) c1_exact = r;
    }
    rep.c1 = to_double(c1_exact) * (1 + 1e-12);
    for (long k = 0; k <= k_max; ++k) {
        GrowthRow row;
        row.k = k;
        row.y_digits = decimal_digits(seq.Y(k));
        row.q_k = (k >= 3)
                      ? std::exp(log_int(seq.Y(k)) - kGoldenRatio * log_int(seq.Y(k - 1)))
                      : 0.0;
        XiEnclosure xi(seq, std::min(k + 3, k_max + 2));
        RatInterval ly = l_value(seq.y(k), xi) * Rat(seq.Y(k));
        row.ly_lo = to_double(ly.lo);
        row.ly_hi = to_double(ly.hi);
        row.det_y = det_triple(seq.y(k));
        row.d_k = seq.d(k);
        rep.rows.push_back(std::move(row));
    }
    rep.q3 = std::exp(log_int(seq.Y(3)) - kGoldenRatio * log_int(seq.Y(2)));
    rep.c2 = std::max(std::pow(rep.c1, kGoldenRatio),
                      std::max(rep.q3, std::pow(rep.q3, -kGoldenRatio)));
    return rep;
}

} // namespace extremal

#endif
