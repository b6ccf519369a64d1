// Exact algebra of symmetric integer triples: a point (x0,x1,x2) of Z^3 is
// identified with the symmetric matrix [[x0,x1],[x1,x2]].  Provides the
// 3x3 determinant, the bracket operation, sup-norm, the height form L and
// subspace heights via order-2 minors.

#ifndef EXTREMAL_TRIPLE_HPP
#define EXTREMAL_TRIPLE_HPP

#include <array>
#include <ostream>

#include "extremal/errors.hpp"
#include "extremal/interval.hpp"
#include "extremal/numeric.hpp"

namespace extremal {

struct Mat2 {
    // [[a, b], [c, d]]
    Int a, b, c, d;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    // J = [[0,1],[-1,0]]
    static Mat2 j() { return {0, 1, -1, 0}; }

    Int det() const { return a * d - b * c; }
    Int trace() const { return a + d; }
    bool symmetric() const { return b == c; }
    Mat2 transpose() const { return {a, c, b, d}; }

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator-() const { return {-a, -b, -c, -d}; }
    bool operator==(const Mat2& o) const = default;

    // Inverse of a unimodular matrix stays integral.
    Mat2 inverse_unimodular() const {
        Int dt = det();
        if (dt == 1) return {d, -b, -c, a};
        if (dt == -1) return {-d, b, c, -a};
        throw NotUnimodular("operand", dt);
    }
};

struct Triple {
    Int x0, x1, x2;

    bool operator==(const Triple& o) const = default;

    Mat2 matrix() const { return {x0, x1, x1, x2}; }

    Triple operator-() const { return {-x0, -x1, -x2}; }
    Triple operator+(const Triple& o) const { return {x0 + o.x0, x1 + o.x1, x2 + o.x2}; }
    Triple operator-(const Triple& o) const { return {x0 - o.x0, x1 - o.x1, x2 - o.x2}; }
    Triple operator*(const Int& s) const { return {x0 * s, x1 * s, x2 * s}; }
    bool is_zero() const { return x0 == 0 && x1 == 0 && x2 == 0; }
};

inline Triple to_triple(const Mat2& m) {
    if (!m.symmetric()) throw NotSymmetric("to_triple operand");
    return {m.a, m.b, m.d};
}

inline std::ostream& operator<<(std::ostream& os, const Triple& t) {
    return os << '(' << t.x0 << ',' << t.x1 << ',' << t.x2 << ')';
}

inline Int det_triple(const Triple& x) { return x.x0 * x.x2 - x.x1 * x.x1; }

inline Int abs_det(const Mat2& m) { return abs_int(m.det()); }

inline Int norm_sup(const Triple& x) {
    return std::max(std::max(abs_int(x.x0), abs_int(x.x1)), abs_int(x.x2));
}

// det of the 3x3 matrix with coordinate rows x, y, z.
inline Int det3(const Triple& x, const Triple& y, const Triple& z) {
    return x.x0 * (y.x1 * z.x2 - y.x2 * z.x1)
         - x.x1 * (y.x0 * z.x2 - y.x2 * z.x0)
         + x.x2 * (y.x0 * z.x1 - y.x1 * z.x0);
}

// Same determinant through the trace form trace(J x J z J y); kept as an
// independent route for cross-checks.
inline Int det3_trace(const Triple& x, const Triple& y, const Triple& z) {
    Mat2 j = Mat2::j();
    return (j * x.matrix() * j * z.matrix() * j * y.matrix()).trace();
}

// [x,y,z] = -x J z J y, defined only when det3(x,y,z) = 0.
inline Triple bracket(const Triple& x, const Triple& y, const Triple& z) {
    Int d = det3(x, y, z);
    if (d != 0) throw NotCoplanar(std::move(d));
    Mat2 j = Mat2::j();
    Mat2 m = -(x.matrix() * j * z.matrix() * j * y.matrix());
    return to_triple(m);
}

// First nonzero coordinate made positive; fixes the global sign of points
// produced only up to sign.
inline Triple sign_normalized(Triple t) {
    int s = sign(t.x0);
    if (s == 0) s = sign(t.x1);
    if (s == 0) s = sign(t.x2);
    return s < 0 ? -t : t;
}

struct SubspacePlucker {
    // 2x2 minors of the 2x3 matrix with rows x, y:
    //   m01 = x0 y1 - x1 y0,  m02 = x0 y2 - x2 y0,  m12 = x1 y2 - x2 y1.
    Int m01, m02, m12;

    bool operator==(const SubspacePlucker& o) const = default;
    SubspacePlucker operator-() const { return {-m01, -m02, -m12}; }

    Int height() const {
        return std::max(std::max(abs_int(m01), abs_int(m02)), abs_int(m12));
    }
    // gcd 1 certifies that the two rows generate the full lattice section.
    bool is_saturated_basis() const { return gcd(m01, m02, m12) == 1; }
};

inline SubspacePlucker plucker(const Triple& x, const Triple& y) {
    SubspacePlucker p{x.x0 * y.x1 - x.x1 * y.x0,
                      x.x0 * y.x2 - x.x2 * y.x0,
                      x.x1 * y.x2 - x.x2 * y.x1};
    if (p.m01 == 0 && p.m02 == 0 && p.m12 == 0) throw DependentRows();
    return p;
}

// L(x) = max(|x0 xi - x1|, |x0 xi^2 - x2|) over a rational enclosure of xi.
inline RatInterval l_value(const Triple& x, const RatInterval& xi) {
    RatInterval x0(Rat(x.x0), Rat(x.x0));
    RatInterval t1 = abs_interval(x0 * xi - RatInterval::point(Rat(x.x1)));
    RatInterval t2 = abs_interval(x0 * square(xi) - RatInterval::point(Rat(x.x2)));
    return max_interval(t1, t2);
}

} // namespace extremal

#endif
