// Shared arbitrary-precision scalar types and small helpers on top of GMP.

#ifndef EXTREMAL_NUMERIC_HPP
#define EXTREMAL_NUMERIC_HPP

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace extremal {

using Int = mpz_class;
using Rat = mpq_class;

inline int sign(const Int& v) { return mpz_sgn(v.get_mpz_t()); }
inline int sign(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }

inline Int abs_int(const Int& v) {
    Int r;
    mpz_abs(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

inline Rat abs_rat(const Rat& v) {
    Rat r;
    mpq_abs(r.get_mpq_t(), v.get_mpq_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b, const Int& c) { return gcd(gcd(a, b), c); }

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floor_rat(const Rat& v) {
    return floor_div(v.get_num(), v.get_den());
}

// Nearest integer; exact half ties round toward +infinity (callers that need
// certified rounding keep the value away from half-integers).
inline Int round_rat(const Rat& v) {
    Rat shifted = v + Rat(1, 2);
    return floor_rat(shifted);
}

inline std::size_t decimal_digits(const Int& v) {
    if (v == 0) return 1;
    // mpz_sizeinbase may overestimate by one; correct against 10^(n-1)
    std::size_t n = mpz_sizeinbase(v.get_mpz_t(), 10);
    if (n > 1) {
        Int p, a;
        mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(n - 1));
        mpz_abs(a.get_mpz_t(), v.get_mpz_t());
        if (a < p) --n;
    }
    return n;
}

// Natural log of a positive integer, accurate to ~1 ulp regardless of size.
inline double log_int(const Int& v) {
    if (sign(v) <= 0) throw std::domain_error("log_int: non-positive argument");
    signed long exp2;
    double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(d) + static_cast<double>(exp2) * M_LN2;
}

inline double log_rat(const Rat& v) {
    if (sign(v) <= 0) throw std::domain_error("log_rat: non-positive argument");
    return log_int(v.get_num()) - log_int(v.get_den());
}

inline double to_double(const Rat& v) { return v.get_d(); }

// Parses plain and scientific decimal literals ("0.25", "1e-6") into an exact
// rational.  Used by the CLI so precision targets round-trip exactly.
inline Rat rat_from_decimal(const std::string& text) {
    std::string s = text;
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        exp10 = std::stol(s.substr(epos + 1));
        s = s.substr(0, epos);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        exp10 -= static_cast<long>(s.size() - dot - 1);
        s.erase(dot, 1);
    }
    if (s.empty() || s == "-" || s == "+") throw std::invalid_argument("bad decimal: " + text);
    Int mant;
    // explicit base 10: the default base-0 parse reads leading zeros as octal
    if (mpz_set_str(mant.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad decimal: " + text);
    Rat r(mant);
    Int pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    if (exp10 < 0)
        r /= Rat(pow10);
    else
        r *= Rat(pow10);
    r.canonicalize();
    return r;
}

inline constexpr double kGoldenRatio = 1.6180339887498948482;

} // namespace extremal

#endif
