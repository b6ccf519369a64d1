// Acceptance harness: one pass/fail line per criterion, nonzero exit when any
// criterion fails.  Criteria with runtime budgets are timed with a monotonic
// clock; all numeric checks are done at the stated tolerances.

#include <gmpxx.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "extremal/approximants.hpp"
#include "extremal/cf.hpp"
#include "extremal/minimal_points.hpp"
#include "extremal/poly.hpp"
#include "extremal/sequence.hpp"
#include "extremal/triple.hpp"
#include "extremal/words.hpp"

using namespace extremal;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& label, const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << label;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// --- 1: exact bracket/determinant identities on large random coplanar triples
void criterion1() {
    auto t0 = Clock::now();
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(987654321UL);
    auto rnd = [&](unsigned long bits) {
        Int v = rng.get_z_bits(bits);
        if (rng.get_z_bits(1) == 1) v = -v;
        return v;
    };
    auto rnd_triple = [&](unsigned long bits) {
        return Triple{rnd(bits), rnd(bits), rnd(bits)};
    };
    bool ok = true;
    const int n = 1000;
    for (int i = 0; i < n && ok; ++i) {
        // entries up to ~10^3 decimal digits
        unsigned long bits = 256 + static_cast<unsigned long>(i) * 3000 / n;
        Triple x = rnd_triple(bits), y = rnd_triple(bits), w = rnd_triple(bits);
        Triple z = x * rnd(48) + y * rnd(48);
        ok = ok && det3(x, y, z) == 0;
        ok = ok && det3(x, y, z) == det3_trace(x, y, z);
        ok = ok && det3(x, y, w) == det3_trace(x, y, w);
        Triple br = bracket(x, y, z);
        ok = ok && det_triple(br) == det_triple(x) * det_triple(y) * det_triple(z);
        ok = ok && det3(w, y, br) == det_triple(y) * det3(w, z, x);
        ok = ok && det3(x, y, br) == 0;
        ok = ok && bracket(x, y, br) == z * (det_triple(x) * det_triple(y));
    }
    double dt = seconds_since(t0);
    report(1, ok && dt < 10.0,
           "bracket and determinant identities on 1000 coplanar triples",
           "runtime " + std::to_string(dt) + "s < 10s");
}

// --- 2: exact sequence fixtures for seed (1,2)
void criterion2() {
    ExtremalSequence seq(SeedPair::fibonacci(1, 2));
    bool ok = seq.y(2) == Triple{4, 3, 2} && seq.y(3) == Triple{25, 18, 13} &&
              seq.y(4) == Triple{576, 415, 299} && det_triple(seq.y(2)) == -1 &&
              det_triple(seq.y(3)) == 1 && det_triple(seq.y(4)) == -1 &&
              det3(seq.y(2), seq.y(3), seq.y(4)) == 1;
    report(2, ok, "point fixtures y_2, y_3, y_4 and their determinants, seed (1,2)");
}

// --- 3: unimodularity and determinant invariants across seeds, k <= 25
void criterion3() {
    auto t0 = Clock::now();
    bool ok = true;
    const long pairs[4][2] = {{1, 2}, {2, 1}, {1, 3}, {3, 2}};
    for (const auto& p : pairs) {
        ExtremalSequence seq(SeedPair::fibonacci(p[0], p[1]));
        // ensure(25) itself re-derives every point through both recurrences
        // and throws on any disagreement.
        seq.ensure(25);
        Int gap = abs_int(Int(p[0]) - Int(p[1]));
        for (long k = -1; k <= 25 && ok; ++k) ok = abs_int(det_triple(seq.y(k))) == 1;
        for (long k = -1; k <= 23 && ok; ++k) ok = abs_int(seq.d(k)) == gap;
    }
    double dt = seconds_since(t0);
    report(3, ok && dt < 120.0,
           "|det y_k| = 1 and |d_k| = |b-a| for four seeds, k <= 25",
           "runtime " + std::to_string(dt) + "s < 120s");
}

// --- 4: word combinatorics matches the sequence and the continued fraction
void criterion4() {
    SeedPair s = SeedPair::fibonacci(1, 2);
    ExtremalSequence seq(s);
    bool ok = true;
    for (long k = 1; k <= 18 && ok; ++k)
        ok = sign_normalized(to_triple(morphism_image(fibonacci_prefix(k), s))) == seq.y(k);

    std::vector<Int> want{0};
    for (char c : fibonacci_word(49)) want.push_back(c == 'a' ? 1 : 2);
    ok = ok && cf_expand(XiEnclosure(seq, 2), 50) == want;
    report(4, ok, "morphism images equal sequence points; 50 certified partial quotients");
}

// --- 5: growth laws for seed (1,2), k in [5,25]
void criterion5() {
    ExtremalSequence seq(SeedPair::fibonacci(1, 2));
    GrowthReport rep = growth_report(seq, 25);
    bool ok = true;
    double qlo = std::pow(rep.c2, -1.0 / kGoldenRatio);
    for (long k = 5; k <= 25 && ok; ++k) {
        const GrowthRow& r = rep.rows[static_cast<std::size_t>(k)];
        ok = r.q_k >= 0.1 && r.q_k <= 10.0 && r.ly_lo >= 0.01 && r.ly_hi <= 100.0 &&
             r.q_k >= qlo && r.q_k <= rep.c2;
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "c1=%.4f c2=%.4f", rep.c1, rep.c2);
    report(5, ok, "q_k in [0.1,10], L(y_k) Y_k in [0.01,100], proof bound with computed c2",
           buf);
}

// --- 6: minimal-point scan to 1e5 cross-validates the sequence
void criterion6() {
    auto t0 = Clock::now();
    ExtremalSequence seq(SeedPair::fibonacci(1, 2));
    auto records = minimal_points(XiEnclosure(seq, 2), 100000);
    bool ok = !records.empty();
    for (long k = 2; seq.Y(k) <= 100000; ++k) {
        bool found = false;
        for (const auto& r : records) found = found || r.point == seq.y(k);
        ok = ok && found;
    }
    for (std::size_t i = 0; ok && i + 1 < records.size(); ++i)
        ok = plucker(records[i].point, records[i + 1].point).is_saturated_basis();
    double dt = seconds_since(t0);
    report(6, ok && dt < 30.0,
           "scan to 1e5 recovers every sequence point; consecutive pairs saturated",
           "runtime " + std::to_string(dt) + "s < 30s, " +
               std::to_string(records.size()) + " records");
}

// --- 7: quadratic approximants: fixture, scaled values, measured exponents
void criterion7() {
    ExtremalSequence seq(SeedPair::fibonacci(1, 2));
    IntPoly q2 = qk_poly(seq, 2);
    bool ok = q2 == IntPoly{3, -2, -3} || q2 == IntPoly{-3, 2, 3};

    for (long k = 5; k <= 25 && ok; ++k) {
        RatInterval v = abs_interval(qk_poly(seq, k).eval(XiEnclosure(seq, k + 4).interval()))
                        * Rat(seq.Y(k + 2));
        ok = v.lo >= Rat(1, 10) && v.hi <= Rat(10);
    }

    double worst = 0;
    for (long k = 18; k <= 25 && ok; ++k) {
        XiEnclosure xi(seq, k + 3);
        AlgebraicApproximant a = root_near_xi(qk_poly(seq, k), xi);
        RatInterval e = exponent(a, xi);
        double err = std::fabs(to_double(e.mid()) - 2 * kGoldenRatio * kGoldenRatio);
        worst = std::max(worst, err);
        ok = err <= 0.15;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "max |e_k - 5.2361| = %.5f", worst);
    report(7, ok, "Q_2 fixture; |Q_k(xi)| Y_{k+2} in [0.1,10]; e_k near 5.2361 for k >= 18",
           buf);
}

// --- 8: spectrum floor over height <= 60 once the sequence roots are excluded
void criterion8() {
    auto t0 = Clock::now();
    ExtremalSequence seq(SeedPair::fibonacci(1, 2));
    std::vector<IntPoly> exclude;
    for (long k = 2; k <= 8; ++k) exclude.push_back(qk_poly(seq, k));
    QuadraticSpectrumReport rep = quadratic_spectrum(XiEnclosure(seq, 6), 60, 10, exclude);
    // frozen from the exhaustive run; determinism makes this exact
    const double recorded_floor = 2.17;
    bool ok = rep.floor_entry.has_value() && rep.min_dist_h4 > 0 &&
              rep.min_dist_h4 >= recorded_floor;
    double dt = seconds_since(t0);
    char buf[96];
    std::snprintf(buf, sizeof buf, "min dist*H^4 = %.6f >= %.2f, runtime %.1fs < 120s",
                  rep.min_dist_h4, recorded_floor, dt);
    report(8, ok && dt < 120.0, "degree <= 2 spectrum floor at height <= 60", buf);
}

// --- 9: monic cubic construction for k in [5,20]
void criterion9() {
    ExtremalSequence seq(SeedPair::fibonacci(1, 2));
    bool ok = true;
    double monitor_min = 1e300;
    const double recorded_monitor_floor = 1.48;
    const double inv_gamma_cubed = 1.0 / (kGoldenRatio * kGoldenRatio * kGoldenRatio);
    try {
        for (long k = 5; k <= 20 && ok; ++k) {
            CubicConstruction c = cubic_integer_poly(seq, k);
            ok = abs_int(c.identity_constant) == 1 && c.P.degree() == 3 &&
                 c.P.coeff(3) == 1 && to_double(c.theta.mid()) > 0;
            double monitor = to_double(c.record.frac.mid()) *
                             std::exp(inv_gamma_cubed * log_int(seq.Y(k)));
            monitor_min = std::min(monitor_min, monitor);
        }
    } catch (const std::exception& e) {
        ok = false;
        std::cerr << "criterion 9 exception: " << e.what() << "\n";
    }
    ok = ok && monitor_min >= recorded_monitor_floor;
    char buf[96];
    std::snprintf(buf, sizeof buf, "min frac * Y_k^(1/gamma^3) = %.4f >= %.2f",
                  monitor_min, recorded_monitor_floor);
    report(9, ok, "identity constant +-1, monic cubic, theta measured, monitor floor", buf);
}

// --- 10: fractional parts land in (0, 1/2) and spread across bins
void criterion10() {
    ExtremalSequence seq(SeedPair::fibonacci(1, 2));
    bool ok = true;
    int bins[5] = {0, 0, 0, 0, 0};
    for (long k = 2; k <= 25; ++k) {
        CubicCriterionRecord rec = cubic_frac(seq, k, 1);
        double f = to_double(rec.frac.mid());
        ok = ok && f > 0.0 && f < 0.5;
        int b = std::min(4, static_cast<int>(f / 0.1));
        ++bins[b];
    }
    int occupied = 0;
    for (int b : bins) occupied += (b > 0) ? 1 : 0;
    ok = ok && occupied >= 3;
    char buf[96];
    std::snprintf(buf, sizeof buf, "bins %d/%d/%d/%d/%d, %d of 5 occupied", bins[0],
                  bins[1], bins[2], bins[3], bins[4], occupied);
    report(10, ok, "fractional parts in (0,1/2) occupy >= 3 of 5 bins", buf);
}

// --- 11: byte-identical CLI reruns
void criterion11() {
    std::string dir = "/tmp/acceptance_cli_" + std::to_string(::getpid());
    std::system(("mkdir -p " + dir).c_str());
    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return in.good() || in.eof() ? ss.str() : std::string("<read error>");
    };
    auto run = [&](const std::string& args, const std::string& out) {
        std::string cmd = std::string(CLI_PATH) + " " + args + " --output " + out +
                          " >/dev/null 2>&1";
        int status = std::system(cmd.c_str());
        return WIFEXITED(status) && WEXITSTATUS(status) == 0;
    };
    const std::string configs[3] = {
        "generate --a 1 --b 2 --k-max 10",
        "minimal --a 1 --b 2 --x-max 2000",
        "cubic --a 1 --b 2 --k-max 8 --format json",
    };
    bool ok = true;
    for (const std::string& cfg : configs) {
        std::string a = dir + "/a.out", b = dir + "/b.out";
        ok = ok && run(cfg, a) && run(cfg, b);
        std::string ca = slurp(a), cb = slurp(b);
        ok = ok && !ca.empty() && ca == cb;
    }
    std::system(("rm -rf " + dir).c_str());
    report(11, ok, "every CLI command is byte-identical across reruns");
}

} // namespace

int main() {
    auto t0 = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << " (total " << seconds_since(t0) << "s)" << std::endl;
    return failures == 0 ? 0 : 1;
}
