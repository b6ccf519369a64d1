// Command-line front end: generates sequence tables, minimal-point scans,
// quadratic/cubic approximant reports, and exponent surveys as deterministic
// CSV or JSON files.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "extremal/approximants.hpp"
#include "extremal/cf.hpp"
#include "extremal/minimal_points.hpp"
#include "extremal/poly.hpp"
#include "extremal/sequence.hpp"
#include "extremal/triple.hpp"
#include "extremal/words.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct IoError : extremal::Error {
    using extremal::Error::Error;
};

struct Config {
    long a = 1, b = 2;
    std::vector<long> mat_a, mat_b; // optional symmetric seed entries x0,x1,x2
    long k_max = 10;
    long x_max = 1000;
    std::string eps = "1e-6";
    long refinement_cap = 200;
    long h_max = 20;
    std::string format = "csv";
    std::string output; // empty: <command>.<ext> in the default output dir
};

// Deterministic rendering of floating values.
std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

using Row = std::vector<std::pair<std::string, std::string>>;

class ReportWriter {
  public:
    ReportWriter(const std::string& command, const Config& cfg) : cfg_(cfg) {
        std::string path = cfg.output;
        if (path.empty()) {
            const char* dir = std::getenv("EXTREMAL_OUTPUT_DIR");
            std::string base = dir && *dir ? std::string(dir) + "/" : std::string();
            path = base + command + (cfg.format == "json" ? ".json" : ".csv");
        }
        out_.open(path, std::ios::binary | std::ios::trunc);
        if (!out_) throw IoError("cannot open output file: " + path);
        header_ = {{"command", command},
                   {"version", kVersion},
                   {"a", std::to_string(cfg.a)},
                   {"b", std::to_string(cfg.b)},
                   {"k_max", std::to_string(cfg.k_max)},
                   {"x_max", std::to_string(cfg.x_max)},
                   {"eps", cfg.eps},
                   {"refinement_cap", std::to_string(cfg.refinement_cap)},
                   {"h_max", std::to_string(cfg.h_max)},
                   {"format", cfg.format}};
        if (cfg.format == "csv")
            for (const auto& [k, v] : header_) out_ << "# " << k << "=" << v << "\n";
    }

    void row(const Row& r) {
        if (cfg_.format == "csv") {
            if (!wrote_header_) {
                for (std::size_t i = 0; i < r.size(); ++i)
                    out_ << (i ? "," : "") << r[i].first;
                out_ << "\n";
                wrote_header_ = true;
            }
            for (std::size_t i = 0; i < r.size(); ++i) out_ << (i ? "," : "") << r[i].second;
            out_ << "\n";
            out_.flush(); // stream rows so partial results survive interruption
        } else {
            nlohmann::ordered_json j;
            for (const auto& [k, v] : r) j[k] = v;
            rows_.push_back(std::move(j));
        }
    }

    void finish() {
        if (cfg_.format == "json") {
            nlohmann::ordered_json doc = nlohmann::ordered_json::array();
            nlohmann::ordered_json head;
            for (const auto& [k, v] : header_) head[k] = v;
            doc.push_back(std::move(head));
            for (auto& r : rows_) doc.push_back(std::move(r));
            out_ << doc.dump(2) << "\n";
        }
        out_.flush();
        if (!out_) throw IoError("write failure on output file");
    }

  private:
    Config cfg_;
    std::ofstream out_;
    Row header_;
    std::vector<nlohmann::ordered_json> rows_;
    bool wrote_header_ = false;
};

extremal::SeedPair make_seed(const Config& cfg) {
    using extremal::Int;
    using extremal::Mat2;
    if (!cfg.mat_a.empty() || !cfg.mat_b.empty()) {
        if (cfg.mat_a.size() != 3 || cfg.mat_b.size() != 3)
            throw extremal::ValidationError("matrix seeds need exactly 3 entries each");
        Mat2 a{Int(cfg.mat_a[0]), Int(cfg.mat_a[1]), Int(cfg.mat_a[1]), Int(cfg.mat_a[2])};
        Mat2 b{Int(cfg.mat_b[0]), Int(cfg.mat_b[1]), Int(cfg.mat_b[1]), Int(cfg.mat_b[2])};
        return extremal::SeedPair::validate(a, b);
    }
    return extremal::SeedPair::fibonacci(Int(cfg.a), Int(cfg.b));
}

void cmd_generate(const Config& cfg) {
    ReportWriter w("generate", cfg);
    extremal::ExtremalSequence seq(make_seed(cfg));
    extremal::GrowthReport rep = extremal::growth_report(seq, std::max(cfg.k_max, 4L));
    for (const extremal::GrowthRow& r : rep.rows) {
        if (r.k > cfg.k_max) break;
        w.row({{"k", std::to_string(r.k)},
               {"Y", seq.Y(r.k).get_str()},
               {"y_digits", std::to_string(r.y_digits)},
               {"q_k", fmt(r.q_k)},
               {"LY_lo", fmt(r.ly_lo)},
               {"LY_hi", fmt(r.ly_hi)},
               {"det_y", r.det_y.get_str()},
               {"d_k", r.d_k.get_str()}});
    }
    w.row({{"k", "summary"},
           {"Y", ""},
           {"y_digits", ""},
           {"q_k", fmt(rep.q3)},
           {"LY_lo", fmt(rep.c1)},
           {"LY_hi", fmt(rep.c2)},
           {"det_y", ""},
           {"d_k", ""}});
    w.finish();
}

void cmd_minimal(const Config& cfg) {
    ReportWriter w("minimal", cfg);
    extremal::ExtremalSequence seq(make_seed(cfg));
    extremal::XiEnclosure xi(seq, 2);
    auto records = extremal::minimal_points(xi, cfg.x_max, cfg.refinement_cap);
    auto indep = extremal::independent_triples(records);
    std::vector<bool> is_indep(records.size(), false);
    for (std::size_t i : indep.indices) is_indep[i] = true;
    auto stats = records.size() >= 2
                     ? extremal::subspace_stats(records, extremal::XiEnclosure(seq, 12))
                     : std::vector<extremal::SubspaceStatRow>{};
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        std::string sh = i < stats.size() ? stats[i].subspace_height.get_str() : "";
        std::string sat = i < stats.size() ? (stats[i].saturated ? "1" : "0") : "";
        w.row({{"i", std::to_string(i)},
               {"x0", r.point.x0.get_str()},
               {"x1", r.point.x1.get_str()},
               {"x2", r.point.x2.get_str()},
               {"L_lo", fmt(extremal::to_double(r.l_interval.lo))},
               {"L_hi", fmt(extremal::to_double(r.l_interval.hi))},
               {"independent", is_indep[i] ? "1" : "0"},
               {"subspace_height", sh},
               {"saturated", sat}});
    }
    w.finish();
}

void cmd_quadratic(const Config& cfg) {
    ReportWriter w("quadratic", cfg);
    extremal::ExtremalSequence seq(make_seed(cfg));
    seq.ensure(cfg.k_max + 3);
    for (long k = 2; k <= cfg.k_max; ++k) {
        extremal::IntPoly q = extremal::qk_poly(seq, k);
        extremal::XiEnclosure xi(seq, std::min(k + 3, cfg.k_max + 3));
        auto alpha = extremal::root_near_xi(q, xi, cfg.refinement_cap);
        auto e = extremal::exponent(alpha, xi, cfg.refinement_cap);
        w.row({{"k", std::to_string(k)},
               {"degree", std::to_string(alpha.degree)},
               {"H_digits", std::to_string(extremal::decimal_digits(alpha.height))},
               {"root", fmt(extremal::to_double(alpha.enclosure.mid()))},
               {"e_lo", fmt(extremal::to_double(e.lo))},
               {"e_hi", fmt(extremal::to_double(e.hi))}});
    }
    w.finish();
}

void cmd_cubic(const Config& cfg) {
    ReportWriter w("cubic", cfg);
    extremal::ExtremalSequence seq(make_seed(cfg));
    for (long k = 2; k <= cfg.k_max; ++k) {
        auto c = extremal::cubic_integer_poly(seq, k, cfg.refinement_cap);
        w.row({{"k", std::to_string(k)},
               {"frac_lo", fmt(extremal::to_double(c.record.frac.lo))},
               {"frac_hi", fmt(extremal::to_double(c.record.frac.hi))},
               {"delta", fmt(c.record.delta)},
               {"theta_lo", fmt(extremal::to_double(c.theta.lo))},
               {"theta_hi", fmt(extremal::to_double(c.theta.hi))},
               {"H_digits", std::to_string(extremal::decimal_digits(c.alpha.height))},
               {"identity", c.identity_constant.get_str()}});
    }
    w.finish();
}

void cmd_exponents(const Config& cfg) {
    ReportWriter w("exponents", cfg);
    extremal::ExtremalSequence seq(make_seed(cfg));
    auto survey = extremal::exponent_survey(seq, 2, cfg.k_max, cfg.refinement_cap);
    for (const extremal::SurveyRow& r : survey.rows) {
        w.row({{"k", std::to_string(r.k)},
               {"frac", fmt(r.frac)},
               {"delta", fmt(r.delta)},
               {"theta", fmt(r.theta)},
               {"bound_ratio", fmt(r.bound_ratio)},
               {"floor", fmt(survey.theta_floor)}});
    }
    w.row({{"k", "summary"},
           {"frac", ""},
           {"delta", ""},
           {"theta", fmt(survey.theta_min)},
           {"bound_ratio", fmt(survey.theta_max)},
           {"floor", fmt(survey.theta_floor)}});
    w.finish();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic experiments on extremal ternary sequences"};
    app.set_config("--config", "", "Read options from a config file");
    app.require_subcommand(1);

    Config cfg;
    std::string command;
    for (const char* name : {"generate", "minimal", "quadratic", "cubic", "exponents"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--a", cfg.a, "seed parameter a");
        sub->add_option("--b", cfg.b, "seed parameter b");
        sub->add_option("--A", cfg.mat_a, "symmetric seed matrix A entries x0,x1,x2")
            ->delimiter(',');
        sub->add_option("--B", cfg.mat_b, "symmetric seed matrix B entries x0,x1,x2")
            ->delimiter(',');
        sub->add_option("--k-max", cfg.k_max, "largest sequence index");
        sub->add_option("--x-max", cfg.x_max, "scan bound for minimal points");
        sub->add_option("--eps", cfg.eps, "target enclosure width");
        sub->add_option("--refinement-cap", cfg.refinement_cap, "enclosure level cap");
        sub->add_option("--h-max", cfg.h_max, "height bound for the spectrum search");
        sub->add_option("--format", cfg.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--output", cfg.output, "output file path");
        sub->callback([name, &command] { command = name; });
    }

    try {
        app.parse(argc, argv);
        if (cfg.k_max < 2 || cfg.x_max < 1 || cfg.refinement_cap < 3 || cfg.h_max < 1)
            throw extremal::ValidationError("caps must be positive (k-max >= 2)");
        if (command == "generate")
            cmd_generate(cfg);
        else if (command == "minimal")
            cmd_minimal(cfg);
        else if (command == "quadratic")
            cmd_quadratic(cfg);
        else if (command == "cubic")
            cmd_cubic(cfg);
        else
            cmd_exponents(cfg);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const extremal::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const extremal::PrecisionExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
