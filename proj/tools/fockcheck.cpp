// fockcheck: command-line surface over the verification library. Subcommands
// run the acceptance suite (verify), emit sequence tables (seq), sweep the
// local inequality (bound), probe the sharpness ratio (sharpness), and check
// level-set dominance (bathtub). Output is CSV or JSON, byte-stable across
// runs for identical flags.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fock/inequality.hpp"
#include "fock/report.hpp"
#include "fock/sequences.hpp"
#include "fock/verify.hpp"

namespace {

constexpr int kUsageError = 2;

constexpr const char* kNormalizationNote =
    "s = alpha*(r_hi^2 - r_lo^2); bound = (1-exp(-(n+1)s))*||f||^2";

double uniform01(std::mt19937& rng) { return rng() * (1.0 / 4294967296.0); }

double parse_alpha(const std::string& text) {
    if (text == "pi") return M_PI;
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size() || !(value > 0.0))
        throw CLI::ValidationError("--alpha expects a positive number or 'pi'");
    return value;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string tok = text.substr(pos, comma - pos);
        const std::size_t dots = tok.find("..");
        if (dots != std::string::npos) {
            const int lo = std::stoi(tok.substr(0, dots));
            const int hi = std::stoi(tok.substr(dots + 2));
            if (hi < lo) throw CLI::ValidationError("range '" + tok + "' is inverted");
            for (int v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            out.push_back(std::stoi(tok));
        }
        pos = comma + 1;
    }
    if (out.empty()) throw CLI::ValidationError("empty integer list");
    return out;
}

std::vector<double> parse_real_list(const std::string& text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(std::stod(text.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (out.empty()) throw CLI::ValidationError("empty list of reals");
    return out;
}

std::vector<std::pair<double, double>> parse_annulus_list(const std::string& text) {
    std::vector<std::pair<double, double>> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string tok = text.substr(pos, comma - pos);
        const std::size_t colon = tok.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("annulus '" + tok + "' must look like lo:hi");
        const double lo = std::stod(tok.substr(0, colon));
        const double hi = std::stod(tok.substr(colon + 1));
        if (!(lo >= 0.0) || !(hi > lo))
            throw CLI::ValidationError("annulus '" + tok + "' must satisfy 0 <= lo < hi");
        out.emplace_back(lo, hi);
        pos = comma + 1;
    }
    return out;
}

// Monomial tokens: "1", "z", "z3", "z12".
fock::PolynomialF parse_monomial(const std::string& text) {
    if (text == "1") return fock::PolynomialF({std::complex<double>(1.0)});
    if (!text.empty() && text.front() == 'z') {
        const std::string deg = text.substr(1);
        const int m = deg.empty() ? 1 : std::stoi(deg);
        if (m >= 0 && m <= 150) return fock::PolynomialF::monomial(m);
    }
    throw CLI::ValidationError("--f expects a monomial token like 1, z, z3");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + out_path);
    file << text;
}

struct CommonFlags {
    std::string format = "csv";
    std::string out_path;
    bool stamp = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out_path, "write output to a file instead of stdout");
        cmd->add_flag("--stamp", stamp, "add a timestamp line to the header");
    }

    void emit_table(const fock::Table& table) const {
        emit(format == "json" ? table.to_json(stamp) : table.to_csv(stamp), out_path);
    }
};

int cmd_verify(const fock::VerifyOptions& options, const CommonFlags& flags) {
    const fock::VerificationReport report = fock::run_verification(options);
    emit(flags.format == "json" ? report.to_json(flags.stamp) : report.to_csv(flags.stamp),
         flags.out_path);
    return report.exit_code();
}

int cmd_seq(int n, int kmax, const CommonFlags& flags) {
    if (kmax < n) {
        std::cerr << "seq: --kmax must be >= --n\n";
        return kUsageError;
    }
    if (kmax > fock::kMaxSequenceIndex) {
        std::cerr << "seq: --kmax is limited to " << fock::kMaxSequenceIndex
                  << " (doubled error-estimate rule must stay within order 256)\n";
        return kUsageError;
    }
    fock::Table table("seq.v1",
                      {"n", "k", "a_quad", "a_rec", "error_estimate", "lower", "below_one",
                       "above_lower", "above_lower_shifted", "cross_check_flagged", "status"});
    table.set_meta("normalization", kNormalizationNote);
    table.set_meta("lower", "k/(k+1) at the record's own argument k; the shifted convention "
                            "(k-n)/(k-n+1) is the extra flag column");
    bool any_failure = false;
    for (const auto& rec : fock::threshold_scan(n, kmax)) {
        // A tripped cancellation detector fails the run just like a violation.
        any_failure = any_failure || rec.status == fock::ScanStatus::kViolation ||
                      rec.cross_check_flagged;
        table.add_row({std::to_string(rec.n), std::to_string(rec.k),
                       fock::format_number(rec.a_quad), fock::format_number(rec.a_rec),
                       fock::format_number(rec.a_quad_error), fock::format_number(rec.lower),
                       rec.below_one ? "true" : "false", rec.above_lower ? "true" : "false",
                       rec.above_lower_shifted ? "true" : "false",
                       rec.cross_check_flagged ? "true" : "false",
                       std::string(fock::to_string(rec.status))});
    }
    flags.emit_table(table);
    return any_failure ? 1 : 0;
}

int cmd_bound(int n, double alpha, const std::vector<int>& ms,
              const std::vector<std::pair<double, double>>& domains, const CommonFlags& flags) {
    fock::Table table("bound.v1",
                      {"n", "alpha", "m", "r_lo", "r_hi", "s", "mass", "bound", "margin", "status"});
    table.set_meta("normalization", kNormalizationNote);
    const fock::FockParams params(alpha, n);
    bool any_violation = false;
    for (int m : ms) {
        if (m < n) {
            std::cerr << "bound: every m must be >= n\n";
            return kUsageError;
        }
        const fock::PolynomialF f = fock::PolynomialF::monomial(m);
        const fock::RadialProfile profile(f, params);
        for (const auto& [r_lo, r_hi] : domains) {
            const double s = fock::normalized_measure(alpha, r_lo, r_hi);
            const double bound = fock::faber_krahn_bound(f, params, s);
            const double mass = fock::local_mass(profile, r_lo, r_hi).value;
            const double margin = bound - mass;
            const bool violation = !(margin > 0.0);
            any_violation = any_violation || violation;
            table.add_row({std::to_string(n), fock::format_number(alpha), std::to_string(m),
                           fock::format_number(r_lo), fock::format_number(r_hi),
                           fock::format_number(s), fock::format_number(mass),
                           fock::format_number(bound), fock::format_number(margin),
                           violation ? "THEOREM-VIOLATION" : "OK"});
        }
    }
    flags.emit_table(table);
    return any_violation ? 1 : 0;
}

int cmd_sharpness(int n, double alpha, const std::vector<int>& ms,
                  const std::optional<std::vector<double>>& radii, const CommonFlags& flags) {
    fock::Table table("sharpness.v1", {"n", "alpha", "m", "R", "s", "J", "status"});
    table.set_meta("normalization", kNormalizationNote);
    table.set_meta("auto-R", "when --R is omitted, s = m + 4 sqrt(m) + 5 and R = sqrt(s/alpha)");
    const fock::FockParams params(alpha, n);
    bool any_violation = false;
    for (int m : ms) {
        if (m < std::max(n, 1)) {
            std::cerr << "sharpness: every m must be >= max(n, 1)\n";
            return kUsageError;
        }
        std::vector<double> rs;
        if (radii) {
            rs = *radii;
        } else {
            const double s = m + 4.0 * std::sqrt(static_cast<double>(m)) + 5.0;
            rs = {std::sqrt(s / alpha)};
        }
        for (double r : rs) {
            const double j = fock::sharpness_ratio(r, m, params);
            const bool violation = !(j < 1.0);
            any_violation = any_violation || violation;
            table.add_row({std::to_string(n), fock::format_number(alpha), std::to_string(m),
                           fock::format_number(r), fock::format_number(alpha * r * r),
                           fock::format_number(j), violation ? "SHARPNESS-VIOLATION" : "OK"});
        }
    }
    flags.emit_table(table);
    return any_violation ? 1 : 0;
}

int cmd_bathtub(const std::string& f_token, int n, double s, int trials, unsigned seed,
                double alpha, const CommonFlags& flags) {
    const fock::PolynomialF f = parse_monomial(f_token);
    const fock::FockParams params(alpha, n);
    const fock::RadialProfile profile(f, params);

    std::mt19937 rng(seed);
    std::vector<std::pair<double, double>> sets;
    for (int i = 0; i < trials; ++i) {
        const double r_lo = 0.05 + 1.5 * uniform01(rng);
        sets.emplace_back(r_lo, std::sqrt(r_lo * r_lo + s / alpha));
    }
    const fock::BathtubReport report = fock::bathtub_check(profile, s, sets);

    fock::Table table("bathtub.v1", {"trial", "r_lo", "r_hi", "mass", "superlevel_mass",
                                     "margin", "status"});
    table.set_meta("normalization", kNormalizationNote);
    table.set_meta("f", f_token);
    table.set_meta("superlevel", "t=" + fock::format_number(report.level_set.threshold) +
                                     " r_in=" + fock::format_number(report.level_set.inner_radius) +
                                     " r_out=" + fock::format_number(report.level_set.outer_radius));
    int index = 0;
    for (const auto& trial : report.trials) {
        table.add_row({std::to_string(index++), fock::format_number(trial.r_lo),
                       fock::format_number(trial.r_hi), fock::format_number(trial.mass),
                       fock::format_number(report.superlevel_mass),
                       fock::format_number(report.superlevel_mass - trial.mass),
                       trial.dominated ? "DOMINATED" : "VIOLATION"});
    }
    flags.emit_table(table);
    return report.all_dominated ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fockcheck: numerical checks for the Fock-space derivative contraction bound"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    fock::VerifyOptions verify_options;
    CommonFlags verify_flags;
    verify->add_flag("--quick", verify_options.quick, "reduced ranges, finishes in seconds");
    verify->add_option("--n", verify_options.n_focus, "restrict sequence sections to one n (1..4)")
        ->check(CLI::Range(1, 4));
    verify->add_option("--kmax", verify_options.kmax, "conjecture scan depth")
        ->check(CLI::Range(4, fock::kMaxSequenceIndex));
    verify->add_option("--seed", verify_options.seed, "seed for randomized properties");
    verify_flags.attach(verify);

    // seq
    auto* seq = app.add_subcommand("seq", "a_k / A(p) table with threshold flags");
    int seq_n = 0;
    int seq_kmax = 0;
    CommonFlags seq_flags;
    seq->add_option("--n", seq_n, "derivative order")->required()->check(CLI::NonNegativeNumber);
    seq->add_option("--kmax", seq_kmax, "largest argument")->required();
    seq_flags.attach(seq);

    // bound
    auto* bound = app.add_subcommand("bound", "margin sweep of the local inequality for f = z^m");
    int bound_n = 1;
    std::string bound_alpha = "pi";
    std::string bound_m = "1..10";
    std::string bound_r;
    std::string bound_annulus;
    CommonFlags bound_flags;
    bound->add_option("--n", bound_n, "derivative order")->check(CLI::Range(0, 4));
    bound->add_option("--alpha", bound_alpha, "Gaussian parameter (number or 'pi')");
    bound->add_option("--m", bound_m, "monomial degrees, e.g. 1..10 or 1,2,5");
    bound->add_option("--R", bound_r, "disk radii, e.g. 0.5,1,2");
    bound->add_option("--annulus", bound_annulus, "annuli lo:hi, e.g. 0.5:1,1:2");
    bound_flags.attach(bound);

    // sharpness
    auto* sharp = app.add_subcommand("sharpness", "J(R, m) sharpness ratios for f = z^m");
    int sharp_n = 1;
    std::string sharp_alpha = "pi";
    std::string sharp_m = "50";
    std::string sharp_r;
    CommonFlags sharp_flags;
    sharp->add_option("--n", sharp_n, "derivative order")->check(CLI::Range(0, 4));
    sharp->add_option("--alpha", sharp_alpha, "Gaussian parameter (number or 'pi')");
    sharp->add_option("--m", sharp_m, "monomial degrees");
    sharp->add_option("--R", sharp_r, "disk radii (omit to auto-select)");
    sharp_flags.attach(sharp);

    // bathtub
    auto* bath = app.add_subcommand("bathtub", "super-level-set dominance over random annuli");
    std::string bath_f = "z3";
    int bath_n = 1;
    double bath_s = 1.0;
    int bath_trials = 20;
    unsigned bath_seed = 7;
    std::string bath_alpha = "pi";
    CommonFlags bath_flags;
    bath->add_option("--f", bath_f, "monomial token: 1, z, z3, ...");
    bath->add_option("--n", bath_n, "derivative order")->check(CLI::Range(0, 4));
    bath->add_option("--s", bath_s, "normalized measure of the sets")->check(CLI::PositiveNumber);
    bath->add_option("--trials", bath_trials, "number of random annuli")->check(CLI::Range(0, 10000));
    bath->add_option("--seed", bath_seed, "random seed");
    bath->add_option("--alpha", bath_alpha, "Gaussian parameter (number or 'pi')");
    bath_flags.attach(bath);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (verify->parsed()) return cmd_verify(verify_options, verify_flags);
        if (seq->parsed()) return cmd_seq(seq_n, seq_kmax, seq_flags);
        if (bound->parsed()) {
            std::vector<std::pair<double, double>> domains;
            if (!bound_r.empty())
                for (double r : parse_real_list(bound_r)) domains.emplace_back(0.0, r);
            if (!bound_annulus.empty())
                for (const auto& a : parse_annulus_list(bound_annulus)) domains.push_back(a);
            if (domains.empty()) {
                std::cerr << "bound: provide --R and/or --annulus\n";
                return kUsageError;
            }
            return cmd_bound(bound_n, parse_alpha(bound_alpha), parse_int_list(bound_m), domains,
                             bound_flags);
        }
        if (sharp->parsed()) {
            std::optional<std::vector<double>> radii;
            if (!sharp_r.empty()) radii = parse_real_list(sharp_r);
            return cmd_sharpness(sharp_n, parse_alpha(sharp_alpha), parse_int_list(sharp_m), radii,
                                 sharp_flags);
        }
        if (bath->parsed())
            return cmd_bathtub(bath_f, bath_n, bath_s, bath_trials, bath_seed,
                               parse_alpha(bath_alpha), bath_flags);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kUsageError;
}
