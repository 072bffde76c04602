#include "fock/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "fock/analysis_checks.hpp"
#include "fock/inequality.hpp"
#include "fock/quadrature.hpp"
#include "fock/sequences.hpp"
#include "fock/specfun.hpp"

namespace fock {

namespace {

// mt19937 output mapped to [0, 1); the distribution classes are not pinned by
// the standard, so this mapping keeps seeded runs identical everywhere.
double uniform01(std::mt19937& rng) { return rng() * (1.0 / 4294967296.0); }

CheckItem make_item(std::string id, double measured, double expected, double tolerance,
                    bool pass, std::string note = "") {
    CheckItem item;
    item.id = std::move(id);
    item.measured = measured;
    item.expected = expected;
    item.tolerance = tolerance;
    item.status = pass ? CheckStatus::kPass : CheckStatus::kFail;
    item.note = std::move(note);
    return item;
}

struct Domain {
    double r_lo;
    double r_hi;
};

// The fixed 24-domain grid of the margin sweep. Radii stay below s ~ 20: for
// n = 0 the true margin decays like s e^{-s} ||f||^2, so larger domains would
// push a mathematically positive margin below integration resolution.
const std::vector<Domain>& sweep_domains() {
    static const std::vector<Domain> kDomains = {
        {0.0, 0.35}, {0.0, 0.5},  {0.0, 0.6},   {0.0, 0.75}, {0.0, 0.9},   {0.0, 1.0},
        {0.0, 1.25}, {0.0, 1.5},  {0.0, 1.75},  {0.0, 2.0},  {0.0, 2.25},  {0.0, 2.5},
        {0.1, 0.4},  {0.25, 0.75}, {0.5, 1.0},  {0.5, 1.5},  {0.75, 1.25}, {1.0, 1.5},
        {1.0, 2.0},  {1.25, 2.25}, {1.5, 2.5},  {2.0, 2.5},  {2.0, 3.0},   {2.5, 3.0}};
    return kDomains;
}

void check_reference_table(VerificationReport& report) {
    constexpr double kTableTol = 5e-7;
    const double expected[6] = {0.427393, 0.662691, 0.784876, 0.852841, 0.893707, 0.919951};
    for (int k = 2; k <= 7; ++k) {
        const double measured = a_quad(2, k);
        const double diff = std::abs(measured - expected[k - 2]);
        report.add(make_item("01.n2-table.k" + std::to_string(k), measured, expected[k - 2],
                             kTableTol, diff <= kTableTol));
    }
}

void check_seed_value(VerificationReport& report) {
    constexpr double kSeedTol = 5e-7;
    const double measured = std::exp(1.0) * expint_at_one(1);
    report.add(make_item("02.g1-seed", measured, 0.596347, kSeedTol,
                         std::abs(measured - 0.596347) <= kSeedTol));
}

void check_conjecture3(VerificationReport& report, const std::vector<int>& n_list, int kmax) {
    for (int n : n_list) {
        double worst = 0.0;
        int worst_k = n;
        bool violation = false;
        bool inconclusive = false;
        for (int k = n; k <= kmax; ++k) {
            const IntegralEstimate est = a_quad_est(n, k);
            if (est.value > worst) {
                worst = est.value;
                worst_k = k;
            }
            const double gap = 1.0 - est.value;
            if (std::abs(gap) <= est.error_estimate)
                inconclusive = true;
            else if (gap < 0.0)
                violation = true;
        }
        CheckItem item;
        item.id = "03.conjecture3.n" + std::to_string(n);
        item.measured = worst;
        item.expected = 1.0;
        item.tolerance = 0.0;
        item.status = violation       ? CheckStatus::kFail
                      : inconclusive  ? CheckStatus::kInconclusive
                                      : CheckStatus::kPass;
        item.note = "strict a_k < 1 for k <= " + std::to_string(kmax) +
                    "; max at k=" + std::to_string(worst_k);
        report.add(item);
    }
}

void check_n4_threshold(VerificationReport& report) {
    const auto records = a_recurrence_table(4, 31);
    double worst_neg = -1.0;  // max of a - lower over p = 4..16, must stay < 0
    double worst_pos = 1.0;   // min of a - lower over p = 17..27, must stay > 0
    for (const auto& rec : records) {
        const double diff = rec.a_quad - rec.lower;
        if (rec.k <= 16) worst_neg = std::max(worst_neg, diff);
        else if (rec.k <= 27) worst_pos = std::min(worst_pos, diff);
    }
    const std::string convention =
        "argument convention A(j) vs j/(j+1); j=1..3 not computable at n=4";
    report.add(make_item("04.n4-threshold.negative-first16", worst_neg, 0.0, 0.0,
                         worst_neg < 0.0, convention));
    report.add(make_item("04.n4-threshold.positive-next11", worst_pos, 0.0, 0.0,
                         worst_pos > 0.0, convention));

    // Companion data point: the measured n=2 crossing index against the
    // published claim of 4 (informational; never gates the exit code).
    const auto n2 = a_recurrence_table(2, 12);
    int crossing = -1;
    for (auto it = n2.rbegin(); it != n2.rend(); ++it) {
        if (!it->above_lower) break;
        crossing = it->k;
    }
    CheckItem item;
    item.id = "04.n2-crossing";
    item.measured = crossing;
    item.expected = 4.0;
    item.tolerance = 0.0;
    item.status = CheckStatus::kExploratory;
    item.note = "first index with A(j) > j/(j+1) staying above; the literature value is 4";
    report.add(item);
}

void check_cross_check(VerificationReport& report, const std::vector<int>& n_list, int pmax) {
    for (int n : n_list) {
        const auto records = a_recurrence_table(n, pmax);
        double worst = 0.0;
        for (const auto& rec : records)
            if (std::isfinite(rec.a_rec)) worst = std::max(worst, std::abs(rec.a_rec - rec.a_quad));
        report.add(make_item("05.cross-check.n" + std::to_string(n), worst, 0.0, kCrossCheckTol,
                             worst <= kCrossCheckTol,
                             "max |a_rec - a_quad| for p <= " + std::to_string(pmax)));
    }
}

void check_sum_identity(VerificationReport& report, const std::vector<int>& n_list, int kmax) {
    constexpr double kIdentityTol = 1e-9;
    double worst = 0.0;
    for (int n : n_list) {
        std::vector<double> a_values(static_cast<std::size_t>(kmax + n + 1));
        for (int p = n; p <= kmax + n; ++p) a_values[p] = a_quad(n, p);
        for (int k = n; k <= kmax; ++k) {
            std::vector<double> window(a_values.begin() + k, a_values.begin() + k + n + 1);
            worst = std::max(worst, std::abs(sum_identity_residual(n, k, window)));
        }
    }
    report.add(make_item("06.sum-identity.max", worst, 0.0, kIdentityTol, worst <= kIdentityTol,
                         "quadrature values, k <= " + std::to_string(kmax)));

    constexpr double kHandTol = 1e-12;
    const auto g = g_seq(3);
    const double hand = g[1].g / 2.0 + 2.0 * g[2].g / 3.0 - 1.0;
    report.add(make_item("06.sum-identity.hand", std::abs(hand), 0.0, kHandTol,
                         std::abs(hand) <= kHandTol, "g_2/2 + 2 g_3/3 = 1"));
}

void check_kummer_laguerre(VerificationReport& report, int n_max) {
    constexpr double kIdentityTol = 1e-12;
    double worst = 0.0;
    for (int n = 0; n <= n_max; ++n) {
        for (int i = 0; i <= 100; ++i) {
            const double r = 0.5 * i;
            const double lhs = kummer(1 + n, 1, r);
            const double rhs = std::exp(r) * laguerre_neg(n, r);
            worst = std::max(worst, std::abs(lhs - rhs) / rhs);
        }
    }
    report.add(make_item("07.kummer-laguerre", worst, 0.0, kIdentityTol, worst <= kIdentityTol,
                         "n <= " + std::to_string(n_max) + ", r in [0, 50]"));
}

void check_equality_case(VerificationReport& report) {
    constexpr double kEqualityTol = 1e-12;
    const PolynomialF one({std::complex<double>(1.0)});
    const FockParams params(M_PI, 0);
    const double radii[3] = {0.5, 1.0, 2.0};
    const char* labels[3] = {"R05", "R1", "R2"};
    for (int i = 0; i < 3; ++i) {
        const double margin = faber_krahn_margin(one, params, 0.0, radii[i]);
        report.add(make_item(std::string("08.equality-case.") + labels[i], margin, 0.0,
                             kEqualityTol, std::abs(margin) <= kEqualityTol));
    }
}

void check_margin_sweep(VerificationReport& report, bool quick) {
    const double alphas_full[2] = {1.0, M_PI};
    for (int n = 0; n <= 4; ++n) {
        double worst = 1e300;
        std::string worst_at;
        int violations = 0;
        const int m_lo = std::max(n, 1);
        const int m_step = quick ? 5 : 1;
        const int n_alpha = quick ? 1 : 2;
        for (int m = m_lo; m <= 20; m += m_step) {
            const PolynomialF f = PolynomialF::monomial(m);
            for (int ai = 0; ai < n_alpha; ++ai) {
                const double alpha = quick ? M_PI : alphas_full[ai];
                const FockParams params(alpha, n);
                const RadialProfile profile(f, params);
                const double norm = fock_norm_sq(f, alpha);
                for (const Domain& dom : sweep_domains()) {
                    const double s = normalized_measure(alpha, dom.r_lo, dom.r_hi);
                    const double margin = (1.0 - std::exp(-(n + 1.0) * s)) * norm -
                                          local_mass(profile, dom.r_lo, dom.r_hi).value;
                    if (margin <= 0.0) ++violations;
                    if (margin < worst) {
                        worst = margin;
                        worst_at = "m=" + std::to_string(m) + " alpha=" + (alpha == M_PI ? "pi" : "1") +
                                   " domain=[" + format_number(dom.r_lo) + ";" +
                                   format_number(dom.r_hi) + "]";
                    }
                }
            }
        }
        report.add(make_item("09.margin-sweep.n" + std::to_string(n), worst, 0.0, 0.0,
                             violations == 0, "min margin at " + worst_at));
    }
}

void check_bathtub(VerificationReport& report, unsigned seed) {
    constexpr double kDominanceTol = 1e-10;
    const double s = 1.0;
    const FockParams params(M_PI, 1);
    const RadialProfile profile(PolynomialF::monomial(3), params);
    const LevelSet level = superlevel_set(profile, s);
    const double sl_mass = local_mass(profile, level.inner_radius, level.outer_radius).value;

    const double disk_r = std::sqrt(s / params.alpha);
    const double disk_mass = local_mass(profile, 0.0, disk_r).value;
    report.add(make_item("10.bathtub.disk", sl_mass - disk_mass, 0.0, kDominanceTol,
                         sl_mass - disk_mass > kDominanceTol,
                         "super-level annulus mass minus equal-measure disk mass"));

    std::mt19937 rng(seed);
    std::vector<std::pair<double, double>> trials;
    for (int i = 0; i < 20; ++i) {
        const double r_lo = 0.05 + 1.5 * uniform01(rng);
        trials.emplace_back(r_lo, std::sqrt(r_lo * r_lo + s / params.alpha));
    }
    const BathtubReport bath = bathtub_check(profile, s, trials);
    double worst = -1e300;
    for (const auto& trial : bath.trials) worst = std::max(worst, trial.mass - bath.superlevel_mass);
    report.add(make_item("10.bathtub.random", worst, 0.0, kDominanceTol, bath.all_dominated,
                         "max trial mass minus super-level mass, 20 seeded annuli"));
}

void check_laplacians(VerificationReport& report) {
    constexpr double kFdTol = 1e-8;       // relative, after Richardson
    constexpr double kDualTol = 1e-9;     // relative
    constexpr double kOrderFloor = 1.9;
    const double kStep = 1e-2;

    // eq-delu side: two polynomials with nonvanishing derivative near the samples.
    {
        const PolynomialF linear({0.0, 1.0});
        const PolynomialF bent({0.0, 1.0, 0.1});
        const double points[4][2] = {{0.3, 0.1}, {1.0, 0.5}, {0.7, -0.4}, {1.5, 0.2}};
        const double alphas[2] = {1.0, M_PI};
        double worst = 0.0;
        for (const auto& f : {linear, bent}) {
            for (double alpha : alphas) {
                for (const auto& pt : points) {
                    const double r = std::hypot(pt[0], pt[1]);
                    const double closed = delta_log_u_closed(alpha, r);
                    const double fd = richardson_laplacian(
                        [&](double h) { return delta_log_u_fd(f, alpha, pt[0], pt[1], h); }, kStep);
                    worst = std::max(worst, std::abs(fd - closed) / std::abs(closed));
                }
            }
        }
        report.add(make_item("11.laplacian.delu-fd", worst, 0.0, kFdTol, worst <= kFdTol,
                             "max relative FD-vs-closed disagreement"));

        const double closed = delta_log_u_closed(1.0, std::hypot(1.0, 0.5));
        const double e1 = std::abs(delta_log_u_fd(linear, 1.0, 1.0, 0.5, kStep) - closed);
        const double e2 = std::abs(delta_log_u_fd(linear, 1.0, 1.0, 0.5, kStep / 2.0) - closed);
        const double order = std::log2(e1 / e2);
        report.add(make_item("11.laplacian.delu-order", order, 2.0, 0.1, order >= kOrderFloor,
                             "measured convergence order under step halving"));
    }

    // Kummer-Laplacian side on the fixed t grid.
    {
        const double t_grid[8] = {0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0};
        const double alphas[2] = {1.0, M_PI};
        double worst_fd = 0.0;
        for (int n = 0; n <= 4; ++n) {
            for (double alpha : alphas) {
                const FockParams params(alpha, n);
                for (double t : t_grid) {
                    const double closed = kummer_laplacian_closed(params, t);
                    const double x = std::sqrt(t);
                    const double fd = richardson_laplacian(
                        [&](double h) { return log_kummer_laplacian_fd(params, x, 0.0, h); },
                        kStep);
                    worst_fd = std::max(worst_fd, std::abs(fd - closed) / std::abs(closed));
                }
            }
        }
        report.add(make_item("11.laplacian.kummer-fd", worst_fd, 0.0, kFdTol, worst_fd <= kFdTol,
                             "max relative FD-vs-closed disagreement, t grid to 20"));

        const FockParams params(1.0, 2);
        const double closed = kummer_laplacian_closed(params, 2.0);
        const double x = std::sqrt(2.0);
        const double e1 = std::abs(log_kummer_laplacian_fd(params, x, 0.0, kStep) - closed);
        const double e2 = std::abs(log_kummer_laplacian_fd(params, x, 0.0, kStep / 2.0) - closed);
        const double order = std::log2(e1 / e2);
        report.add(make_item("11.laplacian.kummer-order", order, 2.0, 0.1, order >= kOrderFloor,
                             "measured convergence order under step halving"));

        double worst_sign = -1e300;
        double worst_dual = 0.0;
        const double alphas_k[3] = {0.5, 1.0, M_PI};
        for (int n = 0; n <= 8; ++n) {
            for (double alpha : alphas_k) {
                const FockParams kp(alpha, n);
                for (double t : t_grid) {
                    const KummerKPair k = k_function(kp, t);
                    worst_sign = std::max(worst_sign, k.factored);
                    // The g-route subtracts two terms of size 4a(1+n)F^2, so
                    // agreement is relative to that scale where |k| is small.
                    const double f11 = kummer(1 + n, 1, alpha * t);
                    const double scale =
                        std::max(std::abs(k.factored), 4.0 * alpha * (1 + n) * f11 * f11);
                    worst_dual =
                        std::max(worst_dual, std::abs(k.factored - k.from_definition) / scale);
                }
            }
        }
        report.add(make_item("11.laplacian.k-sign", worst_sign, 0.0, 0.0, worst_sign <= 0.0,
                             "max of k(t) over n <= 8, alpha in {0.5,1,pi}, t grid"));
        report.add(make_item("11.laplacian.k-dual", worst_dual, 0.0, kDualTol,
                             worst_dual <= kDualTol,
                             "two routes, relative to max(|k|, 4a(1+n)F^2)"));
    }
}

void check_sharpness(VerificationReport& report, bool quick) {
    double worst_j = 0.0;
    std::string worst_at;
    const double s_grid[4] = {0.5, 2.0, 8.0, 20.0};
    for (int n = 0; n <= 4; ++n) {
        std::vector<int> ms = {std::max(n, 1), std::max(n, 1) + 1, 5, 8, 12, 20, 50};
        if (quick) ms = {std::max(n, 1), 8, 50};
        std::sort(ms.begin(), ms.end());
        ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
        const FockParams params(M_PI, n);
        for (int m : ms) {
            if (m < n) continue;
            for (double s : s_grid) {
                const double j = sharpness_ratio(std::sqrt(s / params.alpha), m, params);
                if (j > worst_j) {
                    worst_j = j;
                    worst_at = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                               " s=" + format_number(s);
                }
            }
        }
    }
    report.add(make_item("12.sharpness.max-j", worst_j, 1.0, 0.0, worst_j < 1.0,
                         "strict J < 1; max at " + worst_at));

    const FockParams params(M_PI, 1);
    const double j_pinned = sharpness_ratio(std::sqrt(55.0 / M_PI), 50, params);
    report.add(make_item("12.sharpness.pinned", j_pinned, 0.9, 0.0, j_pinned >= 0.9,
                         "J at n=1, alpha=pi, m=50, R^2=55/pi"));

    for (int n = 1; n <= 4; ++n) {
        const double a = a_quad(n, 200);
        report.add(make_item("12.limit.n" + std::to_string(n), a, 0.99, 0.0, a >= 0.99,
                             "a_quad(n, 200) >= 0.99"));
    }
}

void check_pointwise(VerificationReport& report, unsigned seed, bool quick) {
    constexpr double kRatioTol = 1e-10;
    std::mt19937 rng(seed + 1);
    double worst = 0.0;
    const int n_polys = quick ? 3 : 8;
    const double moduli[4] = {0.0, 0.5, 1.0, 2.0};
    for (int trial = 0; trial < n_polys; ++trial) {
        std::vector<std::complex<double>> coeffs(9);
        for (auto& c : coeffs)
            c = std::complex<double>(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
        const PolynomialF f(std::move(coeffs));
        for (int n = 0; n <= 4; ++n) {
            const FockParams params(n % 2 == 0 ? 1.0 : M_PI, n);
            for (double r : moduli)
                worst = std::max(worst, pointwise_bound_ratio(f, params, r));
        }
    }
    report.add(make_item("13.pointwise.random", worst, 1.0, kRatioTol, worst <= 1.0 + kRatioTol,
                         "max ratio over seeded degree-8 suite"));

    // Truncated reproducing kernel at z0 = 1, alpha = 1: ratio approaches the
    // pointwise bound's equality case.
    std::vector<std::complex<double>> kernel(31);
    for (int k = 0; k <= 30; ++k) kernel[k] = std::exp(-log_factorial(k));
    const PolynomialF fk(std::move(kernel));
    const double ratio = pointwise_bound_ratio(fk, FockParams(1.0, 0), 1.0);
    report.add(make_item("13.pointwise.kernel", ratio, 1.0, kRatioTol,
                         ratio >= 0.999 && ratio <= 1.0 + kRatioTol,
                         "truncated kernel, K=30, must reach >= 0.999"));
}

void check_determinism(VerificationReport& report) {
    const std::string once = report.to_csv(false);
    const std::string twice = report.to_csv(false);
    report.add(make_item("14.determinism.serialization", once == twice ? 1.0 : 0.0, 1.0, 0.0,
                         once == twice, "in-process double serialization, byte compare"));
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& options) {
    VerificationReport report;
    report.set_header("normalization",
                      "s = alpha * Lebesgue(Omega) / pi (disk: s = alpha R^2); "
                      "bound = (1 - exp(-(n+1) s)) * ||f||^2");
    report.set_header("quadrature", "gauss-laguerre order " + std::to_string(kDefaultRatioOrder) +
                                        ", error estimate vs doubled order; adaptive radial "
                                        "panels at 1e-12 relative");
    report.set_header("mode", options.quick ? "quick" : "full");
    if (options.n_focus >= 0) report.set_header("n-focus", std::to_string(options.n_focus));
    const int kmax = options.quick ? std::min(options.kmax, 60) : options.kmax;
    report.set_header("kmax", std::to_string(kmax));
    report.set_header("seed", std::to_string(options.seed));

    std::vector<int> n_list = {1, 2, 3, 4};
    if (options.n_focus >= 1 && options.n_focus <= 4) n_list = {options.n_focus};
    const int cross_pmax = options.quick ? 40 : 80;
    const int identity_kmax = options.quick ? 30 : 60;

    check_reference_table(report);
    check_seed_value(report);
    check_conjecture3(report, n_list, kmax);
    check_n4_threshold(report);
    check_cross_check(report, n_list, cross_pmax);
    check_sum_identity(report, n_list, identity_kmax);
    check_kummer_laguerre(report, options.quick ? 8 : 12);
    check_equality_case(report);
    check_margin_sweep(report, options.quick);
    check_bathtub(report, options.seed);
    check_laplacians(report);
    check_sharpness(report, options.quick);
    check_pointwise(report, options.seed, options.quick);
    check_determinism(report);
    return report;
}

}  // namespace fock
