#include "fock/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fock/sequences.hpp"

namespace fock {

namespace {

constexpr int kUnimodalGridSize = 10000;
constexpr int kPhaseGridSize = 64;
constexpr double kMeasureTol = 1e-10;      // superlevel bisection target
constexpr double kTrialMeasureTol = 1e-8;  // bathtub trial admission
constexpr double kDominanceTol = 1e-10;

// Upper incomplete gamma Gamma(q+1, x) for integer q >= 0 via the upward
// recurrence from Gamma(1, x) = e^{-x}.
double upper_gamma_int(int q, double x) {
    double g = std::exp(-x);
    double xpow = 1.0;
    for (int a = 1; a <= q; ++a) {
        xpow *= x;
        g = a * g + xpow * std::exp(-x);
    }
    return g;
}

// Radius beyond which the profile is negligible relative to its peak value,
// used to bound scan grids and level-set brackets.
double scan_radius(const RadialProfile& u) {
    const double alpha = u.params().alpha;
    const int deg = std::max(u.source().degree(), 1);
    double r = std::sqrt((2.0 * deg + 40.0) / alpha);
    double peak = u.density(0.0);
    const int kGridProbe = 256;
    for (int i = 1; i <= kGridProbe; ++i)
        peak = std::max(peak, u.density(r * i / kGridProbe));
    if (!(peak > 0.0))
        throw std::domain_error("superlevel_set: profile is identically zero");
    for (int grow = 0; grow < 200 && u.density(r) > peak * 1e-18; ++grow) r *= 1.25;
    return r;
}

}  // namespace

PolynomialF::PolynomialF(std::vector<std::complex<double>> coefficients)
    : coeffs_(std::move(coefficients)) {}

PolynomialF PolynomialF::monomial(int degree, std::complex<double> coefficient) {
    if (degree < 0) throw std::invalid_argument("PolynomialF::monomial: degree must be >= 0");
    std::vector<std::complex<double>> c(static_cast<std::size_t>(degree) + 1);
    c.back() = coefficient;
    return PolynomialF(std::move(c));
}

bool PolynomialF::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != std::complex<double>(0.0)) return false;
    return true;
}

std::complex<double> PolynomialF::derivative_at(int n, std::complex<double> z) const {
    if (n < 0) throw std::invalid_argument("PolynomialF::derivative_at: n must be >= 0");
    // Horner on the derivative coefficients c_k k!/(k-n)!.
    std::complex<double> acc = 0.0;
    for (int k = degree(); k >= n; --k) {
        const double fall = std::exp(log_factorial(k) - log_factorial(k - n));
        acc = acc * z + coeffs_[static_cast<std::size_t>(k)] * fall;
    }
    return acc;
}

std::vector<double> PolynomialF::derivative_msq_coefficients(int n) const {
    if (n < 0) throw std::invalid_argument("PolynomialF: n must be >= 0");
    std::vector<double> out;
    for (int k = n; k <= degree(); ++k) {
        const double fall = std::exp(log_factorial(k) - log_factorial(k - n));
        out.push_back(std::norm(coeffs_[static_cast<std::size_t>(k)] * fall));
    }
    return out;
}

double PolynomialF::derivative_msq_radial(int n, double r) const {
    const double r2 = r * r;
    double acc = 0.0;
    const auto msq = derivative_msq_coefficients(n);
    for (auto it = msq.rbegin(); it != msq.rend(); ++it) acc = acc * r2 + *it;
    return acc;
}

RadialProfile::RadialProfile(PolynomialF f, FockParams params)
    : f_(std::move(f)), params_(params), msq_coeffs_(f_.derivative_msq_coefficients(params.n)) {}

double RadialProfile::density(double r) const {
    if (!(r >= 0.0)) throw std::domain_error("RadialProfile: r must be >= 0");
    const double r2 = r * r;
    double msq = 0.0;
    for (auto it = msq_coeffs_.rbegin(); it != msq_coeffs_.rend(); ++it) msq = msq * r2 + *it;
    const double alpha = params_.alpha;
    const int n = params_.n;
    const double denom = std::exp(n * std::log(alpha) + log_factorial(n)) *
                         laguerre_neg(n, alpha * r2);
    return msq * std::exp(-alpha * r2) / denom;
}

double fock_norm_sq(const PolynomialF& f, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("fock_norm_sq: alpha must be positive");
    double sum = 0.0;
    for (int k = 0; k <= f.degree(); ++k)
        sum += std::norm(f.coefficients()[static_cast<std::size_t>(k)]) *
               std::exp(log_factorial(k) - k * std::log(alpha));
    return sum;
}

double taylor_tail_norm_sq(const PolynomialF& f, double alpha, int n) {
    if (!(alpha > 0.0)) throw std::invalid_argument("taylor_tail_norm_sq: alpha must be positive");
    if (n < 0) throw std::invalid_argument("taylor_tail_norm_sq: n must be >= 0");
    double sum = 0.0;
    for (int k = n; k <= f.degree(); ++k)
        sum += std::norm(f.coefficients()[static_cast<std::size_t>(k)]) *
               std::exp(log_factorial(k) - k * std::log(alpha));
    return sum;
}

double normalized_measure(double alpha, double r_lo, double r_hi) {
    return alpha * (r_hi * r_hi - r_lo * r_lo);
}

IntegralEstimate local_mass(const RadialProfile& profile, double r_lo, double r_hi) {
    return integrate_radial([&](double r) { return profile.density(r); }, profile.params().alpha,
                            r_lo, r_hi);
}

double faber_krahn_bound(const PolynomialF& f, const FockParams& params, double s) {
    return (1.0 - std::exp(-(params.n + 1.0) * s)) * fock_norm_sq(f, params.alpha);
}

double faber_krahn_margin(const PolynomialF& f, const FockParams& params, double r_lo,
                          double r_hi) {
    if (f.is_zero()) throw std::invalid_argument("faber_krahn_margin: f must be nonzero");
    const double s = normalized_measure(params.alpha, r_lo, r_hi);
    const RadialProfile profile(f, params);
    return faber_krahn_bound(f, params, s) - local_mass(profile, r_lo, r_hi).value;
}

GlobalMassIdentity global_mass_identity(const PolynomialF& f, const FockParams& params) {
    if (f.is_zero()) throw std::invalid_argument("global_mass_identity: f must be nonzero");
    const double alpha = params.alpha;
    const int n = params.n;

    GlobalMassIdentity out;
    for (int k = n; k <= f.degree(); ++k) {
        const double weight = std::norm(f.coefficients()[static_cast<std::size_t>(k)]) *
                              std::exp(log_factorial(k) - k * std::log(alpha));
        if (weight > 0.0) out.coefficient += a_quad(n, k) * weight;
    }

    const RadialProfile profile(f, params);
    const std::vector<double> msq = f.derivative_msq_coefficients(n);

    // Remainder bound past radius R, from L_n(-alpha r^2) >= (alpha r^2)^n / n!:
    // 2 alpha int_R^inf u r dr <= 2 alpha^{1-2n} sum_j |b_j|^2 T_j(R).
    auto tail_bound = [&](double R) {
        const double x = alpha * R * R;
        double tail = 0.0;
        for (int j = 0; j < static_cast<int>(msq.size()); ++j) {
            const int q = j - n;
            double integral;  // int_R^inf r^{2q+1} e^{-alpha r^2} dr, or an upper bound
            if (q >= 0) {
                integral = upper_gamma_int(q, x) / (2.0 * std::pow(alpha, q + 1));
            } else {
                integral = std::pow(R, 2.0 * q) * std::exp(-x) / (2.0 * alpha);
            }
            tail += msq[static_cast<std::size_t>(j)] * integral;
        }
        return 2.0 * std::pow(alpha, 1.0 - 2.0 * n) * tail;
    };

    const int deg_msq = std::max(static_cast<int>(msq.size()) - 1, 0);
    double R = std::sqrt((2.0 * (deg_msq + n) + 40.0) / alpha);
    double mass = 0.0;
    bool certified = false;
    for (int attempt = 0; attempt < 60; ++attempt) {
        mass = local_mass(profile, 0.0, R).value;
        out.tail_bound = tail_bound(R);
        if (out.tail_bound <= 1e-10 * std::abs(mass)) {
            certified = true;
            break;
        }
        R *= 1.25;
    }
    out.quadrature = mass;
    out.precision_warning = !certified;
    return out;
}

LevelSet superlevel_set(const RadialProfile& profile, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("superlevel_set: s must be positive");
    const double alpha = profile.params().alpha;
    double r_max = scan_radius(profile);

    // Unimodality check on the fixed grid. Every super-level set must be a
    // single interval, which needs the discrete derivative to change sign at
    // most once (rise then fall; a second change means a second peak -- the
    // origin counts as a peak when the profile starts by falling).
    double mode_r = 0.0;
    double mode_val = profile.density(0.0);
    {
        int sign_changes = 0;
        int last_sign = 0;
        double prev = mode_val;
        for (int i = 1; i <= kUnimodalGridSize; ++i) {
            const double r = r_max * i / kUnimodalGridSize;
            const double v = profile.density(r);
            const double diff = v - prev;
            if (diff != 0.0) {
                const int sign = diff > 0.0 ? 1 : -1;
                if (last_sign != 0 && sign != last_sign) ++sign_changes;
                last_sign = sign;
            }
            if (v > mode_val) {
                mode_val = v;
                mode_r = r;
            }
            prev = v;
        }
        if (sign_changes > 1)
            throw std::domain_error(
                "superlevel_set: profile is not unimodal on the scan grid (" +
                std::to_string(sign_changes) + " sign changes of the discrete derivative)");
    }
    // Ternary refinement of the mode inside its grid cell.
    {
        double lo = std::max(0.0, mode_r - r_max / kUnimodalGridSize);
        double hi = std::min(r_max, mode_r + r_max / kUnimodalGridSize);
        for (int it = 0; it < 200; ++it) {
            const double a = lo + (hi - lo) / 3.0;
            const double b = hi - (hi - lo) / 3.0;
            if (profile.density(a) < profile.density(b))
                lo = a;
            else
                hi = b;
        }
        mode_r = 0.5 * (lo + hi);
        mode_val = profile.density(mode_r);
    }

    // Radii of {u > t} for a level below the peak.
    auto level_radii = [&](double t) {
        double r_in = 0.0;
        if (profile.density(0.0) < t) {
            double lo = 0.0, hi = mode_r;
            for (int it = 0; it < 100; ++it) {
                const double mid = 0.5 * (lo + hi);
                (profile.density(mid) < t ? lo : hi) = mid;
            }
            r_in = 0.5 * (lo + hi);
        }
        double hi = std::max(r_max, mode_r + 1.0);
        while (profile.density(hi) >= t) hi *= 1.5;
        double lo = mode_r;
        for (int it = 0; it < 100; ++it) {
            const double mid = 0.5 * (lo + hi);
            (profile.density(mid) > t ? lo : hi) = mid;
        }
        return std::pair<double, double>{r_in, 0.5 * (lo + hi)};
    };
    auto measure_of = [&](double t) {
        const auto [r_in, r_out] = level_radii(t);
        return normalized_measure(alpha, r_in, r_out);
    };

    // Bracket the threshold: measure decreases in t, -> 0 at the peak and
    // -> infinity as t -> 0 (polynomial profiles are positive on (0, inf)).
    double t_hi = mode_val;
    double t_lo = mode_val * 0.5;
    for (int it = 0; it < 2000 && measure_of(t_lo) <= s; ++it) {
        t_lo *= 0.5;
        if (t_lo < mode_val * 1e-280 || t_lo < 1e-300)
            throw std::invalid_argument("superlevel_set: s exceeds the measurable range");
    }
    double t = t_lo;
    for (int it = 0; it < 200; ++it) {
        t = 0.5 * (t_lo + t_hi);
        const double mu = measure_of(t);
        if (std::abs(mu - s) <= kMeasureTol) break;
        (mu > s ? t_lo : t_hi) = t;
    }

    LevelSet set;
    set.threshold = t;
    const auto [r_in, r_out] = level_radii(t);
    set.inner_radius = r_in;
    set.outer_radius = r_out;
    set.normalized_measure = normalized_measure(alpha, r_in, r_out);
    if (std::abs(set.normalized_measure - s) > 1e-8)
        throw std::runtime_error("superlevel_set: bisection failed to match the target measure");
    return set;
}

BathtubReport bathtub_check(const RadialProfile& profile, double s,
                            std::span<const std::pair<double, double>> trials) {
    BathtubReport report;
    report.level_set = superlevel_set(profile, s);
    report.superlevel_mass =
        local_mass(profile, report.level_set.inner_radius, report.level_set.outer_radius).value;
    for (const auto& [r_lo, r_hi] : trials) {
        const double mu = normalized_measure(profile.params().alpha, r_lo, r_hi);
        if (std::abs(mu - s) > kTrialMeasureTol)
            throw std::invalid_argument(
                "bathtub_check: trial set measure deviates from s by more than 1e-8");
        BathtubTrial trial;
        trial.r_lo = r_lo;
        trial.r_hi = r_hi;
        trial.mass = local_mass(profile, r_lo, r_hi).value;
        trial.dominated = trial.mass <= report.superlevel_mass + kDominanceTol;
        report.all_dominated = report.all_dominated && trial.dominated;
        report.trials.push_back(trial);
    }
    return report;
}

double pointwise_bound_ratio(const PolynomialF& f, const FockParams& params, double z_modulus) {
    if (!(z_modulus >= 0.0))
        throw std::invalid_argument("pointwise_bound_ratio: z_modulus must be >= 0");
    const double tail = taylor_tail_norm_sq(f, params.alpha, params.n);
    if (!(tail > 0.0))
        throw std::invalid_argument("pointwise_bound_ratio: ||f - T_n f|| vanishes");
    const double alpha = params.alpha;
    const int n = params.n;
    const double r2 = z_modulus * z_modulus;
    const double envelope = std::exp(alpha * r2 / 2.0) *
                            std::sqrt(std::exp(n * std::log(alpha) + log_factorial(n)) *
                                      laguerre_neg(n, alpha * r2)) *
                            std::sqrt(tail);
    double worst = 0.0;
    for (int j = 0; j < kPhaseGridSize; ++j) {
        const double theta = 2.0 * M_PI * j / kPhaseGridSize;
        const std::complex<double> z = std::polar(z_modulus, theta);
        worst = std::max(worst, std::abs(f.derivative_at(n, z)));
    }
    return worst / envelope;
}

double sharpness_ratio(double R, int m, const FockParams& params) {
    if (!(R > 0.0)) throw std::invalid_argument("sharpness_ratio: R must be positive");
    if (m < params.n) throw std::invalid_argument("sharpness_ratio: requires m >= n");
    if (m < 1 || m > 150) throw std::invalid_argument("sharpness_ratio: m must be in [1, 150]");
    const PolynomialF f = PolynomialF::monomial(m);
    const RadialProfile profile(f, params);
    const double s = params.alpha * R * R;
    return local_mass(profile, 0.0, R).value / faber_krahn_bound(f, params, s);
}

}  // namespace fock
