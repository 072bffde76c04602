#include "fock/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "fock/specfun.hpp"

namespace fock {

namespace {

// Evaluates L_order and L_{order-1} at z via the three-term recurrence.
// Long double throughout: at order 256 the values reach ~e^{510} near the top
// node and the plain-double recurrence loses enough accuracy that the weight
// sum misses 1 by several 1e-13.
struct LaguerrePair {
    long double ln;    // L_order(z)
    long double lnm1;  // L_{order-1}(z)
};

LaguerrePair laguerre_pair(int order, long double z) {
    long double p1 = 1.0L;
    long double p2 = 0.0L;
    for (int j = 1; j <= order; ++j) {
        const long double p3 = p2;
        p2 = p1;
        p1 = ((2.0L * j - 1.0L - z) * p2 - (j - 1.0L) * p3) / j;
    }
    return {p1, p2};
}

void validate_rule(const QuadratureRule& rule) {
    long double weight_sum = 0.0L;
    for (int i = 0; i < rule.order; ++i) {
        if (!std::isfinite(rule.log_weights[i]))
            throw std::runtime_error("gauss_laguerre_rule: non-finite log-weight at order " +
                                     std::to_string(rule.order));
        if (i > 0 && !(rule.nodes[i] > rule.nodes[i - 1]))
            throw std::runtime_error("gauss_laguerre_rule: nodes not strictly increasing at order " +
                                     std::to_string(rule.order));
        weight_sum += rule.weights[i];
    }
    if (!(rule.nodes[0] > 0.0))
        throw std::runtime_error("gauss_laguerre_rule: non-positive node");
    if (std::abs(static_cast<double>(weight_sum) - 1.0) > 1e-13)
        throw std::runtime_error("gauss_laguerre_rule: weights do not sum to 1 at order " +
                                 std::to_string(rule.order));
}

// 12-point Gauss-Legendre rule on [-1, 1], built once by Newton iteration.
struct PanelRule {
    std::array<double, 12> nodes;
    std::array<double, 12> weights;
};

const PanelRule& panel_rule() {
    static const PanelRule kRule = [] {
        PanelRule r{};
        constexpr int n = 12;
        for (int i = 0; i < (n + 1) / 2; ++i) {
            double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p1 = 1.0, p2 = 0.0;
                for (int j = 1; j <= n; ++j) {
                    const double p3 = p2;
                    p2 = p1;
                    p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
                }
                pp = n * (z * p1 - p2) / (z * z - 1.0);
                const double dz = p1 / pp;
                z -= dz;
                if (std::abs(dz) < 1e-16) break;
            }
            r.nodes[i] = -z;
            r.nodes[n - 1 - i] = z;
            r.weights[i] = r.weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
        }
        return r;
    }();
    return kRule;
}

double panel_integral(const std::function<double(double)>& f, double a, double b) {
    const PanelRule& r = panel_rule();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 12; ++i) sum += r.weights[i] * f(mid + half * r.nodes[i]);
    return sum * half;
}

}  // namespace

QuadratureRule gauss_laguerre_rule(int order) {
    if (order < 1 || order > kMaxRuleOrder)
        throw std::invalid_argument("gauss_laguerre_rule: order must be in [1, 256]");

    QuadratureRule rule;
    rule.order = order;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    rule.log_weights.resize(order);

    std::vector<long double> roots(static_cast<std::size_t>(order));
    long double z = 0.0L;
    for (int i = 0; i < order; ++i) {
        // Stroud-Secrest style initial guesses, marching up from the smallest root.
        if (i == 0) {
            z = 3.0L / (1.0L + 2.4L * order);
        } else if (i == 1) {
            z += 15.0L / (1.0L + 2.5L * order);
        } else {
            const long double ai = i - 1;
            z += (1.0L + 2.55L * ai) / (1.9L * ai) * (z - roots[i - 2]);
        }
        bool converged = false;
        LaguerrePair p{0.0L, 0.0L};
        long double pp = 0.0L;
        for (int it = 0; it < 200; ++it) {
            p = laguerre_pair(order, z);
            pp = order * (p.ln - p.lnm1) / z;  // L_N'(z) = N (L_N - L_{N-1}) / z
            const long double dz = p.ln / pp;
            z -= dz;
            if (std::abs(dz) <= 1e-17L * (1.0L + z)) {
                p = laguerre_pair(order, z);
                pp = order * (p.ln - p.lnm1) / z;
                converged = true;
                break;
            }
        }
        if (!converged)
            throw std::runtime_error("gauss_laguerre_rule: Newton iteration failed at node " +
                                     std::to_string(i) + " of order " + std::to_string(order));
        // w = -1 / (L_N'(x) N L_{N-1}(x)), positive exactly when the derivative
        // and L_{N-1} have opposite signs; evaluated in log form since the
        // product overflows past order ~190.
        if (p.lnm1 == 0.0L || pp == 0.0L || (pp < 0.0L) == (p.lnm1 < 0.0L))
            throw std::runtime_error("gauss_laguerre_rule: non-positive weight at order " +
                                     std::to_string(order));
        const long double log_w =
            -(std::log(std::abs(pp)) + std::log(static_cast<long double>(order)) +
              std::log(std::abs(p.lnm1)));
        roots[i] = z;
        rule.nodes[i] = static_cast<double>(z);
        rule.log_weights[i] = static_cast<double>(log_w);
        rule.weights[i] = static_cast<double>(std::exp(log_w));
    }
    validate_rule(rule);
    return rule;
}

const QuadratureRule& shared_gauss_laguerre_rule(int order) {
    static std::map<int, QuadratureRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, gauss_laguerre_rule(order)).first;
    return it->second;
}

int ratio_rule_order(int m, int n) {
    const int needed = (m + n) / 2 + 10;
    return std::max(kDefaultRatioOrder, needed);
}

double integrate_ratio_scaled(int m, int n, double log_scale, const QuadratureRule& rule) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("integrate_ratio: m and n must be non-negative");
    if (rule.order < (m + n) / 2 + 10)
        throw std::invalid_argument("integrate_ratio: rule order below (m+n)/2 + 10");
    double sum = 0.0;
    for (int i = 0; i < rule.order; ++i) {
        const double x = rule.nodes[i];
        const double term =
            m == 0 ? std::exp(log_scale + rule.log_weights[i])
                   : std::exp(log_scale + m * std::log(x) + rule.log_weights[i]);
        sum += term / laguerre_neg(n, x);
    }
    return sum;
}

IntegralEstimate integrate_ratio(int m, int n, const QuadratureRule& rule) {
    if (m > 170)
        throw std::domain_error(
            "integrate_ratio: raw value overflows a double for m > 170; use the scaled form");
    const double value = integrate_ratio_scaled(m, n, 0.0, rule);
    const int doubled = std::min(2 * rule.order, kMaxRuleOrder);
    const double check = integrate_ratio_scaled(m, n, 0.0, shared_gauss_laguerre_rule(doubled));
    IntegralEstimate est;
    est.value = value;
    est.error_estimate = std::abs(value - check);
    est.precision_warning = est.error_estimate > 1e-9 * std::abs(value);
    return est;
}

IntegralEstimate integrate_ratio(int m, int n) {
    return integrate_ratio(m, n, shared_gauss_laguerre_rule(ratio_rule_order(m, n)));
}

IntegralEstimate integrate_adaptive(const std::function<double(double)>& f, double lo, double hi) {
    if (!(hi >= lo)) throw std::invalid_argument("integrate_adaptive: hi must be >= lo");
    if (!(std::isfinite(lo) && std::isfinite(hi)))
        throw std::invalid_argument("integrate_adaptive: bounds must be finite");
    IntegralEstimate est;
    if (hi == lo) return est;

    constexpr double kRelTol = 1e-12;
    constexpr int kPanelCap = 10000;

    struct Panel {
        double a, b, estimate;
    };
    std::vector<Panel> work;
    work.push_back({lo, hi, panel_integral(f, lo, hi)});
    double scale = std::abs(work.back().estimate);
    int panels = 1;

    while (!work.empty()) {
        const Panel p = work.back();
        work.pop_back();
        const double mid = 0.5 * (p.a + p.b);
        const double left = panel_integral(f, p.a, mid);
        const double right = panel_integral(f, mid, p.b);
        const double refined = left + right;
        const double residual = std::abs(refined - p.estimate);
        scale = std::max(scale, std::abs(est.value) + std::abs(refined));
        const bool width_floor = (p.b - p.a) <= 1e-14 * (std::abs(p.a) + std::abs(p.b) + 1.0);
        if (residual <= kRelTol * std::max(scale, 1e-300) || width_floor) {
            est.value += refined;
            est.error_estimate += residual;
        } else if (panels >= kPanelCap) {
            est.value += refined;
            est.error_estimate += residual;
            est.precision_warning = true;
        } else {
            work.push_back({mid, p.b, right});
            work.push_back({p.a, mid, left});
            ++panels;
        }
    }
    return est;
}

IntegralEstimate integrate_radial(const std::function<double(double)>& density, double alpha,
                                  double r_lo, double r_hi) {
    if (!(alpha > 0.0)) throw std::invalid_argument("integrate_radial: alpha must be positive");
    if (!(r_lo >= 0.0)) throw std::invalid_argument("integrate_radial: r_lo must be >= 0");
    return integrate_adaptive([&](double r) { return 2.0 * alpha * density(r) * r; }, r_lo, r_hi);
}

}  // namespace fock
