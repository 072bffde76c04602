#pragma once

#include <functional>
#include <vector>

namespace fock {

/// Nodes and weights of the degree-N Gauss-Laguerre rule: for smooth f,
/// int_0^inf e^{-r} f(r) dr ~ sum_i w_i f(x_i), exact for polynomials of
/// degree <= 2N-1.
///
/// log_weights is always finite; weights = exp(log_weights) can underflow to
/// zero in the far tail of orders beyond ~190, where the true weight drops
/// below the double range (~e^{-745}). The scaled integrators work from
/// log_weights, so those nodes still contribute when a large prefactor is
/// folded in.
struct QuadratureRule {
    int order = 0;
    std::vector<double> nodes;        // strictly increasing, all positive
    std::vector<double> weights;      // sum to 1; positive wherever representable
    std::vector<double> log_weights;  // ln of the (positive) true weights
};

/// Result of a numerical integration together with an a-posteriori error
/// estimate (difference of two rule orders, or the sum of accepted panel
/// residuals for the adaptive integrator).
struct IntegralEstimate {
    double value = 0.0;
    double error_estimate = 0.0;
    bool precision_warning = false;
};

constexpr int kMaxRuleOrder = 256;
constexpr int kDefaultRatioOrder = 128;

/// Builds the order-N Gauss-Laguerre rule by Newton iteration on L_N from
/// the classical initial guesses. Construction failure (non-convergence or
/// an invariant violation) throws; it is never silently degraded.
QuadratureRule gauss_laguerre_rule(int order);

/// Cached, shareable rule. Thread-safe; rules are immutable once built.
const QuadratureRule& shared_gauss_laguerre_rule(int order);

/// Rule order used for the ratio integrals: large enough to integrate the
/// polynomial part of r^m / L_n(-r) exactly, with headroom for the smooth
/// remainder.
int ratio_rule_order(int m, int n);

/// Raw ratio integral I(m, n) = int_0^inf e^{-r} r^m / L_n(-r) dr evaluated
/// with the given rule; the error estimate compares against the rule of
/// twice the order (capped at kMaxRuleOrder). Requires m <= 170 so the value
/// itself fits in a double; the scaled variant below has no such limit.
IntegralEstimate integrate_ratio(int m, int n, const QuadratureRule& rule);
IntegralEstimate integrate_ratio(int m, int n);

/// sum_i w_i exp(log_scale + m ln x_i) / L_n(-x_i) -- the ratio integral with
/// a caller-supplied log prefactor folded into every term so that huge
/// Gamma-ratio prefactors never materialize.
double integrate_ratio_scaled(int m, int n, double log_scale, const QuadratureRule& rule);

/// Adaptive panel-bisection integration of f over the finite interval
/// [lo, hi]: each panel is refined until its residual drops below 1e-12 of
/// the accumulated value, up to a 10^4 panel cap (cap exhaustion sets the
/// precision warning).
IntegralEstimate integrate_adaptive(const std::function<double(double)>& f, double lo, double hi);

/// Normalized radial mass 2 alpha int_{r_lo}^{r_hi} u(r) r dr of a radial
/// density u, i.e. (alpha/pi) times the plane integral of u over the annulus.
IntegralEstimate integrate_radial(const std::function<double(double)>& density, double alpha,
                                  double r_lo, double r_hi);

}  // namespace fock
