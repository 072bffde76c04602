#pragma once

#include <stdexcept>

namespace fock {

/// Parameter pair shared by every computation: the Gaussian weight exponent
/// alpha > 0 of dmu_alpha = (alpha/pi) e^{-alpha|z|^2} dA and the derivative
/// order n >= 0.
struct FockParams {
    double alpha;
    int n;

    FockParams(double alpha_, int n_) : alpha(alpha_), n(n_) {
        if (!(alpha > 0.0))
            throw std::invalid_argument("FockParams: alpha must be positive");
        if (n < 0)
            throw std::invalid_argument("FockParams: n must be non-negative");
    }
};

/// Laguerre polynomial at negative argument, L_n(-x) for x >= 0.
///
/// Evaluated as sum_{k=0}^{n} C(n,k) x^k / k!. Every summand is positive, so
/// the direct sum is free of cancellation and the result is >= 1.
double laguerre_neg(int n, double x);

/// Kummer confluent hypergeometric function 1F1(a, b, x) for integer
/// a, b >= 1 and x >= 0. Power series with term recurrence
/// t_{k+1} = t_k (a+k) x / ((b+k)(k+1)), stopped when the term drops below
/// 1e-16 of the partial sum. Satisfies kummer(1+n, 1, r) = e^r L_n(-r).
double kummer(int a, int b, double x);

/// Exponential integral at 1: E_k(1) = int_1^inf e^{-t} t^{-k} dt, k >= 1.
/// E_1(1) is seeded from a continued fraction; larger k by the upward
/// recurrence E_{k+1}(1) = (e^{-1} - E_k(1)) / k, which is contractive here.
double expint_at_one(int k);

/// ln(k!) from a cached cumulative-sum table. All Gamma-ratio arithmetic in
/// the sequence machinery exponentiates differences of these values.
double log_factorial(int k);

}  // namespace fock
