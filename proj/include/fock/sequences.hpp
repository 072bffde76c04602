#pragma once

#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "fock/quadrature.hpp"

namespace fock {

/// Resolution of a strict a_k < 1 check at one index. Strict inequalities are
/// tested with zero tolerance on the value itself; a value within the
/// quadrature error estimate of 1 is inconclusive rather than failed, and a
/// value beyond the estimate on the wrong side is a conjecture violation.
enum class ScanStatus { kVerified, kInconclusive, kViolation, kExploratory };

std::string_view to_string(ScanStatus status);

/// One row of a sequence table: both computations of a_k at the argument
/// p = k, the threshold flags under the two index conventions, and the
/// quadrature-vs-recurrence cross-check flag.
struct SequenceRecord {
    int n = 0;
    int k = 0;                        // argument of A, k >= n
    double a_quad = 0.0;              // quadrature value
    double a_quad_error = 0.0;        // order-doubling estimate + rounding floor
    double a_rec = 0.0;               // recurrence value; NaN where undefined (k < 2n or n = 0)
    double lower = 0.0;               // k/(k+1), argument convention
    double lower_shifted = 0.0;       // (k-n)/(k-n+1), shifted convention
    bool below_one = false;           // a_quad < 1, strict
    bool above_lower = false;         // a_quad > k/(k+1)
    bool above_lower_shifted = false; // a_quad > (k-n)/(k-n+1)
    bool cross_check_flagged = false; // |a_rec - a_quad| > kCrossCheckTol
    ScanStatus status = ScanStatus::kVerified;
};

struct GSequence {
    int k = 0;
    double g = 0.0;
};

/// Largest supported sequence argument: keeps the doubled error-estimate rule
/// within the order cap, 2 * max(128, k/2 + 10) <= 256.
constexpr int kMaxSequenceIndex = 236;

/// Cancellation-detector threshold for |a_rec - a_quad|.
constexpr double kCrossCheckTol = 1e-7;

/// a_k at derivative order n by quadrature:
/// Gamma(1+k) / (n! Gamma(1+k-n)^2) * int_0^inf e^{-r} r^{k-n} / L_n(-r) dr,
/// with the prefactor folded into the quadrature terms through log-factorials.
IntegralEstimate a_quad_est(int n, int k);
double a_quad(int n, int k);

/// C(k, n) = (k-n)! (k+n)! / (k!)^2, the recurrence's inhomogeneous term.
double coeff_C(int k, int n);

/// C_h(k, n) = ((h+k-n)!)^2 (n!)^2 (k+n)! / ((h!)^2 (k!)^2 (h+k)! (n-h)!).
double coeff_Ch(int h, int k, int n);

/// A(k+n) = C(k,n) - sum_{h<n} C_h(k,n) A(k+h), run upward from quadrature
/// seeds at arguments n..2n-1. Returns A(p) for p = n..k_max, index p - n.
/// Templated on the working precision so the test suite can re-evaluate
/// flagged entries in long double.
template <class Real>
std::vector<Real> recurrence_values(int n, int k_max, std::span<const double> seeds);

/// Full table with both computations and cross-check flags. Requires n >= 1
/// and k_max >= 2n (the recurrence needs a full seed block).
std::vector<SequenceRecord> a_recurrence_table(int n, int k_max);

/// g_1 = e E_1(1), g_{k+1} = (k+1)(k - g_k)/k^2.
std::vector<GSequence> g_seq(int k_max);

/// Normalized residual of
/// sum_{h=0}^{n} A(h+k) Gamma(1+h+k-n)^2 / (Gamma(1+h)^2 Gamma(1+h+k) Gamma(1+n-h))
///   = Gamma(1+k-n) / (n!)^2,
/// given values = A(k)..A(k+n). Returns (LHS - RHS) / RHS.
double sum_identity_residual(int n, int k, std::span<const double> a_values);

/// Threshold scan against 1 and k/(k+1): verification for n <= 4, exploration
/// for larger n. Conjecture violations (a_quad >= 1 beyond the error bar) are
/// data, not errors; they surface through the record status.
std::vector<SequenceRecord> threshold_scan(int n, int k_max);

// --- template implementation ---

template <class Real>
std::vector<Real> recurrence_values(int n, int k_max, std::span<const double> seeds) {
    if (n < 1) throw std::invalid_argument("recurrence_values: n must be >= 1");
    if (k_max < 2 * n) throw std::invalid_argument("recurrence_values: k_max must be >= 2n");
    if (static_cast<int>(seeds.size()) != n)
        throw std::invalid_argument("recurrence_values: expected n seed values A(n)..A(2n-1)");

    auto coeff_c = [n](int k) {
        Real c = 1;
        for (int j = 1; j <= n; ++j) c *= Real(k + j) / Real(k - n + j);
        return c;
    };
    auto coeff_ch = [n](int h, int k) {
        Real fact_n = 1, fact_h = 1, fact_nh = 1;
        for (int j = 2; j <= n; ++j) fact_n *= j;
        for (int j = 2; j <= h; ++j) fact_h *= j;
        for (int j = 2; j <= n - h; ++j) fact_nh *= j;
        Real c = (fact_n * fact_n) / (fact_h * fact_h * fact_nh);
        for (int i = 1; i <= n - h; ++i) {
            const Real d = Real(h + k - n + i);
            c *= Real(h + k + i) / (d * d);
        }
        return c;
    };

    std::vector<Real> values(static_cast<std::size_t>(k_max - n + 1));
    for (int p = n; p < 2 * n; ++p) values[p - n] = Real(seeds[p - n]);
    for (int p = 2 * n; p <= k_max; ++p) {
        const int k = p - n;
        Real acc = coeff_c(k);
        for (int h = 0; h < n; ++h) acc -= coeff_ch(h, k) * values[k + h - n];
        values[p - n] = acc;
    }
    return values;
}

}  // namespace fock
