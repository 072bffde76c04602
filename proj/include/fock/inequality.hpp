#pragma once

#include <complex>
#include <span>
#include <utility>
#include <vector>

#include "fock/quadrature.hpp"
#include "fock/specfun.hpp"

namespace fock {

/// Finite Taylor polynomial f(w) = sum_k c_k w^k with complex coefficients.
class PolynomialF {
public:
    PolynomialF() = default;
    explicit PolynomialF(std::vector<std::complex<double>> coefficients);

    static PolynomialF monomial(int degree, std::complex<double> coefficient = 1.0);

    const std::vector<std::complex<double>>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const;

    /// f^{(n)}(z) = sum_{k>=n} c_k k!/(k-n)! z^{k-n}.
    std::complex<double> derivative_at(int n, std::complex<double> z) const;

    /// Phase average of |f^{(n)}|^2 on the circle of radius r:
    /// sum_{k>=n} |c_k k!/(k-n)!|^2 r^{2(k-n)} (cross terms vanish).
    double derivative_msq_radial(int n, double r) const;

    /// |c_{j+n} (j+n)!/j!|^2 for j = 0..degree-n, the coefficients of the
    /// radial mean square above as a polynomial in r^2.
    std::vector<double> derivative_msq_coefficients(int n) const;

private:
    std::vector<std::complex<double>> coeffs_;
};

/// Radial density u_n(r) = |f^{(n)}|^2(r) e^{-alpha r^2} / (alpha^n n! L_n(-alpha r^2))
/// with |f^{(n)}|^2(r) the phase-averaged square above. This is the integrand
/// of the local-mass functional; all level-set machinery runs on it.
class RadialProfile {
public:
    RadialProfile(PolynomialF f, FockParams params);

    double operator()(double r) const { return density(r); }
    double density(double r) const;

    const FockParams& params() const { return params_; }
    const PolynomialF& source() const { return f_; }

private:
    PolynomialF f_;
    FockParams params_;
    std::vector<double> msq_coeffs_;  // |b_j|^2 on r^{2j}
};

/// Super-level set {u > t} of a unimodal radial profile: an annulus (or disk
/// when inner_radius = 0), with normalized measure alpha (r_out^2 - r_in^2).
struct LevelSet {
    double threshold = 0.0;
    double inner_radius = 0.0;
    double outer_radius = 0.0;
    double normalized_measure = 0.0;
};

/// ||f||^2_{2,alpha} = sum_k |c_k|^2 k! alpha^{-k} (orthogonality of monomials).
double fock_norm_sq(const PolynomialF& f, double alpha);

/// ||f - T_n f||^2_{2,alpha} = sum_{k>=n} |c_k|^2 k! alpha^{-k}, the tail of
/// the norm after removing the degree-(n-1) Taylor head.
double taylor_tail_norm_sq(const PolynomialF& f, double alpha, int n);

/// Normalized measure of the annulus r_lo <= r <= r_hi: alpha (r_hi^2 - r_lo^2),
/// i.e. alpha/pi times its Lebesgue measure.
double normalized_measure(double alpha, double r_lo, double r_hi);

/// (alpha/pi) int_{annulus} u_n dA = 2 alpha int u_n(r) r dr.
IntegralEstimate local_mass(const RadialProfile& profile, double r_lo, double r_hi);

/// The main bound at normalized measure s: (1 - e^{-(n+1)s}) ||f||^2_{2,alpha}.
double faber_krahn_bound(const PolynomialF& f, const FockParams& params, double s);

/// bound - mass over the annulus [r_lo, r_hi]; positive means the inequality
/// holds there. A negative value is a theorem violation and is the caller's
/// to surface -- it never raises.
double faber_krahn_margin(const PolynomialF& f, const FockParams& params, double r_lo,
                          double r_hi);

struct GlobalMassIdentity {
    double quadrature = 0.0;   // full-plane mass via truncation at a certified radius
    double coefficient = 0.0;  // sum_{k>=n} a_k |c_k|^2 k! alpha^{-k}
    double tail_bound = 0.0;   // certified bound on the truncated remainder
    bool precision_warning = false;
};

/// Both evaluations of the full-plane mass I_n(f); they must agree.
GlobalMassIdentity global_mass_identity(const PolynomialF& f, const FockParams& params);

/// Finds the super-level set of normalized measure s by bisection on the
/// threshold. The profile must be unimodal -- checked on a 10^4-point grid
/// (at most one sign change of the discrete derivative; anything more makes
/// some super-level set disconnected) -- and s must be positive.
LevelSet superlevel_set(const RadialProfile& profile, double s);

struct BathtubTrial {
    double r_lo = 0.0;
    double r_hi = 0.0;
    double mass = 0.0;
    bool dominated = false;  // mass <= super-level mass + 1e-10
};

struct BathtubReport {
    LevelSet level_set;
    double superlevel_mass = 0.0;
    std::vector<BathtubTrial> trials;
    bool all_dominated = true;
};

/// Checks that every equal-measure trial annulus carries no more mass than
/// the super-level set of the same measure. Trials whose normalized measure
/// differs from s by more than 1e-8 are rejected.
BathtubReport bathtub_check(const RadialProfile& profile, double s,
                            std::span<const std::pair<double, double>> trials);

/// max over a 64-point phase grid of
/// |f^{(n)}(z)| / (e^{alpha|z|^2/2} sqrt(alpha^n n! L_n(-alpha|z|^2)) ||f - T_n f||),
/// at |z| = z_modulus. The pointwise bound says this never exceeds 1.
double pointwise_bound_ratio(const PolynomialF& f, const FockParams& params, double z_modulus);

/// J(R, m): local mass of z^m over the disk of radius R divided by the bound
/// at s = alpha R^2. Lies in (0, 1); approaches 1 along R, m -> infinity but
/// never attains it.
double sharpness_ratio(double R, int m, const FockParams& params);

}  // namespace fock
