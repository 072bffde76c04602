#pragma once

#include <functional>

#include "fock/inequality.hpp"
#include "fock/specfun.hpp"

namespace fock {

/// Closed form of Delta log u for the n = 1 density u built from any f with
/// nonvanishing derivative: -4 alpha (1 + 1/(1 + alpha r^2)^2). Independent
/// of f because log|f'|^2 is harmonic away from zeros of f'.
double delta_log_u_closed(double alpha, double r);

/// 5-point finite-difference Laplacian of log u at (x, y) for the pointwise
/// n = 1 density u = |f'(z)|^2 e^{-alpha|z|^2} / (alpha (1 + alpha|z|^2)).
/// Rejects stencils on which f' vanishes.
double delta_log_u_fd(const PolynomialF& f, double alpha, double x, double y, double step);

/// g(t) = Delta log F[1+n, 1, alpha(x^2+y^2)] at t = x^2 + y^2, from the
/// closed form in terms of F[1+n,1,.], F[2+n,2,.], F[3+n,3,.].
/// g(0) = 4 alpha (1+n) and g(t) <= g(0) everywhere.
double kummer_laplacian_closed(const FockParams& params, double t);

/// 5-point finite-difference Laplacian of log F[1+n, 1, alpha(x^2+y^2)].
double log_kummer_laplacian_fd(const FockParams& params, double x, double y, double step);

/// k(t) evaluated two ways: the factored closed form
/// -4 alpha^2 n t F[1+n,2,at](F[1+n,1,at] + n F[1+n,2,at]), and its defining
/// expression (g(t) - 4 alpha (1+n)) F[1+n,1,at]^2. Both are <= 0; their
/// agreement catches a transcription slip in either formula.
struct KummerKPair {
    double factored = 0.0;
    double from_definition = 0.0;
};
KummerKPair k_function(const FockParams& params, double t);

/// Two-stage Richardson extrapolation of a second-order finite-difference
/// estimate from steps {h, h/2, h/4}: cancels the h^2 and h^4 error terms.
double richardson_laplacian(const std::function<double(double)>& fd_at_step, double step);

}  // namespace fock
