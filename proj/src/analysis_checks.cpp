#include "fock/analysis_checks.hpp"

#include <cmath>
#include <stdexcept>

namespace fock {

namespace {

double five_point_laplacian(const std::function<double(double, double)>& f, double x, double y,
                            double h) {
    return (f(x + h, y) + f(x - h, y) + f(x, y + h) + f(x, y - h) - 4.0 * f(x, y)) / (h * h);
}

}  // namespace

double delta_log_u_closed(double alpha, double r) {
    if (!(alpha > 0.0)) throw std::invalid_argument("delta_log_u_closed: alpha must be positive");
    if (!(r >= 0.0)) throw std::domain_error("delta_log_u_closed: r must be >= 0");
    const double d = 1.0 + alpha * r * r;
    return -4.0 * alpha * (1.0 + 1.0 / (d * d));
}

double delta_log_u_fd(const PolynomialF& f, double alpha, double x, double y, double step) {
    if (!(alpha > 0.0)) throw std::invalid_argument("delta_log_u_fd: alpha must be positive");
    if (!(step > 0.0)) throw std::invalid_argument("delta_log_u_fd: step must be positive");
    auto log_u = [&](double px, double py) {
        const std::complex<double> z(px, py);
        const double fp_sq = std::norm(f.derivative_at(1, z));
        const double r2 = px * px + py * py;
        const double value =
            std::log(fp_sq) - alpha * r2 - std::log(alpha * (1.0 + alpha * r2));
        if (!std::isfinite(value))
            throw std::domain_error("delta_log_u_fd: stencil hits a zero of f'");
        return value;
    };
    return five_point_laplacian(log_u, x, y, step);
}

double kummer_laplacian_closed(const FockParams& params, double t) {
    if (!(t >= 0.0)) throw std::domain_error("kummer_laplacian_closed: t must be >= 0");
    const double alpha = params.alpha;
    const int n = params.n;
    const double x = alpha * t;
    const double f1 = kummer(1 + n, 1, x);
    const double f2 = kummer(2 + n, 2, x);
    const double f3 = kummer(3 + n, 3, x);
    const double bracket = -2.0 * (1 + n) * alpha * t * f2 * f2 +
                           f1 * (2.0 * f2 + (2 + n) * alpha * t * f3);
    return 2.0 * (1 + n) * alpha * bracket / (f1 * f1);
}

double log_kummer_laplacian_fd(const FockParams& params, double x, double y, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("log_kummer_laplacian_fd: step must be positive");
    auto log_f = [&](double px, double py) {
        return std::log(kummer(1 + params.n, 1, params.alpha * (px * px + py * py)));
    };
    return five_point_laplacian(log_f, x, y, step);
}

KummerKPair k_function(const FockParams& params, double t) {
    if (!(t >= 0.0)) throw std::domain_error("k_function: t must be >= 0");
    const double alpha = params.alpha;
    const int n = params.n;
    const double x = alpha * t;
    const double f11 = kummer(1 + n, 1, x);
    const double f12 = kummer(1 + n, 2, x);
    KummerKPair pair;
    pair.factored = -4.0 * alpha * alpha * n * t * f12 * (f11 + n * f12);
    pair.from_definition =
        (kummer_laplacian_closed(params, t) - 4.0 * alpha * (1 + n)) * f11 * f11;
    return pair;
}

double richardson_laplacian(const std::function<double(double)>& fd_at_step, double step) {
    const double f0 = fd_at_step(step);
    const double f1 = fd_at_step(step / 2.0);
    const double f2 = fd_at_step(step / 4.0);
    const double r0 = (4.0 * f1 - f0) / 3.0;
    const double r1 = (4.0 * f2 - f1) / 3.0;
    return (16.0 * r1 - r0) / 15.0;
}

}  // namespace fock
