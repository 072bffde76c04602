#include "fock/specfun.hpp"

#include <cmath>
#include <vector>

namespace fock {

namespace {

// E_1(1) by the standard continued fraction
//   E_1(x) = e^{-x} / (x + 1 - 1^2/(x + 3 - 2^2/(x + 5 - ...))),
// evaluated with the modified Lentz scheme.
double e1_at_one() {
    const double x = 1.0;
    double b = x + 1.0;
    double c = 1.0 / 1e-300;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 200; ++i) {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 1e-17) break;
    }
    return h * std::exp(-x);
}

constexpr int kLogFactorialTableSize = 1025;

}  // namespace

double laguerre_neg(int n, double x) {
    if (n < 0) throw std::invalid_argument("laguerre_neg: n must be non-negative");
    if (!(x >= 0.0)) throw std::domain_error("laguerre_neg: x must be non-negative");
    double sum = 0.0;
    double term = 1.0;  // C(n,k) x^k / k!
    for (int k = 0; k <= n; ++k) {
        sum += term;
        term *= x * (n - k) / ((k + 1.0) * (k + 1.0));
    }
    return sum;
}

double kummer(int a, int b, double x) {
    if (a < 1 || b < 1) throw std::invalid_argument("kummer: a and b must be positive integers");
    if (!(x >= 0.0)) throw std::domain_error("kummer: x must be non-negative");
    constexpr double kRelTol = 1e-16;
    constexpr int kMaxTerms = 10000;
    double sum = 1.0;
    double term = 1.0;
    for (int k = 0; k < kMaxTerms; ++k) {
        term *= (a + k) * x / ((b + static_cast<double>(k)) * (k + 1.0));
        sum += term;
        if (term < kRelTol * sum) return sum;
    }
    // Unreachable for in-contract arguments: terms decay factorially once k > x.
    throw std::runtime_error("kummer: series did not converge within the iteration cap");
}

double expint_at_one(int k) {
    if (k < 1) throw std::invalid_argument("expint_at_one: k must be >= 1");
    static const double kE1 = e1_at_one();
    static const double kInvE = std::exp(-1.0);
    double e = kE1;
    for (int j = 1; j < k; ++j) e = (kInvE - e) / j;
    return e;
}

double log_factorial(int k) {
    if (k < 0) throw std::invalid_argument("log_factorial: k must be non-negative");
    static const std::vector<double> kTable = [] {
        std::vector<double> t(kLogFactorialTableSize);
        long double acc = 0.0L;
        t[0] = 0.0;
        for (int j = 1; j < kLogFactorialTableSize; ++j) {
            acc += std::log(static_cast<long double>(j));
            t[j] = static_cast<double>(acc);
        }
        return t;
    }();
    if (k < kLogFactorialTableSize) return kTable[static_cast<std::size_t>(k)];
    return std::lgamma(static_cast<double>(k) + 1.0);
}

}  // namespace fock
