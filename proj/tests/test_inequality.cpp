#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "fock/inequality.hpp"
#include "fock/sequences.hpp"
#include "oracles.hpp"

using namespace fock;

namespace {

double uniform01(std::mt19937& rng) { return rng() * (1.0 / 4294967296.0); }

PolynomialF random_poly(std::mt19937& rng, int degree) {
    std::vector<std::complex<double>> c(static_cast<std::size_t>(degree) + 1);
    for (auto& coeff : c)
        coeff = std::complex<double>(2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0);
    return PolynomialF(std::move(c));
}

}  // namespace

TEST_CASE("fock_norm_sq on monomials and small sums") {
    CHECK(fock_norm_sq(PolynomialF({std::complex<double>(1.0)}), M_PI) ==
          doctest::Approx(1.0).epsilon(1e-15));
    for (int k : {1, 3, 7}) {
        for (double alpha : {0.5, 1.0, M_PI}) {
            const double expected = static_cast<double>(oracle::factorial_ld(k)) *
                                    std::pow(alpha, -k);
            CHECK(fock_norm_sq(PolynomialF::monomial(k), alpha) ==
                  doctest::Approx(expected).epsilon(1e-13));
        }
    }
    CHECK(fock_norm_sq(PolynomialF({1.0, 1.0}), 1.0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("taylor_tail_norm_sq drops the Taylor head") {
    CHECK(taylor_tail_norm_sq(PolynomialF({1.0, 1.0}), 1.0, 1) ==
          doctest::Approx(1.0).epsilon(1e-15));
    const PolynomialF f({0.3, -0.7, 2.0, 0.1});
    CHECK(taylor_tail_norm_sq(f, 1.3, 0) == doctest::Approx(fock_norm_sq(f, 1.3)).epsilon(1e-15));
    CHECK(taylor_tail_norm_sq(PolynomialF::monomial(3), 1.0, 2) ==
          doctest::Approx(6.0).epsilon(1e-15));
}

TEST_CASE("local_mass equality case and empty interval") {
    const FockParams params(M_PI, 0);
    const RadialProfile one(PolynomialF({std::complex<double>(1.0)}), params);
    for (double R : {0.5, 1.0, 2.0})
        CHECK(local_mass(one, 0.0, R).value ==
              doctest::Approx(1.0 - std::exp(-M_PI * R * R)).epsilon(1e-13));
    CHECK(local_mass(one, 0.8, 0.8).value == 0.0);

    const RadialProfile z1(PolynomialF::monomial(1), FockParams(M_PI, 1));
    CHECK(local_mass(z1, 0.0, 1.0).value ==
          doctest::Approx(0.187067394261079).epsilon(1e-11));
}

TEST_CASE("faber_krahn_margin: equality case saturates, monomial grid positive") {
    const PolynomialF one({std::complex<double>(1.0)});
    for (double R : {0.5, 1.0, 2.0})
        CHECK(std::abs(faber_krahn_margin(one, FockParams(M_PI, 0), 0.0, R)) <= 1e-12);

    for (int m = 1; m <= 20; ++m)
        for (double R : {0.5, 1.0, 2.0, 4.0})
            CHECK(faber_krahn_margin(PolynomialF::monomial(m), FockParams(M_PI, 1), 0.0, R) > 0.0);

    // Goldens pinned from a 30-digit reference computation.
    CHECK(faber_krahn_margin(PolynomialF::monomial(1), FockParams(M_PI, 1), 0.0, 1.0) ==
          doctest::Approx(0.130648066439327).epsilon(1e-10));
    CHECK(faber_krahn_margin(PolynomialF::monomial(5), FockParams(1.0, 2), 1.0, 2.0) ==
          doctest::Approx(45.5335559947887).epsilon(1e-10));

    CHECK_THROWS_AS(faber_krahn_margin(PolynomialF({0.0, 0.0}), FockParams(1.0, 0), 0.0, 1.0),
                    std::invalid_argument);
}

TEST_CASE("random polynomials keep positive margins over disks and annuli") {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 4; ++trial) {
        const PolynomialF f = random_poly(rng, 10);
        for (int n = 0; n <= 4; ++n) {
            const FockParams params(trial % 2 == 0 ? 1.0 : M_PI, n);
            for (auto [lo, hi] : {std::pair{0.0, 0.8}, {0.5, 1.5}, {1.0, 2.0}})
                CHECK(faber_krahn_margin(f, params, lo, hi) > 0.0);
        }
    }
}

TEST_CASE("global mass identity: monomials, n = 0, coefficient golden") {
    for (int k : {1, 4, 9}) {
        const FockParams params(1.0, 1);
        const GlobalMassIdentity id = global_mass_identity(PolynomialF::monomial(k), params);
        const double expected = a_quad(1, k) * static_cast<double>(oracle::factorial_ld(k));
        CHECK(id.coefficient == doctest::Approx(expected).epsilon(1e-12));
        CHECK(id.quadrature == doctest::Approx(id.coefficient).epsilon(1e-8));
        CHECK_FALSE(id.precision_warning);
    }

    const PolynomialF f({0.5, -1.0, std::complex<double>(0.0, 2.0), 0.25});
    const GlobalMassIdentity at0 = global_mass_identity(f, FockParams(1.5, 0));
    CHECK(at0.coefficient == doctest::Approx(fock_norm_sq(f, 1.5)).epsilon(1e-10));
    CHECK(at0.quadrature == doctest::Approx(at0.coefficient).epsilon(1e-8));

    // f = 1 + w^2, n = 1, alpha = 1: coefficient side is a_2(1) * 2 = 2 g_2.
    const GlobalMassIdentity gm =
        global_mass_identity(PolynomialF({1.0, 0.0, 1.0}), FockParams(1.0, 1));
    CHECK(gm.coefficient == doctest::Approx(1.6146105507072237).epsilon(1e-10));
    CHECK(gm.coefficient == doctest::Approx(1.614612).epsilon(5e-6));
    CHECK(gm.quadrature == doctest::Approx(gm.coefficient).epsilon(1e-8));
}

TEST_CASE("global mass identity agrees across a seeded polynomial sweep") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 3; ++trial) {
        const PolynomialF f = random_poly(rng, 20);
        for (int n = 0; n <= 4; ++n) {
            const GlobalMassIdentity id = global_mass_identity(f, FockParams(1.0 + trial, n));
            CHECK(std::abs(id.quadrature - id.coefficient) <= 1e-8 * std::abs(id.coefficient));
        }
    }
}

TEST_CASE("superlevel_set: disks for m = n, annuli for m > n") {
    // |f^{(n)}|^2 constant: u strictly decreasing, super-level sets are disks.
    const RadialProfile disk_profile(PolynomialF::monomial(1), FockParams(M_PI, 1));
    const LevelSet disk = superlevel_set(disk_profile, 1.0);
    CHECK(disk.inner_radius == 0.0);
    CHECK(disk.normalized_measure == doctest::Approx(1.0).epsilon(1e-10));

    const RadialProfile ann_profile(PolynomialF::monomial(2), FockParams(M_PI, 1));
    const LevelSet ann = superlevel_set(ann_profile, 1.0);
    CHECK(ann.inner_radius > 0.0);
    CHECK(std::abs(M_PI * (ann.outer_radius * ann.outer_radius -
                           ann.inner_radius * ann.inner_radius) -
                   1.0) <= 1e-10);

    // Large measure: the outer radius walks into the tail without failing.
    const LevelSet big = superlevel_set(ann_profile, 30.0);
    CHECK(big.normalized_measure == doctest::Approx(30.0).epsilon(1e-8));
    CHECK(big.outer_radius > ann.outer_radius);

    CHECK_THROWS_AS(superlevel_set(ann_profile, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(superlevel_set(ann_profile, -2.0), std::invalid_argument);
}

TEST_CASE("superlevel_set matches the 30-digit reference for f = z^3") {
    const RadialProfile profile(PolynomialF::monomial(3), FockParams(M_PI, 1));
    const LevelSet set = superlevel_set(profile, 1.0);
    CHECK(set.threshold == doctest::Approx(0.0527676966688).epsilon(1e-8));
    CHECK(set.inner_radius == doctest::Approx(0.557783317888).epsilon(1e-8));
    CHECK(set.outer_radius == doctest::Approx(0.793367579308).epsilon(1e-8));
}

TEST_CASE("superlevel_set rejects degenerate and non-unimodal profiles") {
    // n exceeds the degree: the density vanishes identically.
    const RadialProfile zero(PolynomialF({std::complex<double>(1.0)}), FockParams(1.0, 1));
    CHECK_THROWS_AS(superlevel_set(zero, 0.5), std::domain_error);

    // 1 + eps w^10 at n = 0: a pit at the origin and a second bump near
    // r^2 = 10, three sign changes on the grid.
    std::vector<std::complex<double>> c(11);
    c[0] = 1.0;
    c[10] = std::sqrt(1e-5);
    const RadialProfile bimodal(PolynomialF(std::move(c)), FockParams(1.0, 0));
    CHECK_THROWS_AS(superlevel_set(bimodal, 0.5), std::domain_error);
}

TEST_CASE("bathtub dominance for f = z^3") {
    const FockParams params(M_PI, 1);
    const RadialProfile profile(PolynomialF::monomial(3), params);
    const double s = 1.0;
    const LevelSet level = superlevel_set(profile, s);

    // The super-level set itself: equality.
    {
        const std::vector<std::pair<double, double>> self = {
            {level.inner_radius, level.outer_radius}};
        const BathtubReport rep = bathtub_check(profile, s, self);
        CHECK(rep.all_dominated);
        CHECK(rep.trials[0].mass == doctest::Approx(rep.superlevel_mass).epsilon(1e-11));
    }

    // Disk of equal measure: strictly dominated.
    {
        const std::vector<std::pair<double, double>> disk = {{0.0, std::sqrt(s / params.alpha)}};
        const BathtubReport rep = bathtub_check(profile, s, disk);
        CHECK(rep.all_dominated);
        CHECK(rep.superlevel_mass - rep.trials[0].mass > 1e-3);
        CHECK(rep.superlevel_mass == doctest::Approx(0.0565157333136229).epsilon(1e-9));
        CHECK(rep.trials[0].mass == doctest::Approx(0.0277325450034217).epsilon(1e-9));
    }

    // Twenty seeded random annuli of measure s.
    {
        std::mt19937 rng(7);
        std::vector<std::pair<double, double>> trials;
        for (int i = 0; i < 20; ++i) {
            const double r_lo = 0.05 + 1.5 * uniform01(rng);
            trials.emplace_back(r_lo, std::sqrt(r_lo * r_lo + s / params.alpha));
        }
        const BathtubReport rep = bathtub_check(profile, s, trials);
        CHECK(rep.all_dominated);
        for (const auto& trial : rep.trials)
            CHECK(trial.mass <= rep.superlevel_mass + 1e-10);
    }

    // A trial of the wrong measure is rejected, not silently compared.
    const std::vector<std::pair<double, double>> bad = {{0.0, 1.0}};
    CHECK_THROWS_AS(bathtub_check(profile, s, bad), std::invalid_argument);
}

TEST_CASE("pointwise bound ratio stays below 1 and saturates on the kernel") {
    // f = w, n = 1: the bound is attained at z = 0.
    const PolynomialF w({0.0, 1.0});
    CHECK(pointwise_bound_ratio(w, FockParams(1.0, 1), 0.0) ==
          doctest::Approx(1.0).epsilon(1e-13));
    for (double r : {0.5, 1.0, 2.0})
        CHECK(pointwise_bound_ratio(w, FockParams(1.0, 1), r) <= 1.0 + 1e-10);

    // Truncated reproducing kernel at z0 = 1: ratio within truncation error of 1.
    std::vector<std::complex<double>> kernel(31);
    for (int k = 0; k <= 30; ++k)
        kernel[k] = 1.0 / static_cast<double>(oracle::factorial_ld(k));
    const PolynomialF fk(std::move(kernel));
    const double ratio = pointwise_bound_ratio(fk, FockParams(1.0, 0), 1.0);
    CHECK(ratio >= 0.999);
    CHECK(ratio <= 1.0 + 1e-10);

    std::mt19937 rng(31);
    for (int trial = 0; trial < 6; ++trial) {
        const PolynomialF f = random_poly(rng, 8);
        for (int n = 0; n <= 4; ++n)
            for (double r : {0.0, 0.5, 1.0, 2.0})
                CHECK(pointwise_bound_ratio(f, FockParams(1.0, n), r) <= 1.0 + 1e-10);
    }

    CHECK_THROWS_AS(pointwise_bound_ratio(PolynomialF({1.0}), FockParams(1.0, 1), 0.5),
                    std::invalid_argument);
}

TEST_CASE("sharpness ratio: strictly inside (0, 1), small-R decay, measured pin") {
    const FockParams params(M_PI, 1);
    for (int m : {1, 5, 20, 50})
        for (double s : {0.5, 2.0, 8.0, 20.0}) {
            const double j = sharpness_ratio(std::sqrt(s / M_PI), m, params);
            CHECK(j > 0.0);
            CHECK(j < 1.0);
        }
    // Small R: J ~ R^{2(m-n)} -> 0.
    CHECK(sharpness_ratio(0.05, 3, params) < 1e-4);
    // The measured value at the pinned probe point (30-digit reference).
    CHECK(sharpness_ratio(std::sqrt(55.0 / M_PI), 50, params) ==
          doctest::Approx(0.80722973938539).epsilon(1e-9));

    CHECK_THROWS_AS(sharpness_ratio(-1.0, 3, params), std::invalid_argument);
    CHECK_THROWS_AS(sharpness_ratio(1.0, 0, FockParams(M_PI, 1)), std::invalid_argument);
}

TEST_CASE("superlevel mass is monotone in s and below the bound") {
    const struct {
        int m;
        FockParams params;
    } cases[] = {{2, FockParams(M_PI, 1)}, {4, FockParams(1.0, 2)}};
    for (const auto& c : cases) {
        const PolynomialF f = PolynomialF::monomial(c.m);
        const RadialProfile profile(f, c.params);
        const double norm = fock_norm_sq(f, c.params.alpha);
        double prev = 0.0;
        for (double s : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
            const LevelSet set = superlevel_set(profile, s);
            const double mass = local_mass(profile, set.inner_radius, set.outer_radius).value;
            CHECK(mass >= prev - 1e-12);
            CHECK(mass <= (1.0 - std::exp(-(c.params.n + 1.0) * s)) * norm);
            prev = mass;
        }
    }
}

TEST_CASE("polynomial derivative evaluation is consistent with finite differences") {
    const PolynomialF f({0.5, -1.5, std::complex<double>(2.0, 1.0), 0.0, 0.75});
    const std::complex<double> z(0.7, -0.3);
    const double h = 1e-6;
    const std::complex<double> fd =
        (f.derivative_at(0, z + std::complex<double>(h, 0.0)) -
         f.derivative_at(0, z - std::complex<double>(h, 0.0))) /
        (2.0 * h);
    CHECK(std::abs(fd - f.derivative_at(1, z)) <= 1e-8);
    CHECK(f.derivative_at(5, z) == std::complex<double>(0.0));
    // Radial mean square agrees with direct phase averaging.
    const double r = 1.3;
    double avg = 0.0;
    const int grid = 512;
    for (int i = 0; i < grid; ++i)
        avg += std::norm(f.derivative_at(2, std::polar(r, 2.0 * M_PI * i / grid))) / grid;
    CHECK(f.derivative_msq_radial(2, r) == doctest::Approx(avg).epsilon(1e-12));
}
