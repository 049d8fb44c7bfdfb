#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "vacfluc/overlap.hpp"

using namespace vacfluc;
using Catch::Approx;

TEST_CASE("mu_closed at reference points")
{
    const double z0 = 123.4;
    CHECK(mu_closed(0.0, z0) == 1.0);
    CHECK(mu_closed(z0, z0) == Approx(std::pow(2.0, -0.25)).epsilon(1e-14));       // 0.84090
    CHECK(mu_closed(2.0 * z0, z0) == Approx(std::pow(5.0, -0.25)).epsilon(1e-14)); // 0.66874
}

TEST_CASE("mu_closed printed form factorizes to (1+u^2)^(-1/4)")
{
    const double z0 = std::numbers::pi * 1e4; // w0 = 100
    for (int i = 0; i < 1000; ++i) {
        const double u = 1e-3 * std::pow(10.0, 6.0 * i / 999.0); // u in [1e-3, 1e3]
        const double z1 = u * z0;
        CHECK(std::abs(mu_closed(z1, z0) - std::pow(1.0 + u * u, -0.25)) < 1e-12);
    }
}

TEST_CASE("mu_closed monotone: decreasing in z1, increasing in z0")
{
    double previous = 2.0;
    for (double z1 : {0.0, 1.0, 10.0, 100.0, 1000.0}) {
        const double value = mu_closed(z1, 50.0);
        CHECK(value < previous);
        previous = value;
    }
    previous = 0.0;
    for (double z0 : {1.0, 5.0, 25.0, 125.0}) {
        const double value = mu_closed(40.0, z0);
        CHECK(value > previous);
        previous = value;
    }
}

TEST_CASE("mu_closed argument validation")
{
    CHECK_THROWS_AS(mu_closed(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(mu_closed(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("rm_closed matched waists at zero distance give unity")
{
    for (double w : {1.0, 10.0, 100.0, 400.0})
        CHECK(rm_closed(0.0, w, w, 1.0) == Approx(1.0).margin(1e-12));
}

TEST_CASE("rm_closed reduces to sqrt(2)/(4+u^2)^(1/4) for matched waists")
{
    const double w0 = 100.0;
    const double z0 = std::numbers::pi * w0 * w0;
    CHECK(rm_closed(std::sqrt(12.0) * z0, w0, w0, 1.0)
          == Approx(1.0 / std::numbers::sqrt2).epsilon(1e-13));
    for (double u : {0.5, 1.0, 7.0}) {
        CHECK(rm_closed(u * z0, w0, w0, 1.0)
              == Approx(std::numbers::sqrt2 / std::pow(4.0 + u * u, 0.25)).epsilon(1e-13));
    }
}

TEST_CASE("rm_closed decreases toward zero with distance and stays within [0,1] on the grid")
{
    const double w0 = 100.0;
    double previous = 2.0;
    for (double z1 : {0.0, 1e3, 1e4, 1e5, 1e6}) {
        const double value = rm_closed(z1, w0, w0, 1.0);
        CHECK(value < previous);
        previous = value;
    }
    for (int i = 0; i <= 40; ++i) {
        const double z1 = 1e4 * i / 40.0;
        for (int j = 0; j <= 20; ++j) {
            const double wm = w0 * std::pow(10.0, -1.0 + 2.0 * j / 20.0); // ratio 0.1..10
            const double value = rm_closed(z1, w0, wm, 1.0);
            CHECK(value > 0.0);
            CHECK(value <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("numeric self-overlap is one under both kinds")
{
    for (double w : {1.0, 10.0, 100.0, 1000.0}) {
        const GaussianBeam beam(w);
        CHECK(overlap_numeric(beam, 0.0, beam, 0.0, InnerProductKind::conjugated)
              == Approx(1.0).margin(1e-8));
        CHECK(overlap_numeric(beam, 0.0, beam, 0.0, InnerProductKind::paper_nonconjugated)
              == Approx(1.0).margin(1e-8));
    }
}

TEST_CASE("conjugated propagated-waist overlap matches the analytic Gaussian integral")
{
    // waist vs the same beam propagated 2 z1: (1 + (z1/z0)^2)^(-1/2)
    for (double w0 : {1.0, 10.0, 100.0}) {
        const GaussianBeam beam(w0);
        const double z0 = beam.rayleigh_range();
        for (double u : {0.1, 0.5, 1.0, 2.0, 5.0}) {
            const double numeric =
                overlap_numeric(beam, 0.0, beam, 2.0 * u * z0, InnerProductKind::conjugated);
            CHECK(numeric == Approx(1.0 / std::sqrt(1.0 + u * u)).margin(1e-6));
        }
    }
}

TEST_CASE("conjugated overlap is symmetric and bounded by one")
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> waist(0.8, 40.0);
    std::uniform_real_distribution<double> offset(-200.0, 200.0);
    for (int i = 0; i < 25; ++i) {
        const GaussianBeam a(waist(rng));
        const GaussianBeam b(waist(rng));
        const double za = offset(rng);
        const double zb = offset(rng);
        const double ab = overlap_numeric(a, za, b, zb, InnerProductKind::conjugated);
        const double ba = overlap_numeric(b, zb, a, za, InnerProductKind::conjugated);
        CHECK(ab == Approx(ba).margin(1e-9));
        CHECK(ab <= 1.0 + 1e-9);
        CHECK(ab >= 0.0);
    }
}

TEST_CASE("mu_effective dispatches between closed form and quadrature")
{
    const GaussianBeam beam(100.0);
    const double z0 = beam.rayleigh_range();
    const OverlapScenario at_waist(beam, beam, 0.0);
    CHECK(mu_effective(at_waist, MuMethod::closed_form) == 1.0);
    CHECK(mu_effective(at_waist, MuMethod::numeric_conjugated) == Approx(1.0).margin(1e-8));
    CHECK(mu_effective(at_waist, MuMethod::numeric_paper) == Approx(1.0).margin(1e-8));

    const OverlapScenario one_range(beam, beam, z0);
    CHECK(mu_effective(one_range, MuMethod::closed_form)
          == Approx(std::pow(2.0, -0.25)).epsilon(1e-13));
    CHECK(mu_effective(one_range, MuMethod::numeric_conjugated)
          == Approx(1.0 / std::numbers::sqrt2).margin(1e-6));
}

TEST_CASE("scenario validation")
{
    const GaussianBeam beam(10.0);
    CHECK_THROWS_AS(OverlapScenario(beam, beam, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(OverlapScenario(beam, GaussianBeam(10.0, 0.0, 2.0), 1.0),
                    std::invalid_argument);
}

TEST_CASE("quadrature reports nonconvergence at the depth cap")
{
    const auto oscillation = [](double x) { return std::sin(5e3 * x); };
    CHECK_THROWS_AS(integrate(oscillation, 0.0, 1.0, 1e-12, 1, 4), QuadratureError);
}
