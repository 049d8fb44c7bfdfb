#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "vacfluc/fluctuation.hpp"
#include "vacfluc/mode_network.hpp"
#include "vacfluc/overlap.hpp"
#include "vacfluc/quadrature.hpp"

namespace vacfluc {

struct SuiteReport {
    std::string name;
    bool mandatory = true;
    bool passed = false;
    double worst_error = 0.0;
    std::string worst_case;
    std::vector<std::string> lines;
};

namespace detail {

inline std::string fmt(const char* f, auto... args)
{
    char buf[256];
    std::snprintf(buf, sizeof(buf), f, args...);
    return buf;
}

} // namespace detail

// Operator bookkeeping vs the closed-form variance
//   (|alpha|^2 T / 2){1 + mu^2 - 2 mu R sqrt(R_m) cos(2 k z1)}
// over random network parameters. Tolerance 1e-12 absolute.
inline SuiteReport validate_modenet(std::uint64_t seed = 20260824, int draws = 10000)
{
    SuiteReport report{.name = "modenet", .mandatory = true};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> kz1(0.0, 1e3);
    std::uniform_real_distribution<double> amp(0.0, 2.0);

    report.passed = true;
    for (int i = 0; i < draws; ++i) {
        OpticalNetworkParams p;
        p.T = unit(rng);
        p.R = 1.0 - p.T;
        p.R_m = unit(rng);
        p.T_m = 1.0 - p.R_m;
        p.mu = unit(rng);
        p.k = 2.0 * std::numbers::pi;
        p.z1 = kz1(rng) / p.k;
        p.Z1 = 1e2 * unit(rng);
        p.Z_M = 1e2 * unit(rng);
        p.phi = phase(rng);
        p.alpha = amp(rng);

        LaserModel laser{.amplitude = p.alpha, .phase = p.phi, .k0 = p.k, .linewidth = 0.0};
        const double network = vacuum_variance(photocurrent_expression(p));
        const double closed = ideal_variance(p, laser);
        const double err = std::abs(network - closed);
        if (err > report.worst_error) {
            report.worst_error = err;
            report.worst_case = detail::fmt("T=%.6g R_m=%.6g mu=%.6g k*z1=%.6g alpha=%.6g", p.T,
                                            p.R_m, p.mu, p.k * p.z1, p.alpha);
        }
        if (err > 1e-12)
            report.passed = false;
    }
    report.lines.push_back(detail::fmt("%d draws, max |network - closed| = %.3e (tol 1e-12)",
                                       draws, report.worst_error));
    return report;
}

// Closed detector factor vs adaptive quadrature of the absorption-weighted
// standing-wave integral, on random (kappa, D, z1) with kappa*D spanning
// [1e-3, 1e2]. Tolerance 1e-9 absolute.
inline SuiteReport validate_detector(std::uint64_t seed = 20260824, int points = 1000)
{
    SuiteReport report{.name = "detector", .mandatory = true};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double k0 = 2.0 * std::numbers::pi;

    report.passed = true;
    for (int i = 0; i < points; ++i) {
        const double kd = std::pow(10.0, -3.0 + 5.0 * unit(rng)); // kappa*D in [1e-3, 1e2]
        const double kappa = k0 * std::pow(10.0, -1.0 + 3.0 * unit(rng));
        const double D = kd / kappa;
        const double z1 = 10.0 * unit(rng);
        const DetectorModel det{kappa, D};

        const double closed = detector_response_factor(det, k0, z1);
        const int panels = 8 + static_cast<int>(2.0 * k0 * D / 1.5);
        const double numeric = integrate(
            [&](double eta) { return kappa * std::exp(-kappa * eta) * std::cos(2.0 * k0 * (z1 + eta)); },
            0.0, D, 1e-12, panels);
        const double err = std::abs(closed - numeric);
        if (err > report.worst_error) {
            report.worst_error = err;
            report.worst_case = detail::fmt("kappa=%.6g D=%.6g z1=%.6g", kappa, D, z1);
        }
        if (err > 1e-9)
            report.passed = false;
    }
    report.lines.push_back(detail::fmt("%d points, max |closed - quadrature| = %.3e (tol 1e-9)",
                                       points, report.worst_error));
    return report;
}

// Quadrature overlap vs the closed forms under both inner-product kinds.
// Self-overlap and the conjugated propagated-waist overlap are checked
// against their analytic values; the non-conjugated normalization is
// reported side by side with the closed forms without asserting agreement.
inline SuiteReport validate_overlap()
{
    SuiteReport report{.name = "overlap", .mandatory = false};
    report.passed = true;

    for (double w : {1.0, 10.0, 100.0, 1000.0}) {
        const GaussianBeam beam(w);
        for (InnerProductKind kind :
             {InnerProductKind::conjugated, InnerProductKind::paper_nonconjugated}) {
            const double self = overlap_numeric(beam, 0.0, beam, 0.0, kind);
            const double err = std::abs(self - 1.0);
            if (err > 1e-8) {
                report.passed = false;
                report.worst_case = detail::fmt("self-overlap w=%g", w);
            }
            if (err > report.worst_error)
                report.worst_error = err;
        }
    }

    report.lines.push_back("u=z1/z0      closed      conjugated  analytic_conj  paper_kind");
    for (double w0 : {1.0, 10.0, 100.0}) {
        const GaussianBeam beam(w0);
        const double z0 = beam.rayleigh_range();
        for (double u : {0.25, 0.5, 1.0, 2.0, 4.0}) {
            const double z1 = u * z0;
            const double closed = mu_closed(z1, z0);
            const double conj =
                overlap_numeric(beam, 0.0, beam, 2.0 * z1, InnerProductKind::conjugated);
            const double analytic = 1.0 / std::sqrt(1.0 + u * u);
            const double paper =
                overlap_numeric(beam, 0.0, beam, 2.0 * z1, InnerProductKind::paper_nonconjugated);
            const double err = std::abs(conj - analytic);
            if (err > 1e-6) {
                report.passed = false;
                report.worst_case = detail::fmt("propagated overlap w0=%g u=%g", w0, u);
            }
            if (err > report.worst_error)
                report.worst_error = err;
            if (w0 == 100.0)
                report.lines.push_back(
                    detail::fmt("%-12g %-11.6f %-11.6f %-14.6f %-11.6f", u, closed, conj, analytic,
                                paper));
        }
    }

    report.lines.push_back("effective reflectance, w0=100:");
    report.lines.push_back("wm/w0   u=z1/z0   closed      conjugated  paper_kind");
    const GaussianBeam laser(100.0);
    for (double ratio : {0.5, 1.0, 2.0}) {
        const GaussianBeam vacuum(100.0 * ratio);
        const double zm = vacuum.rayleigh_range();
        for (double u : {0.0, 1.0, 3.0}) {
            const double z1 = u * laser.rayleigh_range();
            const double closed = rm_closed(z1, 100.0, 100.0 * ratio, 1.0);
            const double conj = overlap_numeric(vacuum, z1, laser, 0.0, InnerProductKind::conjugated);
            const double paper =
                overlap_numeric(vacuum, z1, laser, 0.0, InnerProductKind::paper_nonconjugated);
            (void)zm;
            report.lines.push_back(
                detail::fmt("%-7g %-9g %-11.6f %-11.6f %-11.6f", ratio, u, closed, conj, paper));
        }
    }

    return report;
}

// Reductions of the practical variance to its stated limits.
inline SuiteReport validate_limits()
{
    SuiteReport report{.name = "limits", .mandatory = true};
    report.passed = true;
    const double k0 = 2.0 * std::numbers::pi;

    const auto note = [&](bool ok, double err, const std::string& what) {
        if (err > report.worst_error) {
            report.worst_error = err;
            report.worst_case = what;
        }
        if (!ok)
            report.passed = false;
    };

    for (double mu : {0.3, 0.7, 1.0}) {
        for (double T : {0.25, 0.5, 0.8}) {
            for (double z1 : {0.1, 0.37, 1.1, 2.9}) {
                OpticalNetworkParams p;
                p.T = T;
                p.R = 1.0 - T;
                p.R_m = 0.8;
                p.T_m = 0.2;
                p.mu = mu;
                p.z1 = z1;
                LaserModel laser{.amplitude = 1.3, .phase = 0.0, .k0 = k0, .linewidth = 0.0};
                const double shot = 0.5 * laser.amplitude * laser.amplitude * T;

                // surface-absorption, zero-linewidth limit -> ideal
                const DetectorModel thin{1e6 * k0, 40.0 / (1e6 * k0)};
                const double ideal = ideal_variance(p, laser);
                const double rel = std::abs(practical_variance(p, laser, thin) - ideal)
                    / std::abs(ideal);
                note(rel < 1e-5, rel,
                     detail::fmt("thin-detector limit mu=%g T=%g z1=%g", mu, T, z1));

                // zero-depth detector -> modulation term vanishes
                const DetectorModel zero{10.0 * k0, 0.0};
                const double flat = shot * (1.0 + mu * mu);
                const double rel0 = std::abs(practical_variance(p, laser, zero) - flat)
                    / std::abs(flat);
                note(rel0 < 1e-6, rel0, detail::fmt("kappa*D=0 limit mu=%g T=%g z1=%g", mu, T, z1));

                // decohered oscillator: linewidth * z1 >= 10
                LaserModel broad = laser;
                broad.linewidth = 10.0 / z1;
                const DetectorModel det{10.0 * k0, 0.3};
                const double relw = std::abs(practical_variance(p, broad, det) - flat)
                    / std::abs(flat);
                note(relw < 1e-6, relw,
                     detail::fmt("linewidth envelope limit mu=%g T=%g z1=%g", mu, T, z1));
            }
        }
    }
    report.lines.push_back(detail::fmt("max relative deviation across limit cases = %.3e",
                                       report.worst_error));
    return report;
}

} // namespace vacfluc
