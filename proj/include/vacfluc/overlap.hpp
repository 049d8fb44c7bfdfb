#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "vacfluc/gaussian_beam.hpp"
#include "vacfluc/quadrature.hpp"

namespace vacfluc {

// Counterpropagating-mode match between the vacuum mode leaving the detector
// and the same mode retroreflected from a mirror a distance z1 away:
//   mu = (1 + 4u^2)^{1/4} / (1 + 5u^2 + 4u^4)^{1/4},   u = z1/z0,
// which factorizes to (1 + u^2)^{-1/4}.
inline double mu_closed(double z1, double z0)
{
    if (!(z0 > 0.0))
        throw std::invalid_argument("mu_closed: rayleigh range z0 must be > 0");
    if (z1 < 0.0)
        throw std::invalid_argument("mu_closed: mirror distance z1 must be >= 0");
    const double u2 = (z1 / z0) * (z1 / z0);
    const double num = 1.0 + 4.0 * u2;
    const double den = 1.0 + 5.0 * u2 + 4.0 * u2 * u2;
    return std::pow(num / den, 0.25);
}

// Effective mirror reflectance seen by the detected mode when the vacuum
// waist w_m sits at the mirror and the laser waist w0 at the detector:
//   sqrt(2) sqrt(wm/w0) (1 + z1^2/zm^2)^{1/4}
//   / ({(1 + wm^2/w0^2)^2 + z1^2/z0^2}{1 + z1^2/zm^2})^{1/4}
inline double rm_closed(double z1, double w0, double wm, double lambda)
{
    if (!(w0 > 0.0) || !(wm > 0.0) || !(lambda > 0.0))
        throw std::invalid_argument("rm_closed: w0, wm, lambda must be > 0");
    if (z1 < 0.0)
        throw std::invalid_argument("rm_closed: mirror distance z1 must be >= 0");
    const double z0 = std::numbers::pi * w0 * w0 / lambda;
    const double zm = std::numbers::pi * wm * wm / lambda;
    const double um2 = (z1 / zm) * (z1 / zm);
    const double u02 = (z1 / z0) * (z1 / z0);
    const double r2 = (wm / w0) * (wm / w0);
    const double num = std::numbers::sqrt2 * std::sqrt(wm / w0) * std::pow(1.0 + um2, 0.25);
    const double den = std::pow(((1.0 + r2) * (1.0 + r2) + u02) * (1.0 + um2), 0.25);
    return num / den;
}

// Normalization convention of the transverse inner product.
// conjugated:          N_x = integral |E_x|^2 2 pi rho drho   (standard)
// paper_nonconjugated: N_x = |integral E_x^2 2 pi rho drho|   (non-conjugated squares)
// The numerator is |integral E_a E_b^* 2 pi rho drho| in both cases.
enum class InnerProductKind { conjugated, paper_nonconjugated };

// Transverse-plane overlap of two Gaussian beams evaluated on a common plane,
// by adaptive radial quadrature on rho in [0, 8 max(w_a, w_b)]. plane_offset_x
// is the axial distance from beam x's waist to the evaluation plane.
inline double overlap_numeric(const GaussianBeam& beam_a, double plane_offset_a,
                              const GaussianBeam& beam_b, double plane_offset_b,
                              InnerProductKind kind)
{
    using cplx = std::complex<double>;

    const double wa = beam_a.beam_width(plane_offset_a);
    const double wb = beam_b.beam_width(plane_offset_b);
    const double rho_max = 8.0 * std::max(wa, wb);

    // panels sized to the fastest transverse phase across the window
    const double phase_span = 0.5 * rho_max * rho_max
        * (beam_a.wavenumber() * std::abs(beam_a.inverse_curvature(plane_offset_a))
           + beam_b.wavenumber() * std::abs(beam_b.inverse_curvature(plane_offset_b)));
    const int panels = std::clamp(8 + static_cast<int>(phase_span / 1.5), 8, 4096);

    constexpr double two_pi = 2.0 * std::numbers::pi;
    constexpr double rel_tol = 1e-10;

    const auto field_a = [&](double rho) { return beam_a.field_amplitude(rho, plane_offset_a); };
    const auto field_b = [&](double rho) { return beam_b.field_amplitude(rho, plane_offset_b); };

    const cplx cross = integrate(
        [&](double rho) -> cplx { return field_a(rho) * std::conj(field_b(rho)) * two_pi * rho; },
        0.0, rho_max, rel_tol * std::numbers::pi * wa * wb, panels);

    double norm_a = 0.0;
    double norm_b = 0.0;
    switch (kind) {
    case InnerProductKind::conjugated:
        norm_a = integrate(
            [&](double rho) { return std::norm(field_a(rho)) * two_pi * rho; },
            0.0, rho_max, rel_tol * std::numbers::pi * wa * wa, panels);
        norm_b = integrate(
            [&](double rho) { return std::norm(field_b(rho)) * two_pi * rho; },
            0.0, rho_max, rel_tol * std::numbers::pi * wb * wb, panels);
        break;
    case InnerProductKind::paper_nonconjugated:
        norm_a = std::abs(integrate(
            [&](double rho) -> cplx { const cplx e = field_a(rho); return e * e * two_pi * rho; },
            0.0, rho_max, rel_tol * std::numbers::pi * wa * wa, panels));
        norm_b = std::abs(integrate(
            [&](double rho) -> cplx { const cplx e = field_b(rho); return e * e * two_pi * rho; },
            0.0, rho_max, rel_tol * std::numbers::pi * wb * wb, panels));
        break;
    }

    return std::abs(cross) / std::sqrt(norm_a * norm_b);
}

// Geometry for a mode-matching computation. For the counterpropagating (mu)
// scenario both beams have their waist at the detector; for the effective
// reflectance scenario the vacuum beam has its waist at the mirror.
struct OverlapScenario {
    GaussianBeam laser_beam;
    GaussianBeam vacuum_beam;
    double mirror_distance = 0.0; // detector-to-mirror, >= 0

    OverlapScenario(GaussianBeam laser, GaussianBeam vacuum, double z1)
        : laser_beam(std::move(laser)), vacuum_beam(std::move(vacuum)), mirror_distance(z1)
    {
        if (mirror_distance < 0.0)
            throw std::invalid_argument("OverlapScenario: mirror_distance must be >= 0");
        if (laser_beam.wavelength() != vacuum_beam.wavelength())
            throw std::invalid_argument("OverlapScenario: beams must share a wavelength");
    }
};

enum class MuMethod { closed_form, numeric_conjugated, numeric_paper };

// Counterpropagating-mode match for the detector-waist geometry. closed_form
// uses mu_closed; the numeric methods overlap the vacuum beam at its waist
// with the same beam propagated the round trip 2 z1.
inline double mu_effective(const OverlapScenario& scenario, MuMethod method)
{
    const double z1 = scenario.mirror_distance;
    switch (method) {
    case MuMethod::closed_form:
        return mu_closed(z1, scenario.vacuum_beam.rayleigh_range());
    case MuMethod::numeric_conjugated:
        return overlap_numeric(scenario.vacuum_beam, 0.0, scenario.vacuum_beam, 2.0 * z1,
                               InnerProductKind::conjugated);
    case MuMethod::numeric_paper:
        return overlap_numeric(scenario.vacuum_beam, 0.0, scenario.vacuum_beam, 2.0 * z1,
                               InnerProductKind::paper_nonconjugated);
    }
    throw std::invalid_argument("mu_effective: unknown method");
}

} // namespace vacfluc
