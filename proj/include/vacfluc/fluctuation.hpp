#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vacfluc/mode_network.hpp"
#include "vacfluc/overlap.hpp"

namespace vacfluc {

// Local oscillator: amplitude |alpha|, phase, carrier wavenumber k0 and the
// Gaussian linewidth Delta-k of its wavenumber distribution.
struct LaserModel {
    double amplitude = 1.0;
    double phase = 0.0;
    double k0 = 2.0 * std::numbers::pi;
    double linewidth = 0.0;
};

inline void validate(const LaserModel& laser)
{
    if (laser.amplitude < 0.0)
        throw std::invalid_argument("LaserModel: amplitude must be >= 0");
    if (!(laser.k0 > 0.0))
        throw std::invalid_argument("LaserModel: k0 must be > 0");
    if (laser.linewidth < 0.0)
        throw std::invalid_argument("LaserModel: linewidth must be >= 0");
}

// Photodetector absorption model: a photon converts to an electron-hole pair
// at depth eta with density kappa e^{-kappa eta} over the active depth D.
struct DetectorModel {
    double absorption = 1.0;  // kappa, inverse length
    double active_depth = 0.0; // D
};

inline void validate(const DetectorModel& det)
{
    if (!(det.absorption > 0.0))
        throw std::invalid_argument("DetectorModel: absorption coefficient must be > 0");
    if (det.active_depth < 0.0)
        throw std::invalid_argument("DetectorModel: active depth must be >= 0");
}

// Photocurrent variance for an ideal monochromatic oscillator and a
// zero-depth detector:
//   (|alpha|^2 T / 2) {1 + mu^2 - 2 mu R sqrt(R_m) cos(2 k0 z1)}
inline double ideal_variance(const OpticalNetworkParams& p, const LaserModel& laser)
{
    validate(p);
    validate(laser);
    const double shot = 0.5 * laser.amplitude * laser.amplitude * p.T;
    return shot
        * (1.0 + p.mu * p.mu
           - 2.0 * p.mu * p.R * std::sqrt(p.R_m) * std::cos(2.0 * laser.k0 * p.z1));
}

// Depth-averaged standing-wave modulation seen by the detector,
//   integral_0^D kappa e^{-kappa eta} cos(2 k0 (z1 + eta)) d eta
// in closed form:
//   kappa [cos(2 k0 z1 + phi0) - e^{-kappa D} cos(2 k0 (z1 + D) + phi0)] / sqrt(4 k0^2 + kappa^2)
// with phi0 = atan(2 k0 / kappa).
inline double detector_response_factor(const DetectorModel& det, double k0, double z1)
{
    validate(det);
    if (!(k0 > 0.0))
        throw std::invalid_argument("detector_response_factor: k0 must be > 0");
    const double kappa = det.absorption;
    const double D = det.active_depth;
    const double phi0 = std::atan(2.0 * k0 / kappa);
    const double root = std::sqrt(4.0 * k0 * k0 + kappa * kappa);
    return kappa
        * (std::cos(2.0 * k0 * z1 + phi0)
           - std::exp(-kappa * D) * std::cos(2.0 * k0 * (z1 + D) + phi0))
        / root;
}

// Variance with the practical limits folded in: the Gaussian-linewidth
// coherence envelope e^{-z1^2 dk^2} and the finite-absorption detector factor.
inline double practical_variance(const OpticalNetworkParams& p, const LaserModel& laser,
                                 const DetectorModel& det)
{
    validate(p);
    validate(laser);
    const double shot = 0.5 * laser.amplitude * laser.amplitude * p.T;
    const double envelope = std::exp(-p.z1 * p.z1 * laser.linewidth * laser.linewidth);
    return shot
        * (1.0 + p.mu * p.mu
           - 2.0 * p.mu * p.R * std::sqrt(p.R_m) * envelope
               * detector_response_factor(det, laser.k0, p.z1));
}

enum class VarianceModel { ideal, practical };

// Variance in units of the mu = 0 shot-noise baseline |alpha|^2 T / 2.
// Values below 1 flag sub-Poisson operation.
inline double normalized_variance(const OpticalNetworkParams& p, const LaserModel& laser,
                                  const std::optional<DetectorModel>& det, VarianceModel model)
{
    const double baseline = 0.5 * laser.amplitude * laser.amplitude * p.T;
    if (!(baseline > 0.0))
        throw std::domain_error("normalized_variance: |alpha|^2 T must be > 0");
    switch (model) {
    case VarianceModel::ideal:
        return ideal_variance(p, laser) / baseline;
    case VarianceModel::practical:
        if (!det)
            throw std::invalid_argument("normalized_variance: practical model needs a detector");
        return practical_variance(p, laser, *det) / baseline;
    }
    throw std::invalid_argument("normalized_variance: unknown model");
}

// Optional geometry coupling for a distance scan: recompute mu (and, when
// couple_rm is set, the effective sqrt(R_m)) from the beam waists at each z1.
struct ScanGeometry {
    double w0 = 100.0;
    double wm = 100.0;
    double lambda = 1.0;
    bool couple_rm = true;
};

struct ScanPoint {
    double z1 = 0.0;
    double normalized = 0.0;
    bool sub_poisson = false;
};

struct ScanResult {
    std::vector<ScanPoint> points;
    std::size_t min_index = 0; // index of the minimizing z1
};

inline constexpr double sub_poisson_slack = 1e-12;

// Uniform scan of the normalized variance over z1 in [z1_min, z1_max].
// With geometry supplied, mu and sqrt(R_m) follow the closed-form overlap
// coefficients per point; otherwise the values in `base` are held fixed.
inline ScanResult sub_poisson_scan(const OpticalNetworkParams& base, const LaserModel& laser,
                                   const std::optional<DetectorModel>& det, VarianceModel model,
                                   double z1_min, double z1_max, std::size_t samples,
                                   const std::optional<ScanGeometry>& geometry = {})
{
    if (samples < 2)
        throw std::invalid_argument("sub_poisson_scan: samples must be >= 2");
    if (!(z1_max > z1_min))
        throw std::invalid_argument("sub_poisson_scan: range must be nonempty");

    ScanResult result;
    result.points.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        OpticalNetworkParams p = base;
        p.z1 = z1_min + (z1_max - z1_min) * static_cast<double>(i) / static_cast<double>(samples - 1);
        if (geometry) {
            const double z0 = std::numbers::pi * geometry->w0 * geometry->w0 / geometry->lambda;
            p.mu = mu_closed(p.z1, z0);
            if (geometry->couple_rm) {
                const double rm = rm_closed(p.z1, geometry->w0, geometry->wm, geometry->lambda);
                p.R_m = rm * rm;
                p.T_m = 1.0 - p.R_m;
            }
        }
        const double v = normalized_variance(p, laser, det, model);
        result.points.push_back({p.z1, v, v < 1.0 - sub_poisson_slack});
        if (v < result.points[result.min_index].normalized)
            result.min_index = i;
    }
    return result;
}

} // namespace vacfluc
