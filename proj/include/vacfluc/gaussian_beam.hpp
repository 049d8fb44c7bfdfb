#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace vacfluc {

// Fundamental-mode Gaussian beam. All lengths are in units of the wavelength
// by default (lambda = 1, k = 2*pi). Axial coordinates passed to the member
// functions are measured from this beam's own waist; waist_position records
// where that waist sits in the caller's frame.
class GaussianBeam {
public:
    GaussianBeam(double waist_radius, double waist_position = 0.0, double wavelength = 1.0)
        : waist_radius_(waist_radius), waist_position_(waist_position), wavelength_(wavelength)
    {
        if (!(waist_radius_ > 0.0))
            throw std::invalid_argument("GaussianBeam: waist_radius must be > 0");
        if (!(wavelength_ > 0.0))
            throw std::invalid_argument("GaussianBeam: wavelength must be > 0");
    }

    double waist_radius() const { return waist_radius_; }
    double waist_position() const { return waist_position_; }
    double wavelength() const { return wavelength_; }

    double wavenumber() const { return 2.0 * std::numbers::pi / wavelength_; }

    // z0 = pi w0^2 / lambda
    double rayleigh_range() const
    {
        return std::numbers::pi * waist_radius_ * waist_radius_ / wavelength_;
    }

    // w(z) = w0 sqrt(1 + (z/z0)^2), even in z
    double beam_width(double z) const
    {
        const double u = z / rayleigh_range();
        return waist_radius_ * std::sqrt(1.0 + u * u);
    }

    // 1/R(z) = z / (z^2 + z0^2); zero at the waist, odd in z
    double inverse_curvature(double z) const
    {
        const double z0 = rayleigh_range();
        return z / (z * z + z0 * z0);
    }

    // zeta(z) = atan(z/z0), odd in z
    double gouy_phase(double z) const { return std::atan(z / rayleigh_range()); }

    // Scalar field at transverse radius rho, axial offset z from the waist,
    // with on-axis waist amplitude normalized to 1:
    //   (w0/w) exp(-rho^2/w^2) exp(i(-kz - k rho^2 / (2R) + zeta))
    std::complex<double> field_amplitude(double rho, double z) const
    {
        const double w = beam_width(z);
        const double k = wavenumber();
        const double amp = (waist_radius_ / w) * std::exp(-(rho * rho) / (w * w));
        const double phase = -k * z - 0.5 * k * rho * rho * inverse_curvature(z) + gouy_phase(z);
        return std::polar(amp, phase);
    }

private:
    double waist_radius_;
    double waist_position_;
    double wavelength_;
};

} // namespace vacfluc
