#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace vacfluc {

// The four independent bosonic input modes of the splitter-plus-mirror
// network: the two vacuum ports a1/a2, the laser-port vacuum b and the
// behind-mirror vacuum d.
enum class ModeLabel : std::size_t { a1 = 0, a2 = 1, b = 2, d = 3 };

inline constexpr std::array<ModeLabel, 4> all_modes{ModeLabel::a1, ModeLabel::a2,
                                                    ModeLabel::b, ModeLabel::d};

// Linear combination of the annihilation operators of the four input modes.
// The Hermitian observable is the expression plus its conjugate; on vacuum
// the cross-mode moments vanish and the variance is the sum of |coefficient|^2.
class ModeExpression {
public:
    std::complex<double> coefficient(ModeLabel m) const
    {
        return coeff_[static_cast<std::size_t>(m)];
    }

    void set_coefficient(ModeLabel m, std::complex<double> c)
    {
        coeff_[static_cast<std::size_t>(m)] = c;
    }

    ModeExpression scaled(std::complex<double> factor) const
    {
        ModeExpression out = *this;
        for (auto& c : out.coeff_)
            c *= factor;
        return out;
    }

private:
    std::array<std::complex<double>, 4> coeff_{};
};

inline double vacuum_variance(const ModeExpression& expr)
{
    double sum = 0.0;
    for (ModeLabel m : all_modes)
        sum += std::norm(expr.coefficient(m));
    return sum;
}

// Beam-splitter (T, R) and mirror (T_m, R_m) intensity coefficients, the
// counterpropagating-mode match mu, the path lengths and the local-oscillator
// amplitude/phase. Lossless elements: T + R = 1 and T_m + R_m = 1.
struct OpticalNetworkParams {
    double T = 0.5;
    double R = 0.5;
    double T_m = 0.0;
    double R_m = 1.0;
    double mu = 1.0;
    double z1 = 0.0;  // mirror to detector
    double Z1 = 0.0;  // laser to detector
    double Z_M = 0.0; // vacuum source behind the mirror
    double k = 2.0 * std::numbers::pi;
    double phi = 0.0;
    double alpha = 1.0; // local-oscillator amplitude |alpha|
};

inline void validate(const OpticalNetworkParams& p)
{
    auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!in_unit(p.T) || !in_unit(p.R))
        throw std::invalid_argument("OpticalNetworkParams: T and R must lie in [0,1]");
    if (!in_unit(p.T_m) || !in_unit(p.R_m))
        throw std::invalid_argument("OpticalNetworkParams: T_m and R_m must lie in [0,1]");
    if (std::abs(p.T + p.R - 1.0) > 1e-12)
        throw std::invalid_argument("OpticalNetworkParams: T + R must equal 1");
    if (std::abs(p.T_m + p.R_m - 1.0) > 1e-12)
        throw std::invalid_argument("OpticalNetworkParams: T_m + R_m must equal 1");
    if (!in_unit(p.mu))
        throw std::invalid_argument("OpticalNetworkParams: mu must lie in [0,1]");
    if (!(p.k > 0.0))
        throw std::invalid_argument("OpticalNetworkParams: wavenumber k must be > 0");
    if (p.alpha < 0.0)
        throw std::invalid_argument("OpticalNetworkParams: amplitude |alpha| must be >= 0");
}

// Vacuum field reaching the detector through the network. The two a1 paths
// (direct counterpropagating mode, and the mirror round trip) carry the
// relative phase e^{i 2 k z1}; the overall phase of each mode is irrelevant
// to any variance.
inline ModeExpression detected_field_expression(const OpticalNetworkParams& p)
{
    using cplx = std::complex<double>;
    validate(p);
    ModeExpression expr;
    const cplx i{0.0, 1.0};
    expr.set_coefficient(ModeLabel::b, std::sqrt(p.T) * std::exp(-i * (p.k * p.Z1)));
    expr.set_coefficient(ModeLabel::a1,
                         p.mu * std::exp(i * (p.k * p.z1))
                             - p.R * std::sqrt(p.R_m) * std::exp(-i * (p.k * p.z1)));
    expr.set_coefficient(ModeLabel::a2,
                         -std::sqrt(p.R * p.T * p.R_m) * std::exp(-i * (p.k * p.z1)));
    expr.set_coefficient(ModeLabel::d, std::sqrt(p.R * p.T_m) * std::exp(-i * (p.k * p.Z_M)));
    return expr;
}

// Linearized homodyne photocurrent: each vacuum coefficient beats against the
// classical local oscillator, picking up the factor (|alpha|/sqrt(2)) sqrt(T) e^{i phi}.
inline ModeExpression photocurrent_expression(const OpticalNetworkParams& p)
{
    using cplx = std::complex<double>;
    const cplx lo = (p.alpha / std::numbers::sqrt2) * std::sqrt(p.T)
        * std::exp(cplx{0.0, 1.0} * p.phi);
    return detected_field_expression(p).scaled(lo);
}

// Splitter outputs written in the four input modes, with the intracavity mode
// eliminated: a1_out = sqrt(T) b + sqrt(R) c and a2_out = -sqrt(R) b + sqrt(T) c,
// where c = sqrt(T_m) d - sqrt(R_m)(sqrt(R) a1 + sqrt(T) a2).
inline std::pair<ModeExpression, ModeExpression> splitter_output_modes(const OpticalNetworkParams& p)
{
    validate(p);
    const double sT = std::sqrt(p.T);
    const double sR = std::sqrt(p.R);
    const double sTm = std::sqrt(p.T_m);
    const double sRm = std::sqrt(p.R_m);

    ModeExpression a1_out;
    a1_out.set_coefficient(ModeLabel::b, sT);
    a1_out.set_coefficient(ModeLabel::d, sR * sTm);
    a1_out.set_coefficient(ModeLabel::a1, -sR * sRm * sR);
    a1_out.set_coefficient(ModeLabel::a2, -sR * sRm * sT);

    ModeExpression a2_out;
    a2_out.set_coefficient(ModeLabel::b, -sR);
    a2_out.set_coefficient(ModeLabel::d, sT * sTm);
    a2_out.set_coefficient(ModeLabel::a1, -sT * sRm * sR);
    a2_out.set_coefficient(ModeLabel::a2, -sT * sRm * sT);

    return {a1_out, a2_out};
}

} // namespace vacfluc
