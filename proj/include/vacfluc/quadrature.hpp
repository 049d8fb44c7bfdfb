#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <type_traits>

namespace vacfluc {

// Thrown when adaptive refinement hits the depth cap before reaching the
// requested tolerance. Signals pathological integrand parameters.
class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline double error_norm(double v) { return std::abs(v); }
inline double error_norm(const std::complex<double>& v) { return std::abs(v); }

template <class F, class V>
V simpson_recurse(F& f, double a, double b, V fa, V fm, V fb, V whole, double tol, int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const V flm = f(lm);
    const V frm = f(rm);
    const V left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const V right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const V delta = left + right - whole;
    if (error_norm(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    if (depth <= 0)
        throw QuadratureError("adaptive quadrature did not converge within the depth cap");
    return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
         + simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance abs_tol.
// The interval is pre-split into initial_panels uniform panels; oscillatory
// integrands should request at least a few panels per cycle.
template <class F>
auto integrate(F f, double a, double b, double abs_tol, int initial_panels = 8, int max_depth = 48)
{
    using V = std::invoke_result_t<F&, double>;
    V total{};
    if (a == b)
        return total;
    initial_panels = std::max(1, initial_panels);
    const double h = (b - a) / initial_panels;
    const double panel_tol = abs_tol / initial_panels;
    for (int i = 0; i < initial_panels; ++i) {
        const double x0 = a + i * h;
        const double x1 = (i + 1 == initial_panels) ? b : x0 + h;
        const double xm = 0.5 * (x0 + x1);
        const V f0 = f(x0);
        const V fm = f(xm);
        const V f1 = f(x1);
        const V whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
        total += detail::simpson_recurse(f, x0, x1, f0, fm, f1, whole, panel_tol, max_depth);
    }
    return total;
}

} // namespace vacfluc
