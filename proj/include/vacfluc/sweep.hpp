#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "vacfluc/fluctuation.hpp"
#include "vacfluc/overlap.hpp"
#include "vacfluc/version.hpp"

namespace vacfluc {

class SweepSpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class AxisSpacing { linear, log };

struct SweepAxis {
    std::string parameter;
    double start = 0.0;
    double stop = 0.0;
    std::size_t count = 0;
    AxisSpacing spacing = AxisSpacing::linear;
};

enum class SweepQuantity {
    mu,
    rm,
    ideal_variance,
    practical_variance,
    normalized_variance,
    detector_factor
};

inline const char* quantity_name(SweepQuantity q)
{
    switch (q) {
    case SweepQuantity::mu: return "mu";
    case SweepQuantity::rm: return "rm";
    case SweepQuantity::ideal_variance: return "ideal_variance";
    case SweepQuantity::practical_variance: return "practical_variance";
    case SweepQuantity::normalized_variance: return "normalized_variance";
    case SweepQuantity::detector_factor: return "detector_factor";
    }
    return "?";
}

inline std::optional<SweepQuantity> quantity_from_name(const std::string& name)
{
    for (SweepQuantity q : {SweepQuantity::mu, SweepQuantity::rm, SweepQuantity::ideal_variance,
                            SweepQuantity::practical_variance, SweepQuantity::normalized_variance,
                            SweepQuantity::detector_factor})
        if (name == quantity_name(q))
            return q;
    return std::nullopt;
}

// Parameter names per quantity. mu/rm take the beam geometry; the variance
// quantities take mu and the mirror intensity reflectance Rm directly (the
// closed overlap coefficients feed them through the CLI's geometry coupling).
// normalized_variance is the ideal-model ratio; its |alpha|^2 cancels.
inline const std::vector<std::string>& required_parameters(SweepQuantity q)
{
    static const std::vector<std::string> mu_set{"z1", "w0", "lambda"};
    static const std::vector<std::string> rm_set{"z1", "w0", "wm", "lambda"};
    static const std::vector<std::string> det_set{"z1", "kappa", "D", "lambda"};
    static const std::vector<std::string> ideal_set{"z1", "T", "mu", "Rm", "alpha2", "lambda"};
    static const std::vector<std::string> practical_set{"z1", "T",     "mu", "Rm", "alpha2",
                                                        "lambda", "dk", "kappa", "D"};
    static const std::vector<std::string> norm_set{"z1", "T", "mu", "Rm", "lambda"};
    switch (q) {
    case SweepQuantity::mu: return mu_set;
    case SweepQuantity::rm: return rm_set;
    case SweepQuantity::detector_factor: return det_set;
    case SweepQuantity::ideal_variance: return ideal_set;
    case SweepQuantity::practical_variance: return practical_set;
    case SweepQuantity::normalized_variance: return norm_set;
    }
    throw SweepSpecError("unknown quantity");
}

struct SweepSpec {
    std::vector<SweepAxis> axes;
    std::map<std::string, double> fixed;
    SweepQuantity quantity = SweepQuantity::mu;
};

struct SweepResult {
    std::vector<std::string> columns;             // axis names then the quantity
    std::vector<std::vector<double>> records;     // row-major, one row per grid point
    std::vector<std::string> metadata;            // '#'-prefixed lines when serialized
};

namespace detail {

inline std::vector<double> axis_values(const SweepAxis& axis)
{
    std::vector<double> values(axis.count);
    const double n = static_cast<double>(axis.count - 1);
    for (std::size_t i = 0; i < axis.count; ++i) {
        const double t = static_cast<double>(i) / n;
        if (axis.spacing == AxisSpacing::linear)
            values[i] = axis.start + (axis.stop - axis.start) * t;
        else
            values[i] = axis.start * std::pow(axis.stop / axis.start, t);
    }
    values.back() = axis.stop;
    return values;
}

inline double evaluate_quantity(SweepQuantity q, const std::map<std::string, double>& v)
{
    const auto at = [&](const char* name) { return v.at(name); };
    switch (q) {
    case SweepQuantity::mu: {
        const double z0 = std::numbers::pi * at("w0") * at("w0") / at("lambda");
        return mu_closed(at("z1"), z0);
    }
    case SweepQuantity::rm:
        return rm_closed(at("z1"), at("w0"), at("wm"), at("lambda"));
    case SweepQuantity::detector_factor:
        return detector_response_factor({at("kappa"), at("D")},
                                        2.0 * std::numbers::pi / at("lambda"), at("z1"));
    case SweepQuantity::ideal_variance:
    case SweepQuantity::practical_variance:
    case SweepQuantity::normalized_variance: {
        OpticalNetworkParams p;
        p.T = at("T");
        p.R = 1.0 - p.T;
        p.mu = at("mu");
        p.R_m = at("Rm");
        p.T_m = 1.0 - p.R_m;
        p.z1 = at("z1");
        LaserModel laser;
        laser.k0 = 2.0 * std::numbers::pi / at("lambda");
        if (q == SweepQuantity::normalized_variance)
            return normalized_variance(p, laser, std::nullopt, VarianceModel::ideal);
        laser.amplitude = std::sqrt(at("alpha2"));
        p.alpha = laser.amplitude;
        if (q == SweepQuantity::ideal_variance)
            return ideal_variance(p, laser);
        laser.linewidth = at("dk");
        return practical_variance(p, laser, {at("kappa"), at("D")});
    }
    }
    throw SweepSpecError("unknown quantity");
}

} // namespace detail

inline void validate(const SweepSpec& spec)
{
    std::map<std::string, int> seen;
    for (const auto& axis : spec.axes) {
        if (axis.count < 2)
            throw SweepSpecError("axis '" + axis.parameter + "': count must be >= 2");
        if (!(axis.start < axis.stop))
            throw SweepSpecError("axis '" + axis.parameter + "': start must be < stop");
        if (axis.spacing == AxisSpacing::log && !(axis.start > 0.0))
            throw SweepSpecError("axis '" + axis.parameter + "': log spacing requires start > 0");
        ++seen[axis.parameter];
    }
    for (const auto& [name, value] : spec.fixed)
        ++seen[name];

    const auto& required = required_parameters(spec.quantity);
    for (const auto& name : required) {
        const auto it = seen.find(name);
        if (it == seen.end())
            throw SweepSpecError(std::string("missing parameter '") + name + "' for quantity "
                                 + quantity_name(spec.quantity));
        if (it->second > 1)
            throw SweepSpecError(std::string("parameter '") + name + "' supplied more than once");
    }
    for (const auto& [name, count] : seen)
        if (std::find(required.begin(), required.end(), name) == required.end())
            throw SweepSpecError(std::string("parameter '") + name + "' is not used by quantity "
                                 + quantity_name(spec.quantity));
}

// Evaluates the quantity on the full grid, row-major with the first axis
// slowest. The worker count only partitions the index range; output is
// identical for any value.
inline SweepResult run_sweep(const SweepSpec& spec, unsigned workers = 1)
{
    validate(spec);

    std::vector<std::vector<double>> axes_values;
    std::size_t total = 1;
    for (const auto& axis : spec.axes) {
        axes_values.push_back(detail::axis_values(axis));
        total *= axis.count;
    }

    SweepResult result;
    for (const auto& axis : spec.axes)
        result.columns.push_back(axis.parameter);
    result.columns.push_back(quantity_name(spec.quantity));
    result.records.assign(total, {});

    const auto evaluate_row = [&](std::size_t row) {
        std::map<std::string, double> values = spec.fixed;
        std::vector<double> record;
        record.reserve(spec.axes.size() + 1);
        std::size_t rest = row;
        std::vector<double> coords(spec.axes.size());
        for (std::size_t a = spec.axes.size(); a-- > 0;) {
            coords[a] = axes_values[a][rest % spec.axes[a].count];
            rest /= spec.axes[a].count;
        }
        for (std::size_t a = 0; a < spec.axes.size(); ++a) {
            values[spec.axes[a].parameter] = coords[a];
            record.push_back(coords[a]);
        }
        try {
            record.push_back(detail::evaluate_quantity(spec.quantity, values));
        } catch (const QuadratureError& e) {
            std::string where = "at grid point (";
            for (std::size_t a = 0; a < coords.size(); ++a)
                where += (a ? ", " : "") + spec.axes[a].parameter + "=" + std::to_string(coords[a]);
            throw QuadratureError(std::string(e.what()) + " " + where + ")");
        }
        result.records[row] = std::move(record);
    };

    workers = std::max(1u, workers);
    if (workers == 1 || total < 2 * workers) {
        for (std::size_t row = 0; row < total; ++row)
            evaluate_row(row);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (total + workers - 1) / workers;
        for (unsigned wi = 0; wi < workers; ++wi) {
            const std::size_t lo = wi * chunk;
            const std::size_t hi = std::min(total, lo + chunk);
            if (lo >= hi)
                break;
            pool.emplace_back([&, lo, hi] {
                for (std::size_t row = lo; row < hi; ++row)
                    evaluate_row(row);
            });
        }
        for (auto& t : pool)
            t.join();
    }

    result.metadata.push_back(std::string("vacfluc ") + version_string);
    result.metadata.push_back(std::string("quantity: ") + quantity_name(spec.quantity));
    for (const auto& axis : spec.axes)
        result.metadata.push_back("axis: " + axis.parameter + " "
                                  + (axis.spacing == AxisSpacing::linear ? "linear " : "log ")
                                  + std::to_string(axis.start) + " " + std::to_string(axis.stop)
                                  + " " + std::to_string(axis.count));
    for (const auto& [name, value] : spec.fixed)
        result.metadata.push_back("fixed: " + name + " = " + std::to_string(value));
    return result;
}

// Default mode-match surface: mu over w0 in [1, 200] (80 log points) and
// z1 in [0, 5e4] (200 linear points), wavelength-normalized units.
inline SweepResult figure_mu_dataset(unsigned workers = 1)
{
    SweepSpec spec;
    spec.quantity = SweepQuantity::mu;
    spec.axes.push_back({"w0", 1.0, 200.0, 80, AxisSpacing::log});
    spec.axes.push_back({"z1", 0.0, 5e4, 200, AxisSpacing::linear});
    spec.fixed["lambda"] = 1.0;
    return run_sweep(spec, workers);
}

// Default effective-reflectance surface at w0 = 100: sqrt(R_m) over
// wm in [1, 400] (80 log points, grid snapped through wm = 100 so the
// matched-waist maximum lies on the grid) and z1 in [0, 5e4] (200 linear).
inline SweepResult figure_rm_dataset(unsigned workers = 1)
{
    SweepSpec spec;
    spec.quantity = SweepQuantity::rm;
    spec.axes.push_back({"wm", 1.0, 400.0, 80, AxisSpacing::log});
    spec.axes.push_back({"z1", 0.0, 5e4, 200, AxisSpacing::linear});
    spec.fixed["w0"] = 100.0;
    spec.fixed["lambda"] = 1.0;

    SweepResult result = run_sweep(spec, workers);

    // snap the wm grid column nearest 100 to exactly 100 and re-evaluate
    const auto wm_values = detail::axis_values(spec.axes[0]);
    std::size_t nearest = 0;
    for (std::size_t i = 1; i < wm_values.size(); ++i)
        if (std::abs(wm_values[i] - 100.0) < std::abs(wm_values[nearest] - 100.0))
            nearest = i;
    const std::size_t z1_count = spec.axes[1].count;
    for (std::size_t j = 0; j < z1_count; ++j) {
        auto& record = result.records[nearest * z1_count + j];
        record[0] = 100.0;
        record[2] = rm_closed(record[1], 100.0, 100.0, 1.0);
    }
    result.metadata.push_back("note: wm axis snapped through 100");
    return result;
}

} // namespace vacfluc
