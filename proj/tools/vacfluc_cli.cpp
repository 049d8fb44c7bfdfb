// Command-line front end: point evaluation, grid sweeps to CSV and the
// built-in numerical cross-check suites.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "vacfluc/vacfluc.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 1;
constexpr int exit_config = 2;
constexpr int exit_numeric = 3;

std::string format_value(double v)
{
    char buf[64];
    if (v == 0.0 || (std::abs(v) >= 1e-3 && std::abs(v) < 1e4))
        std::snprintf(buf, sizeof(buf), "%.12f", v);
    else
        std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

struct EvalConfig {
    double lambda = 1.0;
    double T = 0.5;
    double z1 = 0.0;
    double w0 = 100.0;
    std::optional<double> wm;
    std::optional<double> mu;     // explicit; otherwise geometry-coupled
    std::optional<double> Rm;     // explicit intensity reflectance; otherwise geometry-coupled
    double alpha2 = 1.0;
    double phi = 0.0;
    double dk = 0.0;
    std::optional<double> kappa;  // default 10 k0
    std::optional<double> depth;  // default lambda
};

double resolved_mu(const EvalConfig& c)
{
    if (c.mu)
        return *c.mu;
    const double z0 = std::numbers::pi * c.w0 * c.w0 / c.lambda;
    return vacfluc::mu_closed(c.z1, z0);
}

double resolved_sqrt_rm(const EvalConfig& c)
{
    if (c.Rm)
        return std::sqrt(*c.Rm);
    return vacfluc::rm_closed(c.z1, c.w0, c.wm.value_or(c.w0), c.lambda);
}

vacfluc::OpticalNetworkParams network_params(const EvalConfig& c)
{
    vacfluc::OpticalNetworkParams p;
    p.T = c.T;
    p.R = 1.0 - c.T;
    p.mu = resolved_mu(c);
    const double srm = resolved_sqrt_rm(c);
    p.R_m = srm * srm;
    p.T_m = 1.0 - p.R_m;
    p.z1 = c.z1;
    p.k = 2.0 * std::numbers::pi / c.lambda;
    p.phi = c.phi;
    p.alpha = std::sqrt(c.alpha2);
    return p;
}

vacfluc::LaserModel laser_model(const EvalConfig& c)
{
    return {.amplitude = std::sqrt(c.alpha2),
            .phase = c.phi,
            .k0 = 2.0 * std::numbers::pi / c.lambda,
            .linewidth = c.dk};
}

vacfluc::DetectorModel detector_model(const EvalConfig& c)
{
    const double k0 = 2.0 * std::numbers::pi / c.lambda;
    return {c.kappa.value_or(10.0 * k0), c.depth.value_or(c.lambda)};
}

int run_eval(const std::string& subject, const EvalConfig& c)
{
    double value = 0.0;
    const char* note = "";
    if (subject == "mu") {
        value = resolved_mu(c);
        note = "mu = ((1+4u^2)/(1+5u^2+4u^4))^(1/4), u = z1/z0";
    } else if (subject == "rm") {
        value = resolved_sqrt_rm(c);
        note = "sqrt(Rm) = sqrt(2) sqrt(wm/w0) (1+z1^2/zm^2)^(1/4) / "
               "({(1+wm^2/w0^2)^2+z1^2/z0^2}{1+z1^2/zm^2})^(1/4)";
    } else if (subject == "variance") {
        value = vacfluc::ideal_variance(network_params(c), laser_model(c));
        note = "V = (|alpha|^2 T/2){1 + mu^2 - 2 mu R sqrt(Rm) cos(2 k0 z1)}";
    } else if (subject == "practical") {
        value = vacfluc::practical_variance(network_params(c), laser_model(c), detector_model(c));
        note = "V = (|alpha|^2 T/2){1 + mu^2 - 2 mu R sqrt(Rm) exp(-z1^2 dk^2) F_det}";
    } else if (subject == "detector-factor") {
        value = vacfluc::detector_response_factor(detector_model(c),
                                                  2.0 * std::numbers::pi / c.lambda, c.z1);
        note = "F_det = kappa[cos(2k0 z1+phi0) - exp(-kappa D)cos(2k0(z1+D)+phi0)]"
               "/sqrt(4k0^2+kappa^2), phi0 = atan(2k0/kappa)";
    } else {
        std::cerr << "eval: unknown subject '" << subject << "'\n";
        return exit_config;
    }
    std::cout << format_value(value) << "\n# " << note << "\n";
    return exit_ok;
}

std::filesystem::path resolve_output(const std::string& output)
{
    std::filesystem::path p(output);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("VACFLUC_OUTPUT_DIR"))
            return std::filesystem::path(dir) / p;
    }
    return p;
}

int run_sweep_cmd(const std::string& spec_file, const std::string& preset,
                  const std::string& output, unsigned workers)
{
    vacfluc::SweepResult result;
    if (!preset.empty()) {
        if (preset == "mu-surface")
            result = vacfluc::figure_mu_dataset(workers);
        else if (preset == "rm-surface")
            result = vacfluc::figure_rm_dataset(workers);
        else {
            std::cerr << "sweep: unknown preset '" << preset << "' (mu-surface, rm-surface)\n";
            return exit_config;
        }
    } else if (!spec_file.empty()) {
        std::ifstream in(spec_file);
        if (!in) {
            std::cerr << "sweep: cannot open spec file '" << spec_file << "'\n";
            return exit_config;
        }
        result = vacfluc::run_sweep(vacfluc::parse_sweep_spec(in), workers);
    } else {
        std::cerr << "sweep: provide --spec FILE or --preset NAME\n";
        return exit_config;
    }

    if (output.empty()) {
        vacfluc::write_csv(std::cout, result);
    } else {
        const auto path = resolve_output(output);
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            std::cerr << "sweep: cannot open output file '" << path.string() << "'\n";
            return exit_config;
        }
        vacfluc::write_csv(out, result);
        std::cerr << result.records.size() << " records -> " << path.string() << "\n";
    }
    return exit_ok;
}

int run_validate(const std::string& suite, std::uint64_t seed, int draws)
{
    std::vector<vacfluc::SuiteReport> reports;
    std::cout << "seed: " << seed << "\n";
    if (suite == "modenet" || suite == "all")
        reports.push_back(vacfluc::validate_modenet(seed, draws > 0 ? draws : 10000));
    if (suite == "detector" || suite == "all")
        reports.push_back(vacfluc::validate_detector(seed, draws > 0 ? draws : 1000));
    if (suite == "overlap" || suite == "all")
        reports.push_back(vacfluc::validate_overlap());
    if (suite == "limits" || suite == "all")
        reports.push_back(vacfluc::validate_limits());
    if (reports.empty()) {
        std::cerr << "validate: unknown suite '" << suite
                  << "' (modenet, detector, overlap, limits, all)\n";
        return exit_config;
    }

    bool mandatory_ok = true;
    for (const auto& r : reports) {
        std::cout << "== " << r.name << (r.mandatory ? "" : " (report-only)") << ": "
                  << (r.passed ? "pass" : "FAIL") << "\n";
        for (const auto& line : r.lines)
            std::cout << "   " << line << "\n";
        if (!r.passed && !r.worst_case.empty())
            std::cout << "   worst case: " << r.worst_case << " (|err| = " << r.worst_error
                      << ")\n";
        if (r.mandatory && !r.passed)
            mandatory_ok = false;
    }
    return mandatory_ok ? exit_ok : exit_validation;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Vacuum-fluctuation modulation by a mirror on the unused beam-splitter port"};
    app.set_version_flag("--version", vacfluc::version_string);
    app.set_config("--config", "", "Key-value config file; command-line flags take precedence");
    app.require_subcommand(1);

    EvalConfig cfg;
    std::string subject;
    auto* eval = app.add_subcommand("eval", "Evaluate a single quantity");
    eval->add_option("subject", subject, "mu | rm | variance | practical | detector-factor")
        ->required();
    const auto add_common = [&cfg](CLI::App* cmd) {
        cmd->add_option("--lambda", cfg.lambda, "Wavelength (length unit)");
        cmd->add_option("--T", cfg.T, "Beam-splitter intensity transmittance");
        cmd->add_option("--z1", cfg.z1, "Mirror-to-detector distance");
        cmd->add_option("--w0", cfg.w0, "Laser waist radius at the detector");
        cmd->add_option("--wm", cfg.wm, "Vacuum waist radius at the mirror (default w0)");
        cmd->add_option("--mu", cfg.mu, "Explicit mode match (default: geometry-coupled)");
        cmd->add_option("--Rm", cfg.Rm,
                        "Explicit mirror intensity reflectance (default: geometry-coupled)");
        cmd->add_option("--alpha2", cfg.alpha2, "Laser intensity |alpha|^2");
        cmd->add_option("--phi", cfg.phi, "Local-oscillator phase");
        cmd->add_option("--dk", cfg.dk, "Gaussian linewidth of the oscillator");
        cmd->add_option("--kappa", cfg.kappa, "Detector absorption coefficient (default 10 k0)");
        cmd->add_option("--D", cfg.depth, "Detector active depth (default lambda)");
    };
    add_common(eval);

    std::string spec_file, preset, output;
    unsigned workers = 1;
    auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep, emit CSV");
    sweep->add_option("--spec", spec_file, "Sweep spec file");
    sweep->add_option("--preset", preset, "Built-in grid: mu-surface | rm-surface");
    sweep->add_option("-o,--output", output,
                      "Output file (default stdout; relative paths join VACFLUC_OUTPUT_DIR)");
    sweep->add_option("--workers", workers, "Worker threads (output is identical for any count)");

    std::string suite = "all";
    std::uint64_t seed = 20260824;
    int draws = 0;
    auto* validate = app.add_subcommand("validate", "Run numerical cross-check suites");
    validate->add_option("suite", suite, "modenet | detector | overlap | limits | all");
    validate->add_option("--seed", seed, "RNG seed for random draws");
    validate->add_option("--draws", draws, "Override the draw/point count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_config;
    }

    try {
        if (eval->parsed())
            return run_eval(subject, cfg);
        if (sweep->parsed())
            return run_sweep_cmd(spec_file, preset, output, workers);
        if (validate->parsed())
            return run_validate(suite, seed, draws);
    } catch (const vacfluc::QuadratureError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return exit_numeric;
    } catch (const std::domain_error& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return exit_numeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numeric;
    }
    return exit_config;
}
