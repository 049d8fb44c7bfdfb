// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. argv[1] is the path to the CLI binary (needed for the byte-level
// determinism criterion).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "vacfluc/vacfluc.hpp"

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail = "")
{
    std::printf("[%s] %d %s%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok)
        ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void criterion_dual_derivation()
{
    const auto start = std::chrono::steady_clock::now();
    const vacfluc::SuiteReport r = vacfluc::validate_modenet(20260824, 10000);
    const double elapsed = seconds_since(start);
    char detail[128];
    std::snprintf(detail, sizeof(detail), "max |err| = %.3e (tol 1e-12), %.2fs", r.worst_error,
                  elapsed);
    report(1, "operator bookkeeping matches the closed-form variance", r.passed && elapsed < 5.0,
           detail);
}

void criterion_detector_oracle()
{
    const auto start = std::chrono::steady_clock::now();
    const vacfluc::SuiteReport r = vacfluc::validate_detector(20260824, 1000);
    const double elapsed = seconds_since(start);
    char detail[128];
    std::snprintf(detail, sizeof(detail), "max |err| = %.3e (tol 1e-9), %.2fs", r.worst_error,
                  elapsed);
    report(2, "detector factor matches the quadrature oracle", r.passed && elapsed < 10.0, detail);
}

void criterion_limit_reductions()
{
    const vacfluc::SuiteReport r = vacfluc::validate_limits();
    char detail[128];
    std::snprintf(detail, sizeof(detail), "max rel deviation = %.3e", r.worst_error);
    report(3, "practical variance reduces to its stated limits", r.passed, detail);
}

void criterion_closed_form_algebra()
{
    bool ok = true;
    double worst = 0.0;
    const double z0 = std::numbers::pi * 1e4;
    for (int i = 0; i < 1000; ++i) {
        const double u = 1e-3 * std::pow(10.0, 6.0 * i / 999.0);
        const double err = std::abs(vacfluc::mu_closed(u * z0, z0) - std::pow(1.0 + u * u, -0.25));
        worst = std::max(worst, err);
        if (err > 1e-12)
            ok = false;
    }
    for (double w : {1.0, 10.0, 100.0, 400.0}) {
        const double err = std::abs(vacfluc::rm_closed(0.0, w, w, 1.0) - 1.0);
        worst = std::max(worst, err);
        if (err > 1e-12)
            ok = false;
    }
    char detail[128];
    std::snprintf(detail, sizeof(detail), "max |err| = %.3e (tol 1e-12)", worst);
    report(4, "closed-form factorization and matched-waist unity", ok, detail);
}

void criterion_figure_shapes()
{
    const auto start = std::chrono::steady_clock::now();

    bool ok = true;
    const vacfluc::SweepResult mu_surface = vacfluc::figure_mu_dataset(4);
    ok = ok && mu_surface.records.size() == 80 * 200;
    for (std::size_t i = 0; i < 80 && ok; ++i)
        for (std::size_t j = 1; j < 200; ++j)
            if (!(mu_surface.records[i * 200 + j].back() < mu_surface.records[i * 200 + j - 1].back())) {
                ok = false;
                break;
            }
    for (std::size_t i = 1; i < 80 && ok; ++i)
        for (std::size_t j = 0; j < 200; ++j) {
            const double here = mu_surface.records[i * 200 + j].back();
            const double left = mu_surface.records[(i - 1) * 200 + j].back();
            if (j == 0 ? here < left : !(here > left)) { // z1 = 0 column is identically 1
                ok = false;
                break;
            }
        }

    const vacfluc::SweepResult rm_surface = vacfluc::figure_rm_dataset(4);
    ok = ok && rm_surface.records.size() == 80 * 200;
    std::size_t best = 0;
    for (std::size_t i = 0; i < rm_surface.records.size(); ++i) {
        if (rm_surface.records[i].back() > rm_surface.records[best].back())
            best = i;
        if (!(rm_surface.records[i].back() <= 1.0 + 1e-9))
            ok = false;
    }
    ok = ok && rm_surface.records[best][0] == 100.0 && rm_surface.records[best][1] == 0.0
        && std::abs(rm_surface.records[best].back() - 1.0) <= 1e-12;

    const double elapsed = seconds_since(start);
    char detail[64];
    std::snprintf(detail, sizeof(detail), "%.2fs", elapsed);
    report(5, "surface datasets reproduce the expected shapes", ok && elapsed < 30.0, detail);
}

void criterion_sub_poisson()
{
    using namespace vacfluc;
    bool ok = true;

    LaserModel laser;
    OpticalNetworkParams strong;
    strong.T = 0.1;
    strong.R = 0.9;
    strong.R_m = 1.0;
    strong.T_m = 0.0;
    strong.mu = 1.0;
    const auto scan = sub_poisson_scan(strong, laser, std::nullopt, VarianceModel::ideal, 0.0, 1.0,
                                       101); // z1 step 0.01, minima at n pi / k0 = n / 2
    double minimum = 1e300;
    for (const auto& point : scan.points) {
        minimum = std::min(minimum, point.normalized);
        const double cosine = std::cos(2.0 * laser.k0 * point.z1);
        const bool expected = 2.0 - 1.8 * cosine < 1.0 - 1e-12;
        if (point.sub_poisson != expected)
            ok = false;
    }
    ok = ok && std::abs(minimum - 0.2) <= 1e-12;
    ok = ok && std::abs(scan.points[scan.min_index].z1 - 0.0) <= 1e-15;
    for (std::size_t n : {std::size_t{0}, std::size_t{50}, std::size_t{100}})
        if (std::abs(scan.points[n].normalized - 0.2) > 1e-12)
            ok = false;

    OpticalNetworkParams balanced = strong;
    balanced.T = 0.5;
    balanced.R = 0.5;
    const auto flat = sub_poisson_scan(balanced, laser, std::nullopt, VarianceModel::ideal, 0.0,
                                       1.0, 101);
    for (const auto& point : flat.points)
        if (point.sub_poisson)
            ok = false;

    char detail[64];
    std::snprintf(detail, sizeof(detail), "min normalized variance = %.15f", minimum);
    report(6, "sub-Poisson windows sit at the cosine maxima", ok, detail);
}

void criterion_quadrature_consistency()
{
    const vacfluc::SuiteReport r = vacfluc::validate_overlap();
    for (const auto& line : r.lines)
        std::printf("    %s\n", line.c_str());
    char detail[128];
    std::snprintf(detail, sizeof(detail), "max asserted |err| = %.3e", r.worst_error);
    report(7, "overlap quadrature self-consistency (paper normalization reported above)", r.passed,
           detail);
}

void criterion_cli_determinism(const char* cli_path)
{
    namespace fs = std::filesystem;
    if (cli_path == nullptr) {
        report(8, "CLI sweep byte-level determinism", false, "no CLI path given");
        return;
    }
    const fs::path dir = fs::temp_directory_path() / "vacfluc_acceptance";
    fs::create_directories(dir);
    const fs::path a = dir / "a.csv";
    const fs::path b = dir / "b.csv";
    const fs::path c = dir / "c.csv";
    const std::string base = std::string("\"") + cli_path + "\" sweep --preset mu-surface";
    bool ok = true;
    ok = ok && std::system((base + " -o " + a.string() + " 2>/dev/null").c_str()) == 0;
    ok = ok && std::system((base + " -o " + b.string() + " 2>/dev/null").c_str()) == 0;
    ok = ok && std::system((base + " --workers 8 -o " + c.string() + " 2>/dev/null").c_str()) == 0;
    std::string first;
    if (ok) {
        first = slurp(a);
        ok = !first.empty() && first == slurp(b) && first == slurp(c);
    }
    char detail[64];
    std::snprintf(detail, sizeof(detail), "%zu bytes compared", first.size());
    report(8, "CLI sweep byte-level determinism (repeat + 1 vs 8 workers)", ok, detail);
}

} // namespace

int main(int argc, char** argv)
{
    criterion_dual_derivation();
    criterion_detector_oracle();
    criterion_limit_reductions();
    criterion_closed_form_algebra();
    criterion_figure_shapes();
    criterion_sub_poisson();
    criterion_quadrature_consistency();
    criterion_cli_determinism(argc > 1 ? argv[1] : nullptr);

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
