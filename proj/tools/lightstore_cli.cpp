// Command-line driver: simulate, sweep and analytics subcommands.

#include "lightstore/core.hpp"
#include "lightstore/output.hpp"
#include "lightstore/polariton.hpp"
#include "lightstore/scenarios.hpp"
#include "lightstore/units.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace lightstore;

namespace {

double to_number(const std::string& text, const std::string& whole)
{
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw std::invalid_argument("bad angle '" + whole + "'");
    return v;
}

// Accepts plain numbers and multiples of pi: "0.3", "pi", "-pi/2", "3pi/4", "3*pi/4".
double parse_angle(std::string text)
{
    std::erase(text, ' ');
    std::erase(text, '*');
    const auto pos = text.find("pi");
    if (pos == std::string::npos) return to_number(text, text);

    double factor = 1.0;
    const std::string head = text.substr(0, pos);
    if (head == "-")
        factor = -1.0;
    else if (!head.empty() && head != "+")
        factor = to_number(head, text);
    double divisor = 1.0;
    const std::string tail = text.substr(pos + 2);
    if (!tail.empty()) {
        if (tail.front() != '/') throw std::invalid_argument("bad angle '" + text + "'");
        divisor = to_number(tail.substr(1), text);
    }
    return factor * std::numbers::pi / divisor;
}

std::vector<double> parse_angle_list(const std::string& list)
{
    std::vector<double> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(parse_angle(item));
    if (out.empty()) throw std::invalid_argument("empty theta list");
    return out;
}

struct CommonOptions {
    std::string config_path;
    std::string variant = "a";
    bool full_scale = false;
    int threads = 1;
    std::string out_dir = "out";
};

void add_common(CLI::App* cmd, CommonOptions& o)
{
    cmd->add_option("--config", o.config_path, "key = value configuration file (atomic units)");
    cmd->add_option("--case", o.variant, "level scheme variant")->check(CLI::IsMember({"a", "b"}));
    cmd->add_flag("--full-scale", o.full_scale, "use the full-scale medium length and pulse duration");
    cmd->add_option("--threads", o.threads, "threads for per-cell stepping")->check(CLI::PositiveNumber);
    cmd->add_option("--out", o.out_dir, "output directory");
}

SimulationConfig base_config(const CommonOptions& o, bool overlap)
{
    const Scale scale = o.full_scale ? Scale::Full : Scale::Desk;
    auto defaults = [&](Variant v) { return overlap ? overlap_config(scale) : storage_config(v, scale); };
    SimulationConfig cfg = defaults(parse_variant(o.variant));
    if (!o.config_path.empty()) {
        const SimulationConfig base = cfg;
        cfg = load_config(o.config_path, base);
        // a variant set in the file starts from that variant's defaults
        if (cfg.scheme.variant != base.scheme.variant) cfg = load_config(o.config_path, defaults(cfg.scheme.variant));
    }
    cfg.threads = o.threads;
    return cfg;
}

void print_summary(double theta, const ScenarioResult& r)
{
    std::printf("theta=%.6f peak1=%.6e peak3=%.6e E1=%.6e E3=%.6e residual=%.6e trace=%.2e herm=%.2e\n", theta,
                r.peak_amp_1, r.peak_amp_3, r.released_energy_1, r.released_energy_3, r.residual_coherence_norm,
                r.max_trace_defect, r.max_hermiticity_defect);
}

int run_simulate(const CommonOptions& o, const std::optional<std::string>& theta_text, bool overlap)
{
    SimulationConfig cfg = base_config(o, overlap);
    if (overlap && theta_text) throw std::invalid_argument("--theta cannot be combined with --overlap");
    if (theta_text) set_pulse_area(cfg, parse_angle(*theta_text));
    const auto& c4 = cfg.schedule.control4;
    const double theta = pulse_area(c4.amp, c4.t1, c4.t2, cfg.scheme);

    const ScenarioResult r = overlap ? run_overlap_scenario(cfg) : run_storage_cycle(cfg);
    fs::create_directories(o.out_dir);
    const fs::path dir(o.out_dir);
    write_text(dir / run_file_name(0), format_run_csv(r));
    const double thetas[] = {theta};
    write_text(dir / "summary.csv", format_summary_csv(thetas, std::span(&r, 1)));
    write_text(dir / "run.meta", format_config(cfg));
    print_summary(theta, r);
    return 0;
}

int run_sweep(const CommonOptions& o, const std::string& thetas_text, int parallel)
{
    const SimulationConfig cfg = base_config(o, false);
    const std::vector<double> thetas = parse_angle_list(thetas_text);
    const auto results = sweep_pulse_area(cfg, thetas, parallel);

    fs::create_directories(o.out_dir);
    const fs::path dir(o.out_dir);
    for (std::size_t i = 0; i < results.size(); ++i) write_text(dir / run_file_name(i), format_run_csv(results[i]));
    write_text(dir / "summary.csv", format_summary_csv(thetas, results));
    write_text(dir / "run.meta", format_config(cfg));
    for (std::size_t i = 0; i < results.size(); ++i) print_summary(thetas[i], results[i]);
    return 0;
}

struct AnalyticsOptions {
    std::string quantity = "velocity";
    std::string theta = "0";
    std::optional<double> omega2;
    double eps1_re = 0.0, eps1_im = 0.0, eps3_re = 0.0, eps3_im = 0.0;
    double sigma_bc_re = 0.0, sigma_bc_im = 0.0, sigma_dc_re = 0.0, sigma_dc_im = 0.0;
};

int run_analytics(const CommonOptions& o, const AnalyticsOptions& a)
{
    const SimulationConfig cfg = base_config(o, false);
    const LevelScheme& s = cfg.scheme;
    const double theta = parse_angle(a.theta);
    const double omega2 = a.omega2.value_or(-cfg.schedule.control2.eps2_max * s.d2 / units::hbar);
    const cplx eps1(a.eps1_re, a.eps1_im), eps3(a.eps3_re, a.eps3_im);
    const cplx sbc(a.sigma_bc_re, a.sigma_bc_im), sdc(a.sigma_dc_re, a.sigma_dc_im);

    if (a.quantity == "velocity") {
        std::printf("theta,omega2,velocity\n%.17g,%.17g,%.17g\n", theta, omega2,
                    polariton_velocity(theta, omega2, s, cfg.N));
    } else if (a.quantity == "mixing") {
        const MixingMatrix m = mixing_matrix(theta, s, cfg.N);
        std::printf("theta,M11,M13,M31,M33\n%.17g,%.17g,%.17g,%.17g,%.17g\n", theta, m.M11, m.M13, m.M31, m.M33);
    } else {
        const cplx psi3 = dark_polariton_3(eps1, sbc, omega2, s, cfg.N);
        std::printf("theta,omega2,re_psi3,im_psi3");
        if (s.variant == Variant::CaseB) {
            const cplx psi4 = dark_polariton_4(eps1, eps3, sbc, sdc, theta, omega2, s, cfg.N);
            std::printf(",re_psi4,im_psi4\n%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", theta, omega2, psi3.real(),
                        psi3.imag(), psi4.real(), psi4.imag());
        } else {
            std::printf("\n%.17g,%.17g,%.17g,%.17g\n", theta, omega2, psi3.real(), psi3.imag());
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Store, rotate and release weak light pulses in four-level media"};
    app.require_subcommand(1);

    CommonOptions sim_opts;
    std::optional<std::string> theta;
    bool overlap = false;
    auto* simulate = app.add_subcommand("simulate", "run one storage cycle");
    add_common(simulate, sim_opts);
    simulate->add_option("--theta", theta, "control-4 pulse area (e.g. 0.5, pi/2, 3pi/4)");
    simulate->add_flag("--overlap", overlap, "case a with control 4 overlapping the release");

    CommonOptions sweep_opts;
    std::string thetas = "0,pi/6,pi/4,pi/3,pi/2,3pi/4,pi";
    int parallel = 1;
    auto* sweep = app.add_subcommand("sweep", "one storage cycle per pulse area");
    add_common(sweep, sweep_opts);
    sweep->add_option("--thetas", thetas, "comma-separated pulse areas");
    sweep->add_option("--parallel", parallel, "concurrent runs")->check(CLI::PositiveNumber);

    CommonOptions an_opts;
    AnalyticsOptions an;
    auto* analytics = app.add_subcommand("analytics", "closed-form polariton quantities as a CSV row");
    add_common(analytics, an_opts);
    analytics->add_option("--quantity", an.quantity)->check(CLI::IsMember({"velocity", "mixing", "polariton"}));
    analytics->add_option("--theta", an.theta);
    analytics->add_option("--omega2", an.omega2, "control Rabi frequency (default: -eps2_max d2)");
    analytics->add_option("--eps1-re", an.eps1_re);
    analytics->add_option("--eps1-im", an.eps1_im);
    analytics->add_option("--eps3-re", an.eps3_re);
    analytics->add_option("--eps3-im", an.eps3_im);
    analytics->add_option("--sigma-bc-re", an.sigma_bc_re);
    analytics->add_option("--sigma-bc-im", an.sigma_bc_im);
    analytics->add_option("--sigma-dc-re", an.sigma_dc_re);
    analytics->add_option("--sigma-dc-im", an.sigma_dc_im);

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return run_simulate(sim_opts, theta, overlap);
        if (sweep->parsed()) return run_sweep(sweep_opts, thetas, parallel);
        return run_analytics(an_opts, an);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
