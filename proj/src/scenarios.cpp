#include "lightstore/scenarios.hpp"

#include "lightstore/polariton.hpp"
#include "lightstore/units.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace lightstore {

namespace {

constexpr double kDeskFactor = 0.1;
constexpr double kSignalLength = 1e11;

double release_start_of(const SimulationConfig& cfg)
{
    const auto& c2 = cfg.schedule.control2;
    return c2.stores() ? c2.t_on + 5.0 * c2.rise : -std::numeric_limits<double>::infinity();
}

void track_peak(double& peak, cplx value)
{
    if (std::abs(value.real()) > std::abs(peak)) peak = value.real();
}

double residual_norm(const MediumState& s)
{
    double sum = 0.0;
    for (const auto& rho : s.sigma)
        sum += std::norm(rho(b, c)) + std::norm(rho(d, c)) + std::norm(rho(b, d));
    return sum;
}

cplx interpolate(const std::vector<double>& t, const std::vector<cplx>& v, double at)
{
    if (at <= t.front()) return v.front();
    if (at >= t.back()) return v.back();
    const auto hi = static_cast<std::size_t>(std::upper_bound(t.begin(), t.end(), at) - t.begin());
    const std::size_t lo = hi - 1;
    const double w = (at - t[lo]) / (t[hi] - t[lo]);
    return (1.0 - w) * v[lo] + w * v[hi];
}

} // namespace

ScenarioResult run_storage_cycle(const SimulationConfig& cfg, const RunOptions& options)
{
    cfg.validate();
    ScenarioResult r;
    r.release_start = release_start_of(cfg);
    const auto& sig = cfg.schedule.signal;
    r.input_energy = sig.eps10 * sig.eps10 * 0.375 * (sig.tau2 - sig.tau1);

    MediumState state = MediumState::initial(cfg);
    AdvanceStats stats;
    std::vector<double> pending = options.snapshot_times;
    std::sort(pending.begin(), pending.end());
    std::size_t next_snapshot = 0;

    const auto steps = static_cast<long long>(std::ceil(cfg.t_end / cfg.dt - 1e-9));
    const std::size_t last = state.size() - 1;

    auto record = [&] {
        r.times.push_back(state.t_prime);
        r.out1.push_back(state.eps1[last]);
        r.out3.push_back(state.eps3[last]);
    };
    auto snapshot = [&] {
        while (next_snapshot < pending.size() && state.t_prime >= pending[next_snapshot] - 1e-9 * cfg.dt) {
            r.snapshots.push_back(state);
            ++next_snapshot;
        }
    };

    record();
    snapshot();
    for (long long n = 1; n <= steps; ++n) {
        advance(state, cfg, cfg.dt, &stats);
        if (state.t_prime > r.release_start) {
            const cplx o1 = state.eps1[last];
            const cplx o3 = state.eps3[last];
            r.released_energy_1 += std::norm(o1) * cfg.dt;
            r.released_energy_3 += std::norm(o3) * cfg.dt;
            track_peak(r.peak_amp_1, o1);
            track_peak(r.peak_amp_3, o3);
        }
        if (n % cfg.record_stride == 0 || n == steps) record();
        snapshot();
    }

    r.residual_coherence_norm = residual_norm(state);
    r.max_trace_defect = stats.max_trace_defect;
    r.max_hermiticity_defect = stats.max_hermiticity_defect;
    return r;
}

std::vector<ScenarioResult> sweep_pulse_area(const SimulationConfig& cfg, std::span<const double> thetas,
                                             int parallel)
{
    std::vector<SimulationConfig> configs;
    for (double theta : thetas) {
        if (!std::isfinite(theta)) throw std::invalid_argument("sweep_pulse_area: non-finite theta");
        SimulationConfig run = cfg;
        set_pulse_area(run, theta);
        if (parallel > 1) run.threads = 1;
        configs.push_back(run);
    }

    std::vector<ScenarioResult> results(configs.size());
    const std::size_t width = static_cast<std::size_t>(std::max(parallel, 1));
    for (std::size_t begin = 0; begin < configs.size(); begin += width) {
        const std::size_t end = std::min(configs.size(), begin + width);
        std::vector<std::future<ScenarioResult>> jobs;
        for (std::size_t i = begin; i < end; ++i)
            jobs.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred,
                                      [&cfg = configs[i]] { return run_storage_cycle(cfg); }));
        for (std::size_t i = begin; i < end; ++i) results[i] = jobs[i - begin].get();
    }
    return results;
}

ScenarioResult run_overlap_scenario(const SimulationConfig& cfg)
{
    if (cfg.scheme.variant != Variant::CaseA)
        throw std::invalid_argument("run_overlap_scenario: requires case a");
    const auto& c2 = cfg.schedule.control2;
    const auto& c4 = cfg.schedule.control4;
    if (!c2.stores() || !(c4.t1 < c2.t_on && c4.t2 > c2.t_on) || c4.amp == 0.0)
        throw std::invalid_argument("run_overlap_scenario: control 4 must overlap the control-2 switch-on");
    return run_storage_cycle(cfg);
}

double measure_group_delay(const ScenarioResult& r, const SimulationConfig& cfg)
{
    const bool channel3 = cfg.schedule.signal.channel == 3;
    const auto& out = channel3 ? r.out3 : r.out1;
    if (out.size() < 3) throw std::runtime_error("measure_group_delay: too few samples");

    double transmitted = 0.0;
    std::size_t imax = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i > 0) transmitted += 0.5 * (std::norm(out[i]) + std::norm(out[i - 1])) * (r.times[i] - r.times[i - 1]);
        if (std::norm(out[i]) > std::norm(out[imax])) imax = i;
    }
    if (transmitted < 1e-6 * r.input_energy)
        throw std::runtime_error("measure_group_delay: output pulse below detection threshold");

    double t_peak = r.times[imax];
    if (imax > 0 && imax + 1 < out.size()) {
        // Parabolic refinement on |out|^2 over three equally spaced samples.
        const double ym = std::norm(out[imax - 1]);
        const double y0 = std::norm(out[imax]);
        const double yp = std::norm(out[imax + 1]);
        const double curv = ym - 2.0 * y0 + yp;
        if (curv < 0.0) {
            const double h = r.times[imax + 1] - r.times[imax];
            t_peak += 0.5 * h * (ym - yp) / curv;
        }
    }
    const double delay = t_peak - cfg.schedule.signal.center();
    return cfg.L / (delay + cfg.L / units::c);
}

SimulationConfig storage_config(Variant variant, Scale scale)
{
    SimulationConfig cfg = default_config(variant);
    if (scale == Scale::Full) return cfg;

    auto& p = cfg.schedule;
    cfg.L *= kDeskFactor;
    p.signal.tau1 *= kDeskFactor;
    p.signal.tau2 *= kDeskFactor;
    p.control2.rise *= kDeskFactor;
    p.control2.t_off *= kDeskFactor;
    p.control2.t_on = p.control2.t_off + storage_plateau(cfg.scheme, p.control4.amp, p.control2.rise);
    const double mid = 0.5 * (p.control2.t_off + p.control2.t_on);
    p.control4.t1 = mid;
    p.control4.t2 = mid;
    cfg.t_end = p.control2.t_on + 1.5 * kSignalLength * kDeskFactor;
    cfg.dt = resolved_dt(cfg);
    return cfg;
}

void set_pulse_area(SimulationConfig& cfg, double theta, double shift_fraction)
{
    auto& c2 = cfg.schedule.control2;
    auto& c4 = cfg.schedule.control4;
    if (cfg.scheme.variant == Variant::CaseB) c4.amp = theta < 0.0 ? -std::abs(c4.amp) : std::abs(c4.amp);
    const double width = theta == 0.0 ? 0.0 : duration_for_area(theta, c4.amp, cfg.scheme);
    const double plateau = c2.t_on - c2.t_off;
    const double center = 0.5 * (c2.t_off + c2.t_on) + shift_fraction * plateau;
    c4.t1 = center - 0.5 * width;
    c4.t2 = center + 0.5 * width;
}

SimulationConfig overlap_config(Scale scale)
{
    SimulationConfig cfg = storage_config(Variant::CaseA, scale);
    auto& p = cfg.schedule;
    p.control4.amp *= 10.0;
    p.control4.t1 = 0.5 * (p.control2.t_off + p.control2.t_on);
    p.control4.t2 = p.control2.t_on + 0.6 * (p.signal.tau2 - p.signal.tau1);
    cfg.dt = resolved_dt(cfg);
    return cfg;
}

SimulationConfig slow_light_config(Variant variant, Scale scale, double control_scale, double prepared_theta)
{
    SimulationConfig cfg = storage_config(variant, scale);
    auto& p = cfg.schedule;
    p.control2.eps2_max *= control_scale;
    p.control2.t_off = std::numeric_limits<double>::infinity();
    p.control2.t_on = std::numeric_limits<double>::infinity();
    p.control4.amp = 0.0;
    p.control4.t1 = p.control4.t2 = 0.0;
    if (variant == Variant::CaseB) {
        cfg.prepared_theta = prepared_theta;
        p.signal.channel = std::abs(std::sin(prepared_theta)) > std::abs(std::cos(prepared_theta)) ? 3 : 1;
    }

    const double omega2 = -p.control2.eps2_max * cfg.scheme.d2 / units::hbar;
    const double v = polariton_velocity(prepared_theta, omega2, cfg.scheme, cfg.N);
    cfg.t_end = p.signal.tau2 + 3.0 * cfg.L / v;
    cfg.dt = resolved_dt(cfg);
    return cfg;
}

double waveform_distance(const ScenarioResult& a, const ScenarioResult& b)
{
    double diff = 0.0;
    double norm = 0.0;
    for (std::size_t i = 0; i < a.times.size(); ++i) {
        const double t = a.times[i];
        if (t <= a.release_start) continue;
        const cplx b1 = interpolate(b.times, b.out1, t);
        const cplx b3 = interpolate(b.times, b.out3, t);
        diff += std::norm(a.out1[i] - b1) + std::norm(a.out3[i] - b3);
        norm += std::norm(a.out1[i]) + std::norm(a.out3[i]);
    }
    if (norm == 0.0) throw std::domain_error("waveform_distance: reference waveform is zero");
    return std::sqrt(diff / norm);
}

namespace {

struct Samples {
    std::vector<double> t;
    std::vector<double> y;
};

// |out1| over the window with a least-squares quadratic removed and a Hann taper.
Samples modulation_samples(const ScenarioResult& r, double t_begin, double t_end)
{
    Samples s;
    for (std::size_t i = 0; i < r.times.size(); ++i) {
        if (r.times[i] < t_begin || r.times[i] > t_end) continue;
        s.t.push_back(r.times[i]);
        s.y.push_back(std::abs(r.out1[i]));
    }
    if (s.t.size() < 8) throw std::domain_error("modulation analysis: too few samples in window");

    const double mid = 0.5 * (t_begin + t_end);
    const double half = 0.5 * (t_end - t_begin);
    Eigen::MatrixXd basis(s.t.size(), 3);
    Eigen::VectorXd rhs(s.t.size());
    for (std::size_t i = 0; i < s.t.size(); ++i) {
        const double x = (s.t[i] - mid) / half;
        basis(i, 0) = 1.0;
        basis(i, 1) = x;
        basis(i, 2) = x * x;
        rhs(i) = s.y[i];
    }
    const Eigen::VectorXd fit = basis.colPivHouseholderQr().solve(rhs);
    const Eigen::VectorXd detrended = rhs - basis * fit;
    for (std::size_t i = 0; i < s.t.size(); ++i) {
        const double x = (s.t[i] - t_begin) / (t_end - t_begin);
        const double hann = std::sin(std::numbers::pi * x);
        s.y[i] = detrended(i) * hann * hann;
    }
    return s;
}

double power_at(const Samples& s, double frequency)
{
    cplx acc{};
    for (std::size_t i = 0; i < s.t.size(); ++i)
        acc += s.y[i] * std::exp(cplx(0.0, -2.0 * std::numbers::pi * frequency * s.t[i]));
    return std::norm(acc);
}

} // namespace

double modulation_power(const ScenarioResult& r, double t_begin, double t_end, double frequency)
{
    return power_at(modulation_samples(r, t_begin, t_end), frequency);
}

double modulation_period(const ScenarioResult& r, double t_begin, double t_end)
{
    const Samples s = modulation_samples(r, t_begin, t_end);
    const double spacing = (s.t.back() - s.t.front()) / static_cast<double>(s.t.size() - 1);
    const double f_lo = 2.0 / (t_end - t_begin);
    const double f_hi = 0.125 / spacing;
    if (!(f_hi > f_lo)) throw std::domain_error("modulation_period: window too short for the sampling");

    const int bins = 4000;
    double best_f = f_lo;
    double best_p = -1.0;
    for (int k = 0; k <= bins; ++k) {
        const double f = f_lo + (f_hi - f_lo) * k / bins;
        const double p = power_at(s, f);
        if (p > best_p) {
            best_p = p;
            best_f = f;
        }
    }
    return 1.0 / best_f;
}

} // namespace lightstore
