#include "lightstore/core.hpp"

#include "lightstore/units.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace lightstore {

std::string_view to_string(Variant v)
{
    return v == Variant::CaseA ? "a" : "b";
}

Variant parse_variant(std::string_view s)
{
    if (s == "a" || s == "A" || s == "CaseA") return Variant::CaseA;
    if (s == "b" || s == "B" || s == "CaseB") return Variant::CaseB;
    throw std::invalid_argument("unknown variant '" + std::string(s) + "' (expected a or b)");
}

void LevelScheme::validate() const
{
    if (Gamma_ab < 0.0 || Gamma_ac < 0.0 || Gamma_ad < 0.0)
        throw std::invalid_argument("decay rates must be non-negative");
    if (variant == Variant::CaseA && (Gamma_ad != 0.0 || d3 != 0.0))
        throw std::invalid_argument("case a requires Gamma_ad = 0 and d3 = 0");
    for (double w : {omega1(), omega2(), omega3(), omega4()})
        if (!std::isfinite(w)) throw std::invalid_argument("transition frequencies must be finite");
    if (!(omega1() > 0.0) || !(omega2() > 0.0))
        throw std::invalid_argument("omega1 and omega2 must be positive");
    for (double v : {d1, d2, d3, d4, U})
        if (!std::isfinite(v)) throw std::invalid_argument("dipoles and U must be finite");
}

DensityMatrix DensityMatrix::pure(Level l)
{
    DensityMatrix rho;
    rho(l, l) = 1.0;
    return rho;
}

DensityMatrix DensityMatrix::ground(double theta)
{
    Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
    psi(b) = std::cos(theta);
    psi(d) = -std::sin(theta);
    return DensityMatrix(psi * psi.adjoint());
}

void SimulationConfig::validate() const
{
    scheme.validate();
    schedule.validate();
    if (!(L > 0.0)) throw std::invalid_argument("medium length L must be positive");
    if (!(N >= 0.0)) throw std::invalid_argument("atom density N must be non-negative");
    if (nz < 2) throw std::invalid_argument("nz must be at least 2");
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (!(t_end > dt)) throw std::invalid_argument("t_end must exceed dt");
    if (record_stride < 1) throw std::invalid_argument("record_stride must be at least 1");
    if (threads < 1) throw std::invalid_argument("threads must be at least 1");
    if (scheme.variant == Variant::CaseA && schedule.signal.channel == 3)
        throw std::invalid_argument("case a has no channel 3");
    if (scheme.variant == Variant::CaseA && prepared_theta != 0.0)
        throw std::invalid_argument("prepared_theta applies to case b only");
}

double dipole_from_rate(double gamma, double omega)
{
    if (!(omega > 0.0)) throw std::domain_error("dipole_from_rate: omega must be positive");
    if (gamma < 0.0) throw std::domain_error("dipole_from_rate: gamma must be non-negative");
    const double c3 = units::c * units::c * units::c;
    return std::sqrt(3.0 * gamma * c3 / (4.0 * omega * omega * omega));
}

double rate_from_dipole(double dipole, double omega)
{
    const double c3 = units::c * units::c * units::c;
    return 4.0 * omega * omega * omega * dipole * dipole / (3.0 * c3);
}

SimulationConfig default_config(Variant variant)
{
    SimulationConfig cfg;
    LevelScheme& s = cfg.scheme;
    s.variant = variant;
    s.E_a = -0.10;
    s.E_b = -0.20;
    s.E_c = -0.18;
    s.E_d = variant == Variant::CaseA ? -0.22 : s.E_b + 1e-7;
    s.Gamma_ab = 2.4e-9;
    s.Gamma_ac = 2.4e-9;
    s.Gamma_ad = variant == Variant::CaseB ? 2.4e-9 : 0.0;
    s.d1 = dipole_from_rate(s.Gamma_ab, s.omega1());
    s.d2 = dipole_from_rate(s.Gamma_ac, s.omega2());
    s.d3 = variant == Variant::CaseB ? dipole_from_rate(s.Gamma_ad, s.omega3()) : 0.0;
    s.d4 = -2.74e-1;
    s.U = variant == Variant::CaseB ? 1e-10 : 0.0;

    cfg.L = variant == Variant::CaseA ? 2.5e7 : 3e7;
    cfg.N = 3e-13;
    cfg.nz = 200;
    cfg.record_stride = 10;

    const double signal_length = 1e11;
    PulseSchedule& p = cfg.schedule;
    p.signal.eps10 = 1e-10;
    p.signal.tau1 = 0.0;
    p.signal.tau2 = signal_length;
    p.control2.eps2_max = 1.2e-9;
    p.control2.rise = 1e9;
    p.control2.t_off = 0.75 * signal_length;
    p.control4.amp = variant == Variant::CaseB ? s.U : 2e-9;
    p.control2.t_on = p.control2.t_off + storage_plateau(s, p.control4.amp, p.control2.rise);
    const double mid = 0.5 * (p.control2.t_off + p.control2.t_on);
    p.control4.t1 = mid;
    p.control4.t2 = mid;

    cfg.t_end = p.control2.t_on + 1.5 * signal_length;
    cfg.dt = resolved_dt(cfg);
    return cfg;
}

double fastest_rate(const SimulationConfig& cfg)
{
    const auto& s = cfg.scheme;
    const double omega2 = std::abs(cfg.schedule.control2.eps2_max * s.d2) / units::hbar;
    const double amp4 = cfg.schedule.control4.amp;
    const double ctrl4 = s.variant == Variant::CaseB ? std::abs(amp4) / units::hbar
                                                     : std::abs(amp4 * s.d4) / units::hbar;
    return std::max({omega2, ctrl4, std::abs(s.U) / units::hbar});
}

double resolved_dt(const SimulationConfig& cfg, int steps_per_period)
{
    const double rate = fastest_rate(cfg);
    if (!(rate > 0.0)) throw std::domain_error("resolved_dt: no finite coupling rate to resolve");
    return 2.0 * std::numbers::pi / rate / steps_per_period;
}

} // namespace lightstore
