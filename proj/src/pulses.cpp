#include "lightstore/pulses.hpp"

#include "lightstore/core.hpp"
#include "lightstore/units.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lightstore {

double SignalPulse::envelope(double t) const
{
    if (t < tau1 || t > tau2) return 0.0;
    const double s = std::sin(std::numbers::pi * (t - tau1) / (tau2 - tau1));
    return eps10 * s * s;
}

double Control2::envelope(double t) const
{
    const double off = 0.5 * (1.0 - std::tanh((t - t_off) / rise));
    const double on = 0.5 * (1.0 + std::tanh((t - t_on) / rise));
    return std::clamp(eps2_max * (off + on), 0.0, eps2_max);
}

void PulseSchedule::validate() const
{
    if (!(signal.tau1 < signal.tau2))
        throw std::invalid_argument("signal pulse requires tau1 < tau2");
    if (signal.channel != 1 && signal.channel != 3)
        throw std::invalid_argument("signal channel must be 1 or 3");
    if (!(control2.rise > 0.0))
        throw std::invalid_argument("control 2 rise time must be positive");
    if (control2.eps2_max < 0.0)
        throw std::invalid_argument("control 2 amplitude must be non-negative");
    if (control2.stores() && !(control2.t_off < control2.t_on))
        throw std::invalid_argument("control 2 requires t_off < t_on");
    if (!(control4.t2 >= control4.t1))
        throw std::invalid_argument("control 4 requires t2 >= t1");
}

namespace {

double coupling_rate(double amp, const LevelScheme& scheme)
{
    return scheme.variant == Variant::CaseB ? amp : std::abs(amp * scheme.d4);
}

} // namespace

double pulse_area(double amp, double t1, double t2, const LevelScheme& scheme)
{
    return coupling_rate(amp, scheme) * (t2 - t1) / (2.0 * units::hbar);
}

double duration_for_area(double theta, double amp, const LevelScheme& scheme)
{
    const double rate = coupling_rate(amp, scheme);
    if (rate == 0.0)
        throw std::domain_error("duration_for_area: control 4 amplitude gives no coupling");
    const double duration = 2.0 * units::hbar * theta / rate;
    if (duration < 0.0)
        throw std::domain_error("duration_for_area: area sign not reachable with this amplitude");
    return duration;
}

double storage_plateau(const LevelScheme& scheme, double amp, double rise)
{
    return (duration_for_area(std::numbers::pi, std::abs(amp), scheme) + 10.0 * rise) / 0.6;
}

} // namespace lightstore
