#pragma once

#include <limits>

namespace lightstore {

struct LevelScheme;

/// Sine-squared probe envelope injected at z = 0.
struct SignalPulse {
    double eps10 = 0.0;
    double tau1 = 0.0;
    double tau2 = 0.0;
    /// Boundary channel carrying the probe: 1 (b-a) or 3 (d-a).
    int channel = 1;

    double envelope(double t) const;
    double center() const { return 0.5 * (tau1 + tau2); }
};

/// Control field 2, switched off at t_off and back on at t_on with tanh edges.
/// t_off = t_on = +inf keeps the field on for the whole run.
struct Control2 {
    double eps2_max = 0.0;
    double t_off = std::numeric_limits<double>::infinity();
    double t_on = std::numeric_limits<double>::infinity();
    double rise = 1.0;

    double envelope(double t) const;
    bool stores() const { return t_off < std::numeric_limits<double>::infinity(); }
};

/// Rectangular control pulse 4. amp is U (case b) or eps4 (case a).
struct Control4 {
    double amp = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;

    double envelope(double t) const { return (t >= t1 && t < t2) ? amp : 0.0; }
    double duration() const { return t2 - t1; }
};

struct PulseSchedule {
    SignalPulse signal;
    Control2 control2;
    Control4 control4;

    /// Throws std::invalid_argument on a malformed schedule.
    void validate() const;
};

/// Rotation angle of the stored coherence produced by a rectangular control-4 pulse.
/// Case b: U (t2 - t1) / 2hbar. Case a: |eps4 d4| (t2 - t1) / 2hbar.
double pulse_area(double amp, double t1, double t2, const LevelScheme& scheme);

/// Inverse of pulse_area at fixed amplitude. Throws std::domain_error when amp
/// gives no coupling or the requested sign of theta is unreachable.
double duration_for_area(double theta, double amp, const LevelScheme& scheme);

/// Storage plateau long enough to hold a pi-area control-4 window with room to
/// slide it by +-20% of the plateau, plus 5 rise times of margin on each side.
double storage_plateau(const LevelScheme& scheme, double amp, double rise);

} // namespace lightstore
