#pragma once

#include "lightstore/core.hpp"
#include "lightstore/field.hpp"

#include <span>
#include <vector>

namespace lightstore {

/// Desk scale shrinks the medium length, probe length, switching times and
/// rise time by 10x; control-4 amplitudes and areas are unchanged.
enum class Scale { Desk, Full };

struct RunOptions {
    /// Capture the medium at the first step boundary at or after each time.
    std::vector<double> snapshot_times;
};

struct ScenarioResult {
    std::vector<double> times;
    std::vector<cplx> out1;
    std::vector<cplx> out3;

    /// Start of the release window, t_on + 5 rise (-inf without storage).
    double release_start = 0.0;
    double released_energy_1 = 0.0;
    double released_energy_3 = 0.0;
    /// Signed real-part extremum in the release window.
    double peak_amp_1 = 0.0;
    double peak_amp_3 = 0.0;
    /// Sum over cells of |sigma_bc|^2 + |sigma_dc|^2 + |sigma_bd|^2 at t_end.
    double residual_coherence_norm = 0.0;

    double input_energy = 0.0;
    double max_trace_defect = 0.0;
    double max_hermiticity_defect = 0.0;

    std::vector<MediumState> snapshots;
};

/// Full store / rotate / release cycle recording the fields leaving z = L.
ScenarioResult run_storage_cycle(const SimulationConfig& cfg, const RunOptions& options = {});

/// One storage cycle per theta, with the control-4 window re-sized for each
/// area by set_pulse_area. Runs up to `parallel` cycles concurrently.
std::vector<ScenarioResult> sweep_pulse_area(const SimulationConfig& cfg, std::span<const double> thetas,
                                             int parallel = 1);

/// Case a cycle with control 4 overlapping the control-2 switch-on.
/// Throws std::invalid_argument if the configuration has no such overlap.
ScenarioResult run_overlap_scenario(const SimulationConfig& cfg);

/// Group velocity L / (dt' + L/c) from the delay of the output peak relative
/// to the probe centre. Throws std::runtime_error when the transmitted energy
/// is below 1e-6 of the input.
double measure_group_delay(const ScenarioResult& result, const SimulationConfig& cfg);

/// Store-then-release configuration with a zero-area control-4 window.
SimulationConfig storage_config(Variant variant, Scale scale);

/// Sizes the control-4 window for area theta and centres it in the storage
/// plateau, displaced by shift_fraction of the plateau length.
void set_pulse_area(SimulationConfig& cfg, double theta, double shift_fraction = 0.0);

/// Case a with control 4 ten times stronger, on from the middle of storage
/// until 0.6 probe lengths into the release.
SimulationConfig overlap_config(Scale scale);

/// Constant control 2 (no storage) for group-delay measurements; eps2_max is
/// multiplied by control_scale. In case b the medium starts in
/// cos|b> - sin|d> and the probe goes into channel 3 when |sin| > |cos|.
SimulationConfig slow_light_config(Variant variant, Scale scale, double control_scale = 1.0,
                                   double prepared_theta = 0.0);

/// Relative L2 distance over the release window, both channels:
/// ||a - b|| / ||a||, with b linearly interpolated onto a's time grid.
double waveform_distance(const ScenarioResult& a, const ScenarioResult& b);

/// Power of the detrended, Hann-windowed |out1| at `frequency` over [t_begin, t_end].
double modulation_power(const ScenarioResult& r, double t_begin, double t_end, double frequency);

/// Period of the strongest |out1| modulation over [t_begin, t_end], searched
/// between 2 / (t_end - t_begin) and the sampling Nyquist limit / 4.
double modulation_period(const ScenarioResult& r, double t_begin, double t_end);

} // namespace lightstore
