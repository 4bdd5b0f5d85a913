#pragma once

#include "lightstore/bloch.hpp"
#include "lightstore/core.hpp"

#include <vector>

namespace lightstore {

/// Medium at one window time t' = t - z/c. Nodes z_i = i L/(nz-1) include both
/// faces, so node 0 carries the boundary input and node nz-1 the output.
struct MediumState {
    double t_prime = 0.0;
    std::vector<double> z;
    std::vector<DensityMatrix> sigma;
    std::vector<cplx> eps1;
    std::vector<cplx> eps3;

    std::size_t size() const { return z.size(); }

    /// Ground-state medium (|b>, or the prepared b-d superposition in case b)
    /// with envelopes equal to the boundary values at t' = 0.
    static MediumState initial(const SimulationConfig& cfg);
};

/// kappa_j = N d_j omega_j / (eps0 c), the source coefficient of channel j.
/// Throws std::invalid_argument for an unknown channel or channel 3 in case a.
double coupling_constant(const LevelScheme& scheme, double N, int channel);

/// Integrates d(eps_j)/dz' = -i kappa_j sigma_(j)a from z' = 0 with the trapezoid
/// rule, using the current sigma along the medium. Channel 3 stays zero in case a.
void propagate_window(MediumState& state, cplx boundary_eps1, cplx boundary_eps3,
                      const LevelScheme& scheme, double N);

/// Field values the atoms see at window time t (controls from the schedule).
LocalFields control_fields(const PulseSchedule& schedule, const LevelScheme& scheme, double t);

struct AdvanceStats {
    double max_trace_defect = 0.0;
    double max_hermiticity_defect = 0.0;
};

/// One Lie-Trotter split step: every cell's sigma is advanced by dt with the
/// signal envelopes frozen and the controls sampled at the RK4 stage times,
/// then the envelopes are rebuilt along z with the boundary values at t' + dt.
/// A step straddling a control-4 edge is split at the edge.
void advance(MediumState& state, const SimulationConfig& cfg, double dt, AdvanceStats* stats = nullptr);

} // namespace lightstore
