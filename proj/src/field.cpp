#include "lightstore/field.hpp"

#include "lightstore/units.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace lightstore {

namespace {

constexpr cplx I{0.0, 1.0};

cplx boundary(const PulseSchedule& p, int channel, double t)
{
    return p.signal.channel == channel ? cplx(p.signal.envelope(t)) : cplx{};
}

} // namespace

MediumState MediumState::initial(const SimulationConfig& cfg)
{
    MediumState s;
    const auto n = static_cast<std::size_t>(cfg.nz);
    s.z.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.z[i] = cfg.L * static_cast<double>(i) / static_cast<double>(n - 1);

    const DensityMatrix ground = cfg.scheme.variant == Variant::CaseB ? DensityMatrix::ground(cfg.prepared_theta)
                                                                       : DensityMatrix::pure(b);
    s.sigma.assign(n, ground);
    s.eps1.assign(n, boundary(cfg.schedule, 1, 0.0));
    s.eps3.assign(n, boundary(cfg.schedule, 3, 0.0));
    return s;
}

double coupling_constant(const LevelScheme& scheme, double N, int channel)
{
    if (channel == 1) return N * scheme.d1 * scheme.omega1() / (units::eps0 * units::c);
    if (channel == 3) {
        if (scheme.variant == Variant::CaseA)
            throw std::invalid_argument("coupling_constant: channel 3 is not defined in case a");
        return N * scheme.d3 * scheme.omega3() / (units::eps0 * units::c);
    }
    throw std::invalid_argument("coupling_constant: unknown channel " + std::to_string(channel));
}

void propagate_window(MediumState& state, cplx boundary_eps1, cplx boundary_eps3, const LevelScheme& scheme,
                      double N)
{
    const std::size_t n = state.size();
    const double kappa1 = coupling_constant(scheme, N, 1);
    const bool has3 = scheme.variant == Variant::CaseB;
    const double kappa3 = has3 ? coupling_constant(scheme, N, 3) : 0.0;

    state.eps1[0] = boundary_eps1;
    state.eps3[0] = has3 ? boundary_eps3 : cplx{};
    for (std::size_t i = 1; i < n; ++i) {
        const double dz = state.z[i] - state.z[i - 1];
        const auto& lo = state.sigma[i - 1];
        const auto& hi = state.sigma[i];
        if (!hi.finite()) throw NumericalFailure("propagate_window: non-finite sigma at node " + std::to_string(i));
        state.eps1[i] = state.eps1[i - 1] - I * kappa1 * 0.5 * dz * (lo(b, a) + hi(b, a));
        state.eps3[i] = has3 ? state.eps3[i - 1] - I * kappa3 * 0.5 * dz * (lo(d, a) + hi(d, a)) : cplx{};
    }
}

LocalFields control_fields(const PulseSchedule& schedule, const LevelScheme& scheme, double t)
{
    LocalFields f;
    f.Omega2 = -schedule.control2.envelope(t) * scheme.d2 / units::hbar;
    f.ctrl4 = schedule.control4.envelope(t);
    return f;
}

namespace {

void step_cells(MediumState& state, const SimulationConfig& cfg, double t, double dt, AdvanceStats& stats)
{
    const auto& sched = cfg.schedule;
    const auto& scheme = cfg.scheme;
    // Sample the rectangular control 4 strictly inside the sub-interval so that
    // a step ending exactly on an edge sees a constant amplitude.
    const double inner = 1e-9 * dt;
    StageFields base{control_fields(sched, scheme, t + inner), control_fields(sched, scheme, t + 0.5 * dt),
                     control_fields(sched, scheme, t + dt - inner)};
    base.start.Omega2 = control_fields(sched, scheme, t).Omega2;
    base.end.Omega2 = control_fields(sched, scheme, t + dt).Omega2;

    const auto n = static_cast<std::ptrdiff_t>(state.size());
    std::vector<StepReport> reports(state.size());
    std::vector<char> failed(state.size(), 0);
    std::string first_error;

#pragma omp parallel for num_threads(cfg.threads) if (cfg.threads > 1) schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        StageFields f = base;
        for (LocalFields* lf : {&f.start, &f.mid, &f.end}) {
            lf->eps1 = state.eps1[i];
            lf->eps3 = state.eps3[i];
        }
        try {
            state.sigma[i] = step_cell(state.sigma[i], f, scheme, dt, &reports[i]);
        } catch (const NumericalFailure&) {
            failed[i] = 1;
        }
    }

    for (std::size_t i = 0; i < state.size(); ++i) {
        if (failed[i])
            throw NumericalFailure("advance: numerical failure in cell " + std::to_string(i) + " at t' = " +
                                   std::to_string(t));
        stats.max_hermiticity_defect = std::max(stats.max_hermiticity_defect, reports[i].hermiticity_defect);
        stats.max_trace_defect = std::max(stats.max_trace_defect, state.sigma[i].trace_defect());
    }
}

} // namespace

void advance(MediumState& state, const SimulationConfig& cfg, double dt, AdvanceStats* stats)
{
    AdvanceStats local;
    const double t0 = state.t_prime;
    const double t1 = t0 + dt;

    double cursor = t0;
    for (double edge : {cfg.schedule.control4.t1, cfg.schedule.control4.t2}) {
        if (edge > cursor && edge < t1) {
            step_cells(state, cfg, cursor, edge - cursor, local);
            cursor = edge;
        }
    }
    step_cells(state, cfg, cursor, t1 - cursor, local);

    state.t_prime = t1;
    propagate_window(state, boundary(cfg.schedule, 1, t1), boundary(cfg.schedule, 3, t1), cfg.scheme, cfg.N);

    if (stats) {
        stats->max_trace_defect = std::max(stats->max_trace_defect, local.max_trace_defect);
        stats->max_hermiticity_defect = std::max(stats->max_hermiticity_defect, local.max_hermiticity_defect);
    }
}

} // namespace lightstore
