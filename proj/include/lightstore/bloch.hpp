#pragma once

#include "lightstore/core.hpp"

#include <stdexcept>
#include <string>

namespace lightstore {

/// Field values seen by one cell.
struct LocalFields {
    cplx eps1{};
    cplx eps3{};
    /// Control Rabi frequency, Omega2 = -eps2 d2 / hbar.
    double Omega2 = 0.0;
    /// Control 4: U in case b, eps4 in case a.
    double ctrl4 = 0.0;
};

/// Fields at the start, midpoint and end of one RK4 step.
struct StageFields {
    LocalFields start, mid, end;
};

class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// d(sigma)/dt for case b: signal 1 on b-a, signal 3 on d-a, control 2 on c-a,
/// effective coupling iU between b and d, spontaneous decay of a into b, c, d.
///
/// The rotating-frame Hamiltonian has H_ba = -d1 eps1/2, H_da = -d3 eps3/2,
/// H_ca = Omega2/2 and H_bd = iU/2; the complex envelopes enter conjugated in
/// the a-row elements so that the equations stay Hermitian.
DensityMatrix rhs_case_b(const DensityMatrix& sigma, const LocalFields& f, const LevelScheme& scheme);

/// d(sigma)/dt for case a: the Lambda system b-a-c driven by signal 1 and
/// control 2, with a real electric-dipole coupling H_cd = -eps4 d4/2.
DensityMatrix rhs_case_a(const DensityMatrix& sigma, const LocalFields& f, const LevelScheme& scheme);

DensityMatrix rhs(const DensityMatrix& sigma, const LocalFields& f, const LevelScheme& scheme);

struct StepReport {
    double trace_drift = 0.0;
    /// Hermiticity defect of the raw RK4 result, before re-Hermitization.
    double hermiticity_defect = 0.0;
};

/// One classical RK4 step with the fields held constant. The result is
/// re-Hermitized. Throws NumericalFailure on non-finite output or a trace
/// drift above 1e-8.
DensityMatrix step_cell(const DensityMatrix& sigma, const LocalFields& f, const LevelScheme& scheme,
                        double dt, StepReport* report = nullptr);

/// RK4 step with the fields sampled at the stage times.
DensityMatrix step_cell(const DensityMatrix& sigma, const StageFields& f, const LevelScheme& scheme,
                        double dt, StepReport* report = nullptr);

} // namespace lightstore
