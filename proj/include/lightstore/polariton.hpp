#pragma once

#include "lightstore/core.hpp"

namespace lightstore {

/// State of the stored excitation after a control-4 rotation by theta.
struct RotatedCoherences {
    double sigma_bb = 0.0;
    double sigma_dd = 0.0;
    cplx sigma_bd{};
    cplx sigma_bc{};
    cplx sigma_dc{};
    double theta = 0.0;
};

/// Entries of the 2x2 matrix coupling the released channels 1 and 3.
struct MixingMatrix {
    double M11 = 0.0, M13 = 0.0, M31 = 0.0, M33 = 0.0;

    double det() const { return M11 * M33 - M13 * M31; }
};

/// Three-level dark-state polariton
///   Psi = [Omega2 eps1 + (2 omega1 N d1/eps0) sigma_bc] / sqrt(Omega2^2 + 2 omega1 N d1^2/(hbar eps0)) * (-d2/|d2|).
/// Throws std::domain_error when the denominator vanishes.
cplx dark_polariton_3(cplx eps1, cplx sigma_bc, double Omega2, const LevelScheme& scheme, double N);

/// Rotation of a stored b-c coherence by the b-d coupling:
///   sigma_bb = cos^2, sigma_dd = sin^2, sigma_bd = -sin cos,
///   sigma_bc = sigma_bc(t1) cos, sigma_dc = -sigma_bc(t1) sin.
/// population_b and population_d are the pre-pulse populations of |b> and |d>
/// (1 and 0 in the weak-probe limit) when the ground state is not fully in |b>.
RotatedCoherences rotate_coherences(cplx sigma_bc_t1, double theta, double population_b = 1.0,
                                    double population_d = 0.0);

/// Case b only; throws std::invalid_argument for case a.
MixingMatrix mixing_matrix(double theta, const LevelScheme& scheme, double N);

/// Group velocity of the shape-preserving solution,
///   v = c / (1 + 2N (d1^2 omega1 cos^2 + d3^2 omega3 sin^2) / (hbar eps0 Omega2^2)).
/// Returns 0 for Omega2 = 0 (stopped light).
double polariton_velocity(double theta, double Omega2, const LevelScheme& scheme, double N);

/// Four-level polariton combining both signal fields and both coherences.
///
/// sqrt(omega1) is an overall factor, which makes theta = 0 reduce to the three-level
/// form for large Omega2 and gives sqrt(omega1/omega3) eps3 at theta = -pi/2.
/// Throws std::domain_error when Omega2 = 0 or the weight sum vanishes.
cplx dark_polariton_4(cplx eps1, cplx eps3, cplx sigma_bc, cplx sigma_dc, double theta, double Omega2,
                      const LevelScheme& scheme, double N);

/// Omega2 -> 0+ limit of dark_polariton_4:
///   sqrt(2 N hbar omega1 / eps0) [sigma_bc cos(theta) - sigma_dc sin(theta)] sign(d1).
cplx dark_polariton_4_stored(cplx sigma_bc, cplx sigma_dc, double theta, const LevelScheme& scheme, double N);

} // namespace lightstore
