#pragma once

#include "lightstore/pulses.hpp"

#include <Eigen/Dense>

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

namespace lightstore {

using cplx = std::complex<double>;

enum class Variant { CaseA, CaseB };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view s);

/// Atomic levels. b, c, d are the metastable lower states, a the upper state.
enum Level : int { a = 0, b = 1, c = 2, d = 3 };

/// Energies, dipoles and decay rates of the four-level atom, in atomic units.
///
/// Case a: the Lambda system b-a-c plus a laser coupling c-d (dipole d4).
/// Case b: two signal fields b-a and d-a share the upper level, with an
/// effective coupling U between b and d.
struct LevelScheme {
    double E_a = 0.0, E_b = 0.0, E_c = 0.0, E_d = 0.0;
    double d1 = 0.0, d2 = 0.0, d3 = 0.0, d4 = 0.0;
    double U = 0.0;
    double Gamma_ab = 0.0, Gamma_ac = 0.0, Gamma_ad = 0.0;
    Variant variant = Variant::CaseA;

    double omega1() const { return E_a - E_b; }
    double omega2() const { return E_a - E_c; }
    double omega3() const { return E_a - E_d; }
    double omega4() const { return variant == Variant::CaseA ? E_c - E_d : E_d - E_b; }
    double total_decay() const { return Gamma_ab + Gamma_ac + Gamma_ad; }

    void validate() const;
};

/// Slowly varying 4x4 density matrix of a single z-cell, indexed by Level.
class DensityMatrix {
public:
    using Matrix = Eigen::Matrix4cd;

    DensityMatrix() : m_(Matrix::Zero()) {}
    explicit DensityMatrix(const Matrix& m) : m_(m) {}

    static DensityMatrix pure(Level l);
    /// Ground state cos(theta)|b> - sin(theta)|d>.
    static DensityMatrix ground(double theta);

    cplx operator()(Level i, Level j) const { return m_(i, j); }
    cplx& operator()(Level i, Level j) { return m_(i, j); }

    const Matrix& matrix() const { return m_; }
    Matrix& matrix() { return m_; }

    cplx trace() const { return m_.trace(); }
    double trace_defect() const { return std::abs(m_.trace() - 1.0); }
    double hermiticity_defect() const { return (m_ - m_.adjoint()).cwiseAbs().maxCoeff(); }
    double purity() const { return (m_ * m_).trace().real(); }
    bool finite() const { return m_.allFinite(); }
    void hermitize() { m_ = 0.5 * (m_ + m_.adjoint()).eval(); }

private:
    Matrix m_;
};

struct SimulationConfig {
    LevelScheme scheme;
    PulseSchedule schedule;
    double L = 0.0;
    double N = 0.0;
    int nz = 200;
    double dt = 0.0;
    double t_end = 0.0;
    int record_stride = 1;
    /// Case b only: initial ground state cos|b> - sin|d> instead of |b>.
    double prepared_theta = 0.0;
    /// Worker threads for per-cell stepping.
    int threads = 1;

    void validate() const;
};

/// Weisskopf-Wigner dipole in atomic units: gamma = 4 omega^3 d^2 / (3 c^3).
double dipole_from_rate(double gamma, double omega);
double rate_from_dipole(double dipole, double omega);

/// Full-scale parameter set for the variant with a zero-area control-4
/// window. The timeline is store-then-release around a 1e11 a.u. probe.
SimulationConfig default_config(Variant variant);

/// Largest coupling rate (|Omega2|, |U|, |eps4 d4|) over the schedule.
double fastest_rate(const SimulationConfig& cfg);
/// Step that resolves the fastest Rabi period with steps_per_period steps.
double resolved_dt(const SimulationConfig& cfg, int steps_per_period = 200);

/// Plain-text `key = value` configuration; `#` starts a comment.
/// Keys absent from the text keep the value already in `base`.
SimulationConfig parse_config(std::string_view text, SimulationConfig base);
SimulationConfig load_config(const std::string& path, SimulationConfig base);
std::string format_config(const SimulationConfig& cfg);

} // namespace lightstore
