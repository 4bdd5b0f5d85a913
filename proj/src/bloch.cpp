#include "lightstore/bloch.hpp"

#include "lightstore/units.hpp"

#include <cmath>

namespace lightstore {

namespace {

constexpr cplx I{0.0, 1.0};

using Mat = DensityMatrix::Matrix;

// Builds d(sigma)/dt = -i R from the upper triangle of R (the right-hand side
// of i dsigma/dt); the lower triangle follows from Hermiticity.
struct Derivative {
    Mat m;

    void set(Level i, Level j, cplx r)
    {
        m(i, j) = -I * r;
        if (i != j) m(j, i) = std::conj(m(i, j));
    }
};

Mat rhs_b(const Mat& s, const LocalFields& f, const LevelScheme& sc)
{
    const cplx x1 = sc.d1 * f.eps1 / (2.0 * units::hbar);
    const cplx x3 = sc.d3 * f.eps3 / (2.0 * units::hbar);
    const cplx x1c = std::conj(x1);
    const cplx x3c = std::conj(x3);
    const double w = 0.5 * f.Omega2;
    const cplx iu = I * f.ctrl4 / (2.0 * units::hbar);
    const double gamma = sc.total_decay();

    Derivative out{Mat::Zero()};
    out.set(a, a, -x1c * s(b, a) + x1 * s(a, b) + w * (s(c, a) - s(a, c)) - x3c * s(d, a) + x3 * s(a, d) -
                      I * gamma * s(a, a));
    out.set(b, b, -x1 * s(a, b) + x1c * s(b, a) + iu * (s(b, d) + s(d, b)) + I * sc.Gamma_ab * s(a, a));
    out.set(c, c, w * (s(a, c) - s(c, a)) + I * sc.Gamma_ac * s(a, a));
    out.set(d, d, -x3 * s(a, d) + x3c * s(d, a) - iu * (s(b, d) + s(d, b)) + I * sc.Gamma_ad * s(a, a));

    out.set(a, b, -x1c * (s(b, b) - s(a, a)) + w * s(c, b) - x3c * s(d, b) + iu * s(a, d) -
                      0.5 * I * gamma * s(a, b));
    out.set(a, c, -x1c * s(b, c) + w * (s(c, c) - s(a, a)) - x3c * s(d, c) - 0.5 * I * gamma * s(a, c));
    out.set(a, d, -x1c * s(b, d) + w * s(c, d) - x3c * (s(d, d) - s(a, a)) - iu * s(a, b) -
                      0.5 * I * gamma * s(a, d));
    out.set(b, c, -x1 * s(a, c) - w * s(b, a) + iu * s(d, c));
    out.set(b, d, -x1 * s(a, d) + x3c * s(b, a) + iu * (s(d, d) - s(b, b)));
    out.set(c, d, w * s(a, d) + x3c * s(c, a) - iu * s(c, b));
    return out.m;
}

Mat rhs_a(const Mat& s, const LocalFields& f, const LevelScheme& sc)
{
    const cplx x1 = sc.d1 * f.eps1 / (2.0 * units::hbar);
    const cplx x1c = std::conj(x1);
    const double w = 0.5 * f.Omega2;
    const double g = -f.ctrl4 * sc.d4 / (2.0 * units::hbar);
    const double gamma = sc.Gamma_ab + sc.Gamma_ac;

    Derivative out{Mat::Zero()};
    out.set(a, a, -x1c * s(b, a) + x1 * s(a, b) + w * (s(c, a) - s(a, c)) - I * gamma * s(a, a));
    out.set(b, b, -x1 * s(a, b) + x1c * s(b, a) + I * sc.Gamma_ab * s(a, a));
    out.set(c, c, w * (s(a, c) - s(c, a)) + g * (s(d, c) - s(c, d)) + I * sc.Gamma_ac * s(a, a));
    out.set(d, d, g * (s(c, d) - s(d, c)));

    out.set(a, b, -x1c * (s(b, b) - s(a, a)) + w * s(c, b) - 0.5 * I * gamma * s(a, b));
    out.set(a, c, -x1c * s(b, c) + w * (s(c, c) - s(a, a)) - g * s(a, d) - 0.5 * I * gamma * s(a, c));
    out.set(a, d, -x1c * s(b, d) + w * s(c, d) - g * s(a, c) - 0.5 * I * gamma * s(a, d));
    out.set(b, c, -x1 * s(a, c) - w * s(b, a) - g * s(b, d));
    out.set(b, d, -x1 * s(a, d) - g * s(b, c));
    out.set(c, d, w * s(a, d) + g * (s(d, d) - s(c, c)));
    return out.m;
}

Mat rhs_raw(const Mat& s, const LocalFields& f, const LevelScheme& sc)
{
    return sc.variant == Variant::CaseA ? rhs_a(s, f, sc) : rhs_b(s, f, sc);
}

} // namespace

DensityMatrix rhs_case_b(const DensityMatrix& sigma, const LocalFields& f, const LevelScheme& scheme)
{
    return DensityMatrix(rhs_b(sigma.matrix(), f, scheme));
}

DensityMatrix rhs_case_a(const DensityMatrix& sigma, const LocalFields& f, const LevelScheme& scheme)
{
    return DensityMatrix(rhs_a(sigma.matrix(), f, scheme));
}

DensityMatrix rhs(const DensityMatrix& sigma, const LocalFields& f, const LevelScheme& scheme)
{
    return DensityMatrix(rhs_raw(sigma.matrix(), f, scheme));
}

DensityMatrix step_cell(const DensityMatrix& sigma, const LocalFields& f, const LevelScheme& scheme,
                        double dt, StepReport* report)
{
    return step_cell(sigma, StageFields{f, f, f}, scheme, dt, report);
}

DensityMatrix step_cell(const DensityMatrix& sigma, const StageFields& f, const LevelScheme& scheme,
                        double dt, StepReport* report)
{
    const Mat& y = sigma.matrix();
    const Mat k1 = rhs_raw(y, f.start, scheme);
    const Mat k2 = rhs_raw(y + 0.5 * dt * k1, f.mid, scheme);
    const Mat k3 = rhs_raw(y + 0.5 * dt * k2, f.mid, scheme);
    const Mat k4 = rhs_raw(y + dt * k3, f.end, scheme);

    DensityMatrix next(y + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
    if (!next.finite()) throw NumericalFailure("step_cell: non-finite density matrix");

    const double drift = std::abs(next.trace() - sigma.trace());
    if (drift > 1e-8)
        throw NumericalFailure("step_cell: trace drift " + std::to_string(drift) + " exceeds 1e-8");
    if (report) {
        report->trace_drift = drift;
        report->hermiticity_defect = next.hermiticity_defect();
    }
    next.hermitize();
    return next;
}

} // namespace lightstore
