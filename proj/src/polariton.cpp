#include "lightstore/polariton.hpp"

#include "lightstore/units.hpp"

#include <cmath>
#include <stdexcept>

namespace lightstore {

namespace {

double sign(double x)
{
    return x < 0.0 ? -1.0 : 1.0;
}

// d1^2 omega1 cos^2 + d3^2 omega3 sin^2
double channel_weight(double theta, const LevelScheme& s)
{
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);
    return s.d1 * s.d1 * s.omega1() * cs * cs + s.d3 * s.d3 * s.omega3() * sn * sn;
}

} // namespace

cplx dark_polariton_3(cplx eps1, cplx sigma_bc, double Omega2, const LevelScheme& s, double N)
{
    const double w1 = s.omega1();
    const double denom2 = Omega2 * Omega2 + 2.0 * w1 * N * s.d1 * s.d1 / (units::hbar * units::eps0);
    if (!(denom2 > 0.0)) throw std::domain_error("dark_polariton_3: vanishing denominator");
    const cplx num = Omega2 * eps1 + (2.0 * w1 * N * s.d1 / units::eps0) * sigma_bc;
    return num / std::sqrt(denom2) * (-sign(s.d2));
}

RotatedCoherences rotate_coherences(cplx sigma_bc_t1, double theta, double population_b, double population_d)
{
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);
    RotatedCoherences r;
    r.theta = theta;
    r.sigma_bb = population_b * cs * cs + population_d * sn * sn;
    r.sigma_dd = population_b * sn * sn + population_d * cs * cs;
    r.sigma_bd = -(population_b - population_d) * sn * cs;
    r.sigma_bc = sigma_bc_t1 * cs;
    r.sigma_dc = -sigma_bc_t1 * sn;
    return r;
}

MixingMatrix mixing_matrix(double theta, const LevelScheme& s, double N)
{
    if (s.variant != Variant::CaseB) throw std::invalid_argument("mixing_matrix: defined for case b only");
    const double k = 2.0 * N / (units::eps0 * units::hbar);
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);
    MixingMatrix m;
    m.M11 = -k * s.omega1() * s.d1 * s.d1 * cs * cs;
    m.M13 = k * s.omega1() * s.d1 * s.d3 * sn * cs;
    m.M31 = k * s.omega3() * s.d3 * s.d1 * sn * cs;
    m.M33 = -k * s.omega3() * s.d3 * s.d3 * sn * sn;
    return m;
}

double polariton_velocity(double theta, double Omega2, const LevelScheme& s, double N)
{
    if (Omega2 == 0.0) return 0.0;
    const double load = 2.0 * N * channel_weight(theta, s) / (units::hbar * units::eps0 * Omega2 * Omega2);
    return units::c / (1.0 + load);
}

cplx dark_polariton_4(cplx eps1, cplx eps3, cplx sigma_bc, cplx sigma_dc, double theta, double Omega2,
                      const LevelScheme& s, double N)
{
    const double weight = channel_weight(theta, s);
    if (Omega2 == 0.0 || weight == 0.0) throw std::domain_error("dark_polariton_4: vanishing denominator");
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);

    const double norm = std::sqrt(weight) * std::sqrt(s.omega1()) /
                        std::sqrt(1.0 + 2.0 * N * weight / (units::eps0 * units::hbar * Omega2 * Omega2)) *
                        sign(s.d1);
    const cplx photonic = (s.d1 * eps1 * cs - s.d3 * eps3 * sn) / weight;
    const cplx atomic = (2.0 * N / (units::eps0 * Omega2)) * (sigma_bc * cs - sigma_dc * sn);
    return norm * (photonic + atomic);
}

cplx dark_polariton_4_stored(cplx sigma_bc, cplx sigma_dc, double theta, const LevelScheme& s, double N)
{
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);
    return std::sqrt(2.0 * N * units::hbar * s.omega1() / units::eps0) * (sigma_bc * cs - sigma_dc * sn) *
           sign(s.d1);
}

} // namespace lightstore
