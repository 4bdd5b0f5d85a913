#include "lightstore/field.hpp"
#include "lightstore/scenarios.hpp"
#include "lightstore/units.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace lightstore;
using doctest::Approx;

namespace {

MediumState uniform_medium(std::size_t n, double L, const DensityMatrix& sigma)
{
    MediumState m;
    m.z.resize(n);
    for (std::size_t i = 0; i < n; ++i) m.z[i] = L * static_cast<double>(i) / static_cast<double>(n - 1);
    m.sigma.assign(n, sigma);
    m.eps1.assign(n, cplx{});
    m.eps3.assign(n, cplx{});
    return m;
}

// sigma_ba(z) = s(z) along a medium of n nodes
MediumState profiled_medium(std::size_t n, double L, cplx (*profile)(double))
{
    MediumState m = uniform_medium(n, L, DensityMatrix::pure(b));
    for (std::size_t i = 0; i < n; ++i) {
        m.sigma[i](b, a) = profile(m.z[i] / L);
        m.sigma[i](a, b) = std::conj(profile(m.z[i] / L));
    }
    return m;
}

cplx bump(double x)
{
    return cplx(std::sin(3.0 * x) * std::exp(-x), 0.5 * std::cos(5.0 * x)) * 1e-3;
}

} // namespace

TEST_SUITE("field") {

TEST_CASE("coupling constants")
{
    const auto cfg = default_config(Variant::CaseB);
    CHECK(coupling_constant(cfg.scheme, 0.0, 1) == 0.0);
    CHECK(coupling_constant(cfg.scheme, 2 * cfg.N, 1) == Approx(2 * coupling_constant(cfg.scheme, cfg.N, 1)));
    CHECK(coupling_constant(cfg.scheme, cfg.N, 1) == Approx(5.92085885135789e-15).epsilon(1e-12));
    CHECK(coupling_constant(cfg.scheme, cfg.N, 3) ==
          Approx(3e-13 * 2.15223115597459 * (0.2 - 1e-7 - 0.1) * 4 * std::numbers::pi / units::c).epsilon(1e-12));
    CHECK_THROWS_AS(coupling_constant(cfg.scheme, cfg.N, 2), std::invalid_argument);
    CHECK_THROWS_AS(coupling_constant(default_config(Variant::CaseA).scheme, 3e-13, 3), std::invalid_argument);
}

TEST_CASE("transparent medium passes the boundary value")
{
    const auto s = default_config(Variant::CaseB).scheme;
    MediumState m = uniform_medium(50, 1e6, DensityMatrix::ground(0.3));
    propagate_window(m, cplx(2e-10, 1e-11), cplx(-3e-11, 0.0), s, 3e-13);
    for (std::size_t i = 0; i < m.size(); ++i) {
        CHECK(m.eps1[i] == cplx(2e-10, 1e-11));
        CHECK(m.eps3[i] == cplx(-3e-11, 0.0));
    }
    // case a carries no channel 3
    MediumState ma = uniform_medium(10, 1e6, DensityMatrix::pure(b));
    propagate_window(ma, cplx(1.0), cplx(1.0), default_config(Variant::CaseA).scheme, 3e-13);
    CHECK(ma.eps3.back() == cplx{});
}

TEST_CASE("constant polarization gives linear growth")
{
    const auto s = default_config(Variant::CaseA).scheme;
    const double L = 2.5e6;
    const double N = 3e-13;
    const cplx sba(2e-4, -1e-4);
    MediumState m = profiled_medium(37, L, [](double) { return cplx(2e-4, -1e-4); });
    propagate_window(m, cplx{}, cplx{}, s, N);
    const cplx expected = -cplx(0.0, 1.0) * coupling_constant(s, N, 1) * sba * L;
    CHECK(std::abs(m.eps1.back() - expected) < 1e-12 * std::abs(expected));
    CHECK(std::abs(m.eps1[18] - 0.5 * expected) < 1e-12 * std::abs(expected));
}

TEST_CASE("second-order convergence in z")
{
    const auto s = default_config(Variant::CaseA).scheme;
    const double L = 1e6;
    MediumState ref = profiled_medium(8193, L, bump);
    propagate_window(ref, cplx{}, cplx{}, s, 3e-13);

    double previous = 0.0;
    for (std::size_t n : {17, 33, 65}) {
        MediumState m = profiled_medium(n, L, bump);
        propagate_window(m, cplx{}, cplx{}, s, 3e-13);
        const double err = std::abs(m.eps1.back() - ref.eps1.back());
        if (previous > 0.0) CHECK(previous / err == Approx(4.0).epsilon(0.05));
        previous = err;
    }
}

TEST_CASE("initial medium")
{
    SimulationConfig cfg = storage_config(Variant::CaseB, Scale::Desk);
    cfg.prepared_theta = std::numbers::pi / 2;
    const MediumState m = MediumState::initial(cfg);
    CHECK(m.size() == static_cast<std::size_t>(cfg.nz));
    CHECK(m.z.front() == 0.0);
    CHECK(m.z.back() == cfg.L);
    CHECK(m.sigma[5](d, d).real() == Approx(1.0));
    CHECK(std::abs(m.eps1[0]) == 0.0);
}

TEST_CASE("control fields follow the schedule")
{
    const auto cfg = storage_config(Variant::CaseB, Scale::Desk);
    const LocalFields early = control_fields(cfg.schedule, cfg.scheme, 0.0);
    CHECK(early.Omega2 == Approx(-1.2e-9 * cfg.scheme.d2));
    CHECK(early.ctrl4 == 0.0);
    const double mid = 0.5 * (cfg.schedule.control2.t_off + cfg.schedule.control2.t_on);
    CHECK(std::abs(control_fields(cfg.schedule, cfg.scheme, mid).Omega2) < 1e-6 * std::abs(early.Omega2));
}

TEST_CASE("ground state stays dark without a signal")
{
    SimulationConfig cfg = storage_config(Variant::CaseB, Scale::Desk);
    cfg.schedule.signal.eps10 = 0.0;
    cfg.nz = 21;
    cfg.prepared_theta = 0.7;
    MediumState m = MediumState::initial(cfg);
    const DensityMatrix g = DensityMatrix::ground(0.7);
    AdvanceStats stats;
    for (int i = 0; i < 500; ++i) advance(m, cfg, cfg.dt, &stats);
    for (std::size_t i = 0; i < m.size(); ++i) {
        CHECK((m.sigma[i].matrix() - g.matrix()).cwiseAbs().maxCoeff() < 1e-14);
        CHECK(m.eps1[i] == cplx{});
        CHECK(m.eps3[i] == cplx{});
    }
    CHECK(stats.max_trace_defect < 1e-14);
}

TEST_CASE("advance splits at control-4 edges")
{
    SimulationConfig cfg = storage_config(Variant::CaseB, Scale::Desk);
    cfg.schedule.signal.eps10 = 0.0;
    cfg.nz = 3;
    const double U = cfg.scheme.U;
    cfg.schedule.control4 = Control4{U, 0.3, 0.3 + 1e9};
    MediumState m = MediumState::initial(cfg);
    // two coarse steps that straddle both edges of the window
    m.t_prime = 0.0;
    SimulationConfig quiet = cfg;
    quiet.schedule.control2.eps2_max = 0.0;
    advance(m, quiet, 0.7e9, nullptr);
    advance(m, quiet, 0.7e9, nullptr);
    const double area = pulse_area(U, 0.3, 0.3 + 1e9, cfg.scheme);
    CHECK(m.sigma[1](d, d).real() == Approx(std::sin(area) * std::sin(area)).epsilon(1e-8));
}

}
