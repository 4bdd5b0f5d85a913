#include "lightstore/bloch.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace lightstore;
using doctest::Approx;
using oracle::Mat4;

namespace {

// O(1) couplings so that a handful of steps spans a Rabi period.
LevelScheme toy_scheme(Variant v)
{
    LevelScheme s;
    s.variant = v;
    s.E_a = 1.0;
    s.E_b = 0.0;
    s.E_c = 0.2;
    s.E_d = v == Variant::CaseA ? -0.3 : 0.05;
    s.d1 = 0.8;
    s.d2 = 1.1;
    s.d3 = v == Variant::CaseB ? 0.6 : 0.0;
    s.d4 = -0.7;
    s.Gamma_ab = 0.05;
    s.Gamma_ac = 0.03;
    s.Gamma_ad = v == Variant::CaseB ? 0.02 : 0.0;
    return s;
}

LocalFields toy_fields(Variant v)
{
    LocalFields f;
    f.eps1 = v == Variant::CaseB ? cplx(0.7, -0.4) : cplx(0.9, 0.0);
    f.eps3 = v == Variant::CaseB ? cplx(-0.3, 0.5) : cplx{};
    f.Omega2 = 1.3;
    f.ctrl4 = v == Variant::CaseB ? 0.9 : 1.2;
    return f;
}

double max_diff(const Mat4& x, const Mat4& y)
{
    return (x - y).cwiseAbs().maxCoeff();
}

DensityMatrix evolve(DensityMatrix s, const LocalFields& f, const LevelScheme& sc, double T, int steps)
{
    const double dt = T / steps;
    for (int i = 0; i < steps; ++i) s = step_cell(s, f, sc, dt);
    return s;
}

double rabi_period(const LocalFields& f, const LevelScheme& s)
{
    const double rate = (oracle::hamiltonian(f, s).selfadjointView<Eigen::Lower>().eigenvalues().maxCoeff() -
                         oracle::hamiltonian(f, s).selfadjointView<Eigen::Lower>().eigenvalues().minCoeff());
    return 2.0 * std::numbers::pi / rate;
}

} // namespace

TEST_SUITE("bloch") {

TEST_CASE("dark ground state without fields")
{
    for (Variant v : {Variant::CaseA, Variant::CaseB}) {
        const auto s = toy_scheme(v);
        CHECK(rhs(DensityMatrix::pure(b), LocalFields{}, s).matrix().cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("upper level decays into the lower levels")
{
    const auto s = toy_scheme(Variant::CaseB);
    const DensityMatrix r = rhs(DensityMatrix::pure(a), LocalFields{}, s);
    CHECK(r(a, a).real() == Approx(-(0.05 + 0.03 + 0.02)));
    CHECK(r(b, b).real() == Approx(0.05));
    CHECK(r(c, c).real() == Approx(0.03));
    CHECK(r(d, d).real() == Approx(0.02));
    CHECK(std::abs(r.trace()) < 1e-16);

    const auto sa = toy_scheme(Variant::CaseA);
    const DensityMatrix ra = rhs(DensityMatrix::pure(a), LocalFields{}, sa);
    CHECK(ra(a, a).real() == Approx(-0.08));
    CHECK(ra(d, d).real() == 0.0);
}

TEST_CASE("case b: U alone drives b-d Rabi cycling")
{
    auto s = toy_scheme(Variant::CaseB);
    LocalFields f;
    f.ctrl4 = 0.4;
    for (double T : {1.0, 3.0, 7.5}) {
        const DensityMatrix out = evolve(DensityMatrix::pure(b), f, s, T, 400);
        const double phase = f.ctrl4 * T / 2.0;
        CHECK(out(d, d).real() == Approx(std::sin(phase) * std::sin(phase)).epsilon(1e-10));
        CHECK(out(b, d).real() == Approx(-std::sin(phase) * std::cos(phase)).epsilon(1e-10));
    }
}

TEST_CASE("case a: eps4 alone drives c-d Rabi cycling and leaves b alone")
{
    auto s = toy_scheme(Variant::CaseA);
    LocalFields f;
    f.ctrl4 = 0.5;
    const double T = 6.0;
    const double theta = std::abs(f.ctrl4 * s.d4) * T / 2.0;
    const DensityMatrix out = evolve(DensityMatrix::pure(c), f, s, T, 400);
    CHECK(out(d, d).real() == Approx(std::sin(theta) * std::sin(theta)).epsilon(1e-10));
    CHECK(out(c, c).real() == Approx(std::cos(theta) * std::cos(theta)).epsilon(1e-10));

    CHECK(rhs(DensityMatrix::pure(b), f, s).matrix().cwiseAbs().maxCoeff() == 0.0);

    // a stored b-c coherence is scaled by cos(theta)
    Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
    psi(b) = std::sqrt(0.7);
    psi(c) = std::sqrt(0.3);
    const DensityMatrix start(psi * psi.adjoint());
    for (double area : {0.3, std::numbers::pi / 2, 2.0, std::numbers::pi}) {
        const double t = 2.0 * area / std::abs(f.ctrl4 * s.d4);
        const DensityMatrix end = evolve(start, f, s, t, 400);
        CHECK(std::abs(end(b, c) - start(b, c) * std::cos(area)) < 1e-10);
    }
}

TEST_CASE("zero step is the identity")
{
    std::mt19937_64 rng(1);
    const DensityMatrix s0(oracle::random_density(rng));
    for (Variant v : {Variant::CaseA, Variant::CaseB}) {
        const DensityMatrix s1 = step_cell(s0, toy_fields(v), toy_scheme(v), 0.0);
        CHECK(max_diff(s1.matrix(), s0.matrix()) == 0.0);
    }
}

TEST_CASE("agrees with the commutator form")
{
    std::mt19937_64 rng(7);
    for (Variant v : {Variant::CaseA, Variant::CaseB})
        for (int k = 0; k < 50; ++k) {
            const Mat4 s0 = oracle::random_density(rng);
            const auto sc = toy_scheme(v);
            const auto f = toy_fields(v);
            CHECK(max_diff(rhs(DensityMatrix(s0), f, sc).matrix(), oracle::commutator_rhs(s0, f, sc)) < 1e-14);
        }
}

TEST_CASE("case b matches the component equations for real fields")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const auto sc = toy_scheme(Variant::CaseB);
    for (int k = 0; k < 100; ++k) {
        LocalFields f{cplx(u(rng), 0.0), cplx(u(rng), 0.0), u(rng), u(rng)};
        const Mat4 s0 = oracle::random_density(rng);
        CHECK(max_diff(rhs_case_b(DensityMatrix(s0), f, sc).matrix(), oracle::component_case_b(s0, f, sc)) < 1e-12);
    }
}

TEST_CASE("case a matches the substitution recipe applied to case b")
{
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const auto sc = toy_scheme(Variant::CaseA);
    for (int k = 0; k < 100; ++k) {
        LocalFields f{cplx(u(rng), 0.0), cplx{}, u(rng), u(rng)};
        const Mat4 s0 = oracle::random_density(rng);
        CHECK(max_diff(rhs_case_a(DensityMatrix(s0), f, sc).matrix(), oracle::recipe_case_a(s0, f, sc)) < 1e-12);
    }
}

TEST_CASE("matches the matrix exponential under constant fields")
{
    std::mt19937_64 rng(3);
    for (Variant v : {Variant::CaseA, Variant::CaseB}) {
        const auto sc = toy_scheme(v);
        const auto f = toy_fields(v);
        const Mat4 s0 = oracle::random_density(rng);
        const double T = 3.0 * rabi_period(f, sc);
        const Mat4 exact = oracle::exact_evolution(s0, f, sc, T);
        const DensityMatrix num = evolve(DensityMatrix(s0), f, sc, T, 1000);
        CHECK(max_diff(num.matrix(), exact) < 1e-8);
    }
}

TEST_CASE("fourth-order convergence")
{
    std::mt19937_64 rng(5);
    for (Variant v : {Variant::CaseA, Variant::CaseB}) {
        const auto sc = toy_scheme(v);
        const auto f = toy_fields(v);
        const Mat4 s0 = oracle::random_density(rng);
        const double T = rabi_period(f, sc);
        const Mat4 exact = oracle::exact_evolution(s0, f, sc, T);
        const double e1 = max_diff(evolve(DensityMatrix(s0), f, sc, T, 40).matrix(), exact);
        const double e2 = max_diff(evolve(DensityMatrix(s0), f, sc, T, 80).matrix(), exact);
        CHECK(e1 / e2 == Approx(16.0).epsilon(0.1));
    }
}

TEST_CASE("purity is conserved without decay, trace always")
{
    std::mt19937_64 rng(9);
    for (Variant v : {Variant::CaseA, Variant::CaseB}) {
        auto sc = toy_scheme(v);
        const auto f = toy_fields(v);
        Eigen::Vector4cd psi = Eigen::Vector4cd::Random().normalized();
        const DensityMatrix pure_state(psi * psi.adjoint());

        const DensityMatrix lossy = evolve(pure_state, f, sc, 20.0, 2000);
        CHECK(lossy.trace_defect() < 1e-12);
        CHECK(lossy.purity() < 0.999);

        sc.Gamma_ab = sc.Gamma_ac = sc.Gamma_ad = 0.0;
        const DensityMatrix closed = evolve(pure_state, f, sc, 20.0, 2000);
        CHECK(closed.purity() == Approx(1.0).epsilon(1e-9));
        CHECK(closed.trace_defect() < 1e-12);
    }
}

TEST_CASE("stage fields sample the controls")
{
    const auto sc = toy_scheme(Variant::CaseB);
    LocalFields on;
    on.ctrl4 = 0.4;
    const StageFields same{on, on, on};
    const DensityMatrix x = step_cell(DensityMatrix::pure(b), same, sc, 0.3);
    const DensityMatrix y = step_cell(DensityMatrix::pure(b), on, sc, 0.3);
    CHECK(max_diff(x.matrix(), y.matrix()) == 0.0);

    const StageFields ramp{LocalFields{}, on, on};
    const DensityMatrix z = step_cell(DensityMatrix::pure(b), ramp, sc, 0.3);
    CHECK(z(d, d).real() < y(d, d).real());
}

TEST_CASE("numerical failure is reported")
{
    const auto sc = toy_scheme(Variant::CaseB);
    DensityMatrix bad = DensityMatrix::pure(b);
    bad(a, b) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(step_cell(bad, LocalFields{}, sc, 0.1), NumericalFailure);

    StepReport rep;
    step_cell(DensityMatrix::pure(a), toy_fields(Variant::CaseB), sc, 0.1, &rep);
    CHECK(rep.trace_drift < 1e-14);
    CHECK(rep.hermiticity_defect < 1e-14);
}

}
