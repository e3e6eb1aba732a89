#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "anyons/minkowski.hpp"
#include "generators.hpp"

using namespace anyons;
using testgen::pi;

namespace {

CMat3 boost_generator()
{
    CMat3 k = CMat3::Zero();
    k(0, 1) = 1.0;
    k(1, 0) = 1.0;
    return k;
}

}  // namespace

TEST_CASE("shell points are on shell and reject bad input")
{
    const MomentumPoint p = shell_point(0.3, -1.2, 1.7);
    CHECK(p.p0() * p.p0() - p.p1() * p.p1() - p.p2() * p.p2() == doctest::Approx(1.7 * 1.7).epsilon(1e-14));
    CHECK(p.p0() > 0.0);
    CHECK_THROWS_AS(shell_point(0.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(shell_point(0.0, 0.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(shell_point(std::nan(""), 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("metric signature is (+,-,-)")
{
    const Vec3 x{2.0, 1.0, 0.5};
    CHECK(minkowski_product(x, x) == doctest::Approx(4.0 - 1.0 - 0.25));
    const CVec3 z(cplx(1.0, 1.0), 0.0, 0.0);
    CHECK(std::abs(minkowski_product(z, z) - cplx(0.0, 2.0)) < 1e-15);
}

TEST_CASE("real boost matches cosh/sinh")
{
    testgen::forall(1, 200, [](testgen::Gen& g) {
        const double t = g.real(-3.0, 3.0);
        Mat3 ref = Mat3::Identity();
        ref(0, 0) = ref(1, 1) = std::cosh(t);
        ref(0, 1) = ref(1, 0) = std::sinh(t);
        CHECK((boost1(t) - ref).cwiseAbs().maxCoeff() < 1e-13 * std::cosh(t));
        CHECK(lorentz_residual(boost1(t)) < 1e-12 * std::cosh(t) * std::cosh(t));
    });
}

TEST_CASE("complex boost is the exponential of its generator")
{
    const CMat3 k = boost_generator();
    testgen::forall(2, 200, [&](testgen::Gen& g) {
        const cplx z(g.real(-2.0, 2.0), g.real(0.0, pi));
        const CMat3 ref = (z * k).exp();
        CHECK((boost1(z) - ref).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(lorentz_residual(boost1(z)) < 1e-12);
    });
}

TEST_CASE("boost at i pi is J and boosts compose additively")
{
    CHECK((boost1(cplx(0.0, pi)) - j_matrix().cast<cplx>()).cwiseAbs().maxCoeff() < 1e-14);
    testgen::forall(3, 100, [](testgen::Gen& g) {
        const cplx a(g.real(-1.0, 1.0), g.real(0.0, 1.5));
        const cplx b(g.real(-1.0, 1.0), g.real(0.0, 1.5));
        CHECK((boost1(a + b) - boost1(a) * boost1(b)).cwiseAbs().maxCoeff() < 1e-12);
    });
}

TEST_CASE("rotations")
{
    CHECK((rotation(2.0 * pi) - Mat3::Identity()).cwiseAbs().maxCoeff() < 1e-14);
    const Eigen::Vector3d e1(0.0, 1.0, 0.0);
    CHECK((rotation(pi / 2) * e1 - Eigen::Vector3d(0.0, 0.0, 1.0)).norm() < 1e-15);
    testgen::forall(4, 100, [](testgen::Gen& g) {
        const double a = g.real(-5.0, 5.0);
        const double b = g.real(-5.0, 5.0);
        CHECK((rotation(a + b) - rotation(a) * rotation(b)).cwiseAbs().maxCoeff() < 1e-13);
    });
}

TEST_CASE("j reflection")
{
    const Vec3 x{1.0, 2.0, 3.0};
    const Vec3 y = j_reflect(x);
    CHECK(y.x0 == -1.0);
    CHECK(y.x1 == -2.0);
    CHECK(y.x2 == 3.0);
}

TEST_CASE("projection back onto the shell")
{
    const MomentumPoint p = shell_point(0.4, 0.2, 1.1);
    const MomentumPoint q = shell_point(boost1(0.7) * p.vec(), 1.1);
    CHECK((q.vec() - boost1(0.7) * p.vec()).norm() < 1e-13);
}
