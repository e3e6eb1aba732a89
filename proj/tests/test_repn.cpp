#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anyons/repn.hpp"
#include "generators.hpp"

using namespace anyons;
using testgen::pi;

namespace {

const cplx I(0.0, 1.0);

WaveFunction sample_state(const RepConfig& cfg, double sigma = 0.7)
{
    Eigen::VectorXcd v(cfg.n);
    for (int i = 0; i < cfg.n; ++i)
        v(i) = cplx(1.0 + i, 0.5 - i);
    return WaveFunction::gaussian(cfg, {0.2, -0.1}, sigma, Eigen::Vector4cd(1.0, 0.3, cplx(0.0, 0.2), 0.1), v);
}

PoincareElement random_element(testgen::Gen& g)
{
    return {{g.real(-1.0, 1.0), g.real(-1.0, 1.0), g.real(-1.0, 1.0)}, g.cover(0.4)};
}

}  // namespace

TEST_CASE("configuration errors")
{
    CHECK_THROWS_AS(RepConfig::make(0.0, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(RepConfig::make(1.0, std::nan(""), 1), std::invalid_argument);
    CHECK_THROWS_AS(RepConfig::make(1.0, 0.5, 0), std::invalid_argument);
    CHECK(RepConfig::make(1.0, 0.5, 2).n == 2);
}

TEST_CASE("the action is a representation")
{
    const RepConfig cfg = RepConfig::make(1.3, 0.37, 2);
    const WaveFunction psi = sample_state(cfg);
    testgen::forall(50, 100, [&](testgen::Gen& g) {
        const PoincareElement a = random_element(g);
        const PoincareElement b = random_element(g);
        const MomentumPoint p = g.momentum(cfg.m, 1.0);
        const Eigen::VectorXcd lhs = act(compose(a, b), psi)(p);
        const Eigen::VectorXcd rhs = act(a, act(b, psi))(p);
        CHECK((lhs - rhs).norm() < 1e-10 * (1.0 + lhs.norm()));
    });
}

TEST_CASE("the deck element acts by the spin phase")
{
    for (double s : {0.0, 0.25, 0.5, 0.137}) {
        const RepConfig cfg = RepConfig::make(1.0, s, 1);
        const WaveFunction psi = sample_state(cfg);
        const MomentumPoint p = shell_point(0.3, 0.4, 1.0);
        const Eigen::VectorXcd v = act({{}, lift_rotation(2.0 * pi)}, psi)(p);
        CHECK((v - std::exp(2.0 * pi * I * s) * psi(p)).norm() < 1e-12);
    }
}

TEST_CASE("translations multiply by a plane wave")
{
    const RepConfig cfg = RepConfig::make(1.0, 0.3, 1);
    const WaveFunction psi = sample_state(cfg);
    const Vec3 a{0.4, -0.2, 0.7};
    const MomentumPoint p = shell_point(-0.5, 0.2, 1.0);
    const cplx phase = std::exp(I * (a.x0 * p.p0() - a.x1 * p.p1() - a.x2 * p.p2()));
    CHECK((act({a, {}}, psi)(p) - phase * psi(p)).norm() < 1e-13);
}

TEST_CASE("inner product is invariant")
{
    const RepConfig cfg = RepConfig::make(1.0, 0.37, 2);
    const WaveFunction phi = sample_state(cfg, 0.6);
    const WaveFunction psi = WaveFunction::gaussian(cfg, {-0.3, 0.4}, 0.8, Eigen::Vector4cd(1.0, 0.0, 0.5, 0.0),
                                                    Eigen::Vector2cd(0.3, cplx(0.0, 1.0)));
    const QuadratureGrid grid{Eigen::Vector2d::Zero(), 12.0, 48};
    const cplx ref = inner_product(phi, psi, grid);
    CHECK(std::abs(ref - std::conj(inner_product(psi, phi, grid))) < 1e-12);
    CHECK(inner_product(psi, psi, grid).real() > 0.0);
    testgen::forall(51, 5, [&](testgen::Gen& g) {
        const PoincareElement a = random_element(g);
        CHECK(std::abs(inner_product(act(a, phi), act(a, psi), grid) - ref) < 1e-9);
    });
}

TEST_CASE("wide states are rejected by the quadrature")
{
    const RepConfig cfg = RepConfig::make(1.0, 0.0, 1);
    const WaveFunction wide = sample_state(cfg, 5.0);
    CHECK_THROWS_AS(inner_product(wide, wide), QuadratureError);
}

TEST_CASE("momentum generators multiply")
{
    const RepConfig cfg = RepConfig::make(1.2, 0.25, 2);
    const WaveFunction psi = sample_state(cfg);
    const MomentumPoint p = shell_point(0.4, -0.3, 1.2);
    CHECK((generator(psi, Generator::P0, p) - p.p0() * psi(p)).norm() < 1e-12);
    CHECK((generator(psi, Generator::P1, p) - p.p1() * psi(p)).norm() < 1e-12);
    CHECK((generator(psi, Generator::P2, p) - p.p2() * psi(p)).norm() < 1e-12);
    CHECK((multiply_momentum(psi, 2)(p) - p.p2() * psi(p)).norm() < 1e-12);
}

TEST_CASE("rotation generator of a Gaussian")
{
    // L0 psi = s psi - i (grad psi) . (p2, -p1)
    const double s = 0.37;
    const double sigma = 0.7;
    const Eigen::Vector2d c(0.2, -0.1);
    const RepConfig cfg = RepConfig::make(1.0, s, 1);
    const WaveFunction psi = WaveFunction::gaussian(cfg, c, sigma, Eigen::Vector4cd(1.0, 0.0, 0.0, 0.0),
                                                    Eigen::VectorXcd::Ones(1));
    testgen::forall(52, 20, [&](testgen::Gen& g) {
        const MomentumPoint p = g.momentum(1.0, 1.0);
        const double dir = (-2.0 / (sigma * sigma)) * ((p.p1() - c(0)) * p.p2() - (p.p2() - c(1)) * p.p1());
        const Eigen::VectorXcd ref = (s - I * dir) * psi(p);
        CHECK((generator(psi, Generator::L0, p) - ref).norm() < 1e-6);
    });
}

TEST_CASE("Pauli-Lubanski operator is -m s")
{
    for (auto [m, s] : {std::pair{1.0, 0.0}, std::pair{1.0, 0.5}, std::pair{1.7, 0.137}}) {
        const RepConfig cfg = RepConfig::make(m, s, 2);
        const WaveFunction psi = sample_state(cfg);
        for (const MomentumPoint& p : {shell_point(0.0, 0.0, m), shell_point(0.5, -0.3, m), shell_point(-0.8, 0.6, m)}) {
            const Eigen::VectorXcd w = pauli_lubanski(psi, p);
            CHECK((w + m * s * psi(p)).norm() / psi(p).norm() < 1e-6);
            const Eigen::VectorXcd r = pauli_lubanski_reversed(psi, p);
            CHECK((r + m * s * psi(p)).norm() / psi(p).norm() < 1e-6);
        }
    }
}
