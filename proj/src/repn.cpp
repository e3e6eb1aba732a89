#include "anyons/repn.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "anyons/wigner.hpp"

namespace anyons {

namespace {

const cplx kI(0.0, 1.0);

constexpr std::array<double, 8> kNodes{-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                       -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                       0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kWeights{0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                         0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                         0.2223810344533745, 0.1012285362903763};

CoverElement subgroup_element(Generator kind, double t)
{
    switch (kind) {
    case Generator::L0:
        return lift_rotation(t);
    case Generator::L1:
        return lift_boost1(t);
    case Generator::L2:
        return lift_boost_dir(std::numbers::pi / 2, t);
    default:
        break;
    }
    throw std::logic_error("not a Lorentz generator");
}

double edge_max(const WaveFunction& f, const QuadratureGrid& g)
{
    double worst = 0.0;
    const int samples = 16;
    for (int i = 0; i <= samples; ++i) {
        const double u = -g.half_width + 2.0 * g.half_width * i / samples;
        for (const auto& xy : {Eigen::Vector2d(u, -g.half_width), Eigen::Vector2d(u, g.half_width),
                               Eigen::Vector2d(-g.half_width, u), Eigen::Vector2d(g.half_width, u)}) {
            const Eigen::Vector2d q = g.center + xy;
            worst = std::max(worst, f(shell_point(q(0), q(1), f.config().m)).norm());
        }
    }
    return worst;
}

}  // namespace

RepConfig RepConfig::make(double m, double s, int n)
{
    if (!(m > 0.0) || !std::isfinite(m))
        throw std::invalid_argument("mass must be strictly positive");
    if (!std::isfinite(s))
        throw std::invalid_argument("spin must be finite");
    if (n < 1)
        throw std::invalid_argument("multiplicity must be at least 1");
    return {m, s, n};
}

WaveFunction WaveFunction::gaussian(const RepConfig& config, const Eigen::Vector2d& center, double sigma,
                                    const Eigen::Vector4cd& poly, const Eigen::VectorXcd& v)
{
    if (v.size() != config.n)
        throw std::invalid_argument("colour vector length must equal the multiplicity");
    return WaveFunction(config, [center, sigma, poly, v](const MomentumPoint& p) {
        const double dx = p.p1() - center(0);
        const double dy = p.p2() - center(1);
        const double env = std::exp(-(dx * dx + dy * dy) / (sigma * sigma));
        const cplx pol = poly(0) + poly(1) * p.p1() + poly(2) * p.p2() + poly(3) * p.p1() * p.p2();
        return Eigen::VectorXcd(env * pol * v);
    });
}

WaveFunction act(const PoincareElement& g, const WaveFunction& psi)
{
    const double s = psi.config().s;
    return WaveFunction(psi.config(), [g, psi, s](const MomentumPoint& p) {
        const double omega = wigner_angle(g.lorentz, p).value;
        const double ap = minkowski_product(g.translation, p.vec3());
        return Eigen::VectorXcd(std::exp(kI * (s * omega + ap)) * psi(pull_back(g.lorentz, p)));
    });
}

cplx inner_product(const WaveFunction& phi, const WaveFunction& psi, const QuadratureGrid& grid)
{
    const double scale = std::max({1.0, phi(shell_point(grid.center(0), grid.center(1), phi.config().m)).norm(),
                                   psi(shell_point(grid.center(0), grid.center(1), psi.config().m)).norm()});
    if (edge_max(phi, grid) > 1e-12 * scale || edge_max(psi, grid) > 1e-12 * scale)
        throw QuadratureError("wave function is not negligible on the quadrature box edge");

    const double h = 2.0 * grid.half_width / grid.panels;
    cplx sum = 0.0;
    for (int i = 0; i < grid.panels; ++i) {
        for (std::size_t a = 0; a < kNodes.size(); ++a) {
            const double x = grid.center(0) - grid.half_width + h * (i + 0.5 + 0.5 * kNodes[a]);
            for (int j = 0; j < grid.panels; ++j) {
                for (std::size_t b = 0; b < kNodes.size(); ++b) {
                    const double y = grid.center(1) - grid.half_width + h * (j + 0.5 + 0.5 * kNodes[b]);
                    const MomentumPoint p = shell_point(x, y, phi.config().m);
                    const double w = kWeights[a] * kWeights[b] * 0.25 * h * h / (2.0 * p.p0());
                    sum += w * phi(p).dot(psi(p));
                }
            }
        }
    }
    return sum;
}

WaveFunction multiply_momentum(const WaveFunction& psi, int mu)
{
    return WaveFunction(psi.config(),
                        [psi, mu](const MomentumPoint& p) { return Eigen::VectorXcd(p.vec()(mu) * psi(p)); });
}

Eigen::VectorXcd generator(const WaveFunction& psi, Generator kind, const MomentumPoint& p, double h)
{
    switch (kind) {
    case Generator::P0:
        return p.p0() * psi(p);
    case Generator::P1:
        return p.p1() * psi(p);
    case Generator::P2:
        return p.p2() * psi(p);
    default:
        break;
    }
    auto at = [&](double t) { return act(PoincareElement{{}, subgroup_element(kind, t)}, psi)(p); };
    auto central = [&](double step) { return Eigen::VectorXcd((at(step) - at(-step)) / (2.0 * step)); };
    const Eigen::VectorXcd d = (4.0 * central(0.5 * h) - central(h)) / 3.0;
    return -kI * d;
}

Eigen::VectorXcd pauli_lubanski(const WaveFunction& psi, const MomentumPoint& p, double h)
{
    return -generator(multiply_momentum(psi, 0), Generator::L0, p, h) +
           generator(multiply_momentum(psi, 1), Generator::L2, p, h) -
           generator(multiply_momentum(psi, 2), Generator::L1, p, h);
}

Eigen::VectorXcd pauli_lubanski_reversed(const WaveFunction& psi, const MomentumPoint& p, double h)
{
    return -p.p0() * generator(psi, Generator::L0, p, h) + p.p1() * generator(psi, Generator::L2, p, h) -
           p.p2() * generator(psi, Generator::L1, p, h);
}

}  // namespace anyons
