// Massive spin-s representation of the Poincare cover on C^n-valued
// wave functions over the mass shell.
//
//     (U(a, g) psi)(p) = e^{is Omega(g, p)} e^{i a.p} psi(Lambda^{-1} p)
#pragma once

#include <functional>
#include <stdexcept>

#include <Eigen/Dense>

#include "anyons/covergroup.hpp"
#include "anyons/minkowski.hpp"

namespace anyons {

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RepConfig {
    double m = 1.0;
    double s = 0.0;
    int n = 1;

    /// Throws std::invalid_argument unless m > 0, s finite and n >= 1.
    static RepConfig make(double m, double s, int n);
};

class WaveFunction {
public:
    using Evaluator = std::function<Eigen::VectorXcd(const MomentumPoint&)>;

    WaveFunction(const RepConfig& config, Evaluator f) : config_(config), f_(std::move(f)) {}

    /// exp(-|p - center|^2 / sigma^2) * poly(p) * v with
    /// poly = c0 + c1 p1 + c2 p2 + c3 p1 p2.
    static WaveFunction gaussian(const RepConfig& config, const Eigen::Vector2d& center, double sigma,
                                 const Eigen::Vector4cd& poly, const Eigen::VectorXcd& v);

    Eigen::VectorXcd operator()(const MomentumPoint& p) const { return f_(p); }
    const RepConfig& config() const { return config_; }

private:
    RepConfig config_;
    Evaluator f_;
};

WaveFunction act(const PoincareElement& g, const WaveFunction& psi);

/// Square box of spatial momenta with composite 8-point Gauss-Legendre panels.
struct QuadratureGrid {
    Eigen::Vector2d center = Eigen::Vector2d::Zero();
    double half_width = 8.0;
    int panels = 32;
};

/// Integral of sum_alpha conj(phi) psi over d^2p / (2 p0). Throws
/// QuadratureError if either function is not negligible on the box edge.
cplx inner_product(const WaveFunction& phi, const WaveFunction& psi, const QuadratureGrid& grid = {});

enum class Generator { L0, L1, L2, P0, P1, P2 };

/// L = -i d/dt U(subgroup(t)) psi at t = 0 by central differences with one
/// Richardson step (h and h/2); P^mu multiplies by p^mu. L0 is the rotation,
/// L1 the x1 boost, L2 the x2 boost.
Eigen::VectorXcd generator(const WaveFunction& psi, Generator kind, const MomentumPoint& p, double h = 1e-2);

/// P^mu psi as a wave function.
WaveFunction multiply_momentum(const WaveFunction& psi, int mu);

/// W psi = J_mu P^mu psi with J = (-L0, L2, -L1): the multiplication is
/// applied first. Expected value -m s psi.
Eigen::VectorXcd pauli_lubanski(const WaveFunction& psi, const MomentumPoint& p, double h = 1e-2);

/// The other operator ordering, P^mu J_mu psi, for comparison.
Eigen::VectorXcd pauli_lubanski_reversed(const WaveFunction& psi, const MomentumPoint& p, double h = 1e-2);

}  // namespace anyons
