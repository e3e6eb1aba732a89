#include "anyons/covergroup.hpp"

#include <cmath>
#include <stdexcept>

namespace anyons {

namespace {

const cplx kI(0.0, 1.0);

Eigen::Vector3d unpack_symmetric(const Mat2& x)
{
    return {0.5 * (x(0, 0) + x(1, 1)), 0.5 * (x(0, 0) - x(1, 1)), x(0, 1)};
}

Mat2 pack_symmetric(const Eigen::Vector3d& x)
{
    Mat2 m;
    m << x(0) + x(1), x(2),
         x(2), x(0) - x(1);
    return m;
}

}  // namespace

CoverElement make_cover_element(cplx gamma, double omega)
{
    if (!(std::abs(gamma) < 1.0))
        throw std::invalid_argument("cover element requires |gamma| < 1");
    if (!std::isfinite(omega))
        throw std::invalid_argument("cover element requires finite omega");
    return {gamma, omega};
}

std::pair<cplx, cplx> su11_entries(const CoverElement& g)
{
    const double mu = 1.0 / std::sqrt(1.0 - std::norm(g.gamma));
    const cplx alpha = std::polar(mu, g.omega);
    return {alpha, g.gamma * alpha};
}

CMat2 su11_matrix(const CoverElement& g)
{
    const auto [a, b] = su11_entries(g);
    CMat2 u;
    u << a, b,
         std::conj(b), std::conj(a);
    return u;
}

Mat2 sl2_matrix(const CoverElement& g)
{
    const auto [a, b] = su11_entries(g);
    Mat2 m;
    m << a.real() + b.real(), -a.imag() + b.imag(),
         a.imag() + b.imag(), a.real() - b.real();
    return m;
}

CoverElement from_symmetric_sl2(const Mat2& a)
{
    const double alpha = 0.5 * (a(0, 0) + a(1, 1));
    const cplx beta(0.5 * (a(0, 0) - a(1, 1)), 0.5 * (a(1, 0) + a(0, 1)));
    if (!(alpha > 0.0))
        throw std::invalid_argument("from_symmetric_sl2: matrix is not positive");
    return {beta / alpha, 0.0};
}

CoverElement compose(const CoverElement& a, const CoverElement& b)
{
    const cplx twist = 1.0 + a.gamma * std::conj(b.gamma) * std::polar(1.0, -2.0 * b.omega);
    const double omega = a.omega + b.omega + std::arg(twist);

    // gamma_ab = beta_ab / alpha_ab with the common factor alpha_a alpha_b removed.
    const cplx ratio_b = std::conj(b.gamma) * std::polar(1.0, -2.0 * b.omega);  // conj(beta_b)/alpha_b
    const cplx conj_alpha_b_over_alpha_b = std::polar(1.0, -2.0 * b.omega);
    const cplx gamma = (b.gamma + a.gamma * conj_alpha_b_over_alpha_b) / (1.0 + a.gamma * ratio_b);
    return {gamma, omega};
}

CoverElement inverse(const CoverElement& g)
{
    return {-g.gamma * std::polar(1.0, 2.0 * g.omega), -g.omega};
}

Mat3 project(const CoverElement& g)
{
    const Mat2 a = sl2_matrix(g);
    Mat3 out;
    for (int c = 0; c < 3; ++c) {
        const Mat2 x = pack_symmetric(Eigen::Vector3d::Unit(c));
        out.col(c) = unpack_symmetric(a * x * a.transpose());
    }
    return out;
}

Vec3 act_on_vector(const CoverElement& g, const Vec3& x)
{
    return Vec3::from(project(g) * x.vec());
}

CoverElement lift_rotation(double phi)
{
    return {cplx(0.0, 0.0), 0.5 * phi};
}

CoverElement lift_boost1(double t)
{
    return {cplx(std::tanh(0.5 * t), 0.0), 0.0};
}

CoverElement lift_boost_dir(double direction, double t)
{
    return compose(compose(lift_rotation(direction), lift_boost1(t)), lift_rotation(-direction));
}

CoverElement lift_one_parameter(OneParameter kind, double param, double direction)
{
    switch (kind) {
    case OneParameter::rotation:
        return lift_rotation(param);
    case OneParameter::boost1:
        return lift_boost1(param);
    case OneParameter::boost_dir:
        return lift_boost_dir(direction, param);
    }
    throw std::logic_error("unknown one-parameter subgroup");
}

CMat2 su11_boost1(cplx z)
{
    const cplx c = std::cosh(0.5 * z);
    const cplx s = std::sinh(0.5 * z);
    CMat2 u;
    u << c, s,
         s, c;
    return u;
}

CoverElement j_conjugate(const CoverElement& g)
{
    return {std::conj(g.gamma), -g.omega};
}

double cover_distance(const CoverElement& a, const CoverElement& b)
{
    return std::max(std::abs(a.gamma - b.gamma), std::abs(a.omega - b.omega));
}

PoincareElement compose(const PoincareElement& g, const PoincareElement& h)
{
    const Vec3 shifted = act_on_vector(g.lorentz, h.translation);
    return {{g.translation.x0 + shifted.x0, g.translation.x1 + shifted.x1, g.translation.x2 + shifted.x2},
            compose(g.lorentz, h.lorentz)};
}

PoincareElement inverse(const PoincareElement& g)
{
    const CoverElement linv = inverse(g.lorentz);
    const Vec3 a = act_on_vector(linv, g.translation);
    return {{-a.x0, -a.x1, -a.x2}, linv};
}

Vec3 act_on_point(const PoincareElement& g, const Vec3& x)
{
    const Vec3 y = act_on_vector(g.lorentz, x);
    return {y.x0 + g.translation.x0, y.x1 + g.translation.x1, y.x2 + g.translation.x2};
}

}  // namespace anyons
