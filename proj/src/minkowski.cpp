#include "anyons/minkowski.hpp"

#include <cmath>
#include <stdexcept>

namespace anyons {

double MomentumPoint::p0() const
{
    return std::sqrt(p1_ * p1_ + p2_ * p2_ + m_ * m_);
}

MomentumPoint shell_point(double p1, double p2, double m)
{
    if (!(m > 0.0) || !std::isfinite(m))
        throw std::invalid_argument("shell_point: mass must be strictly positive");
    if (!std::isfinite(p1) || !std::isfinite(p2))
        throw std::invalid_argument("shell_point: non-finite momentum");
    return MomentumPoint(p1, p2, m);
}

MomentumPoint shell_point(const Eigen::Vector3d& v, double m)
{
    return shell_point(v(1), v(2), m);
}

const Mat3& metric()
{
    static const Mat3 g = Eigen::Vector3d(1.0, -1.0, -1.0).asDiagonal();
    return g;
}

cplx minkowski_product(const CVec3& x, const CVec3& y)
{
    return x.k0 * y.k0 - x.k1 * y.k1 - x.k2 * y.k2;
}

double minkowski_product(const Vec3& x, const Vec3& y)
{
    return x.x0 * y.x0 - x.x1 * y.x1 - x.x2 * y.x2;
}

Mat3 boost1(double t)
{
    const double c = std::cosh(t);
    const double s = std::sinh(t);
    Mat3 b;
    b << c, s, 0.0,
         s, c, 0.0,
         0.0, 0.0, 1.0;
    return b;
}

CMat3 boost1(cplx z)
{
    const double theta = z.imag();
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    CMat3 jt = CMat3::Zero();
    jt(0, 0) = c;
    jt(1, 1) = c;
    jt(2, 2) = 1.0;
    CMat3 sigma = CMat3::Zero();
    sigma(0, 1) = 1.0;
    sigma(1, 0) = 1.0;
    const cplx i(0.0, 1.0);
    return (jt + i * sn * sigma) * boost1(z.real()).cast<cplx>();
}

Mat3 rotation(double phi)
{
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    Mat3 r;
    r << 1.0, 0.0, 0.0,
         0.0, c, -s,
         0.0, s, c;
    return r;
}

const Mat3& j_matrix()
{
    static const Mat3 j = Eigen::Vector3d(-1.0, -1.0, 1.0).asDiagonal();
    return j;
}

CVec3 j_reflect(const CVec3& x)
{
    return {-x.k0, -x.k1, x.k2};
}

Vec3 j_reflect(const Vec3& x)
{
    return {-x.x0, -x.x1, x.x2};
}

double lorentz_residual(const CMat3& m)
{
    const CMat3 g = metric().cast<cplx>();
    return (m.transpose() * g * m - g).cwiseAbs().maxCoeff();
}

double lorentz_residual(const Mat3& m)
{
    return (m.transpose() * metric() * m - metric()).cwiseAbs().maxCoeff();
}

}  // namespace anyons
