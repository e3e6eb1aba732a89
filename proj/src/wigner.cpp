#include "anyons/wigner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace anyons {

namespace {

const cplx kI(0.0, 1.0);

// principal z^s, refusing the cut
cplx principal_power(cplx base, double s)
{
    if (base.imag() == 0.0 && base.real() <= 0.0)
        throw std::domain_error("u_function: power base on the branch cut");
    return std::exp(s * std::log(base));
}

cplx u_plain(const Eigen::Vector3d& p, double m, double s)
{
    const double a = p(0) - p(1);
    if (!(a > 0.0))
        throw std::domain_error("u_function: p0 - p1 must be positive");
    const cplx base = (a / m) * ((a + m - kI * p(2)) / (a + m + kI * p(2)));
    return principal_power(base, s);
}

cplx u_pihalf(const Eigen::Vector3d& p, double m, double s)
{
    const double a = p(0) - p(2);
    if (!(a > 0.0))
        throw std::domain_error("u_function: p0 - p2 must be positive");
    const cplx base = (a / m) * ((a + m + kI * p(1)) / (a + m - kI * p(1)));
    return std::exp(kI * s * (std::numbers::pi / 2)) * principal_power(base, s);
}

}  // namespace

CoverElement standard_boost(const MomentumPoint& p)
{
    const double m = p.m();
    const double p0 = p.p0();
    Mat2 x;
    x << p0 + p.p1(), p.p2(),
         p.p2(), p0 - p.p1();
    const Mat2 root = (x + m * Mat2::Identity()) / std::sqrt(2.0 * m * (p0 + m));
    return from_symmetric_sl2(root);
}

MomentumPoint pull_back(const CoverElement& g, const MomentumPoint& p)
{
    const Mat3 lam = project(g);
    return shell_point(lam.inverse() * p.vec(), p.m());
}

MomentumPoint minus_j(const MomentumPoint& p)
{
    return shell_point(p.p1(), -p.p2(), p.m());
}

CoverElement little_group_element(const CoverElement& g, const MomentumPoint& p)
{
    const MomentumPoint q = pull_back(g, p);
    return compose(inverse(standard_boost(p)), compose(g, standard_boost(q)));
}

WignerAngle wigner_angle(const CoverElement& g, const MomentumPoint& p)
{
    return {2.0 * little_group_element(g, p).omega};
}

cplx little_group_phase(const CoverElement& g, const MomentumPoint& p)
{
    const Mat3 w = project(little_group_element(g, p));
    return {w(1, 1), w(2, 1)};
}

cplx u_function(const MomentumPoint& p, const UVariant& variant, double s)
{
    switch (variant.kind) {
    case UVariant::Kind::plain:
        return u_plain(p.vec(), p.m(), s);
    case UVariant::Kind::pihalf:
        return u_pihalf(p.vec(), p.m(), s);
    case UVariant::Kind::l0: {
        const double omega = wigner_angle(variant.g0, p).value;
        return std::exp(kI * s * omega) * u_plain(pull_back(variant.g0, p).vec(), p.m(), s);
    }
    }
    throw std::logic_error("unknown u variant");
}

CocycleValue cocycle(const CoverElement& g, const MomentumPoint& p, CocycleKind kind, double s,
                     const CoverElement& g0)
{
    const UVariant variant = kind == CocycleKind::c ? UVariant::plain() : UVariant::l0(g0);
    const cplx phase = std::exp(kI * s * wigner_angle(g, p).value);
    return {phase * u_function(pull_back(g, p), variant, s) / u_function(p, variant, s)};
}

cplx cocycle_boundary_reflected(const CoverElement& g, const MomentumPoint& p, double s)
{
    return std::exp(kI * std::numbers::pi * s) * std::conj(cocycle(g, minus_j(p), CocycleKind::c, s).value);
}

cplx cocycle_boundary_conjugated(const CoverElement& g, const MomentumPoint& p, double s)
{
    return std::exp(kI * std::numbers::pi * s) * cocycle(j_conjugate(g), p, CocycleKind::c, s).value;
}

cplx compensated_boundary(const CoverElement& g, const CoverElement& g0, const MomentumPoint& p,
                          double s)
{
    const CoverElement gg0 = compose(g, g0);
    const double omega = wigner_angle(j_conjugate(gg0), p).value;
    const Mat3& j = j_matrix();
    const Eigen::Vector3d q = j * project(gg0).inverse() * j * p.vec();
    return std::exp(kI * std::numbers::pi * s) * std::exp(kI * s * omega) *
           u_function(shell_point(q, p.m()), UVariant::plain(), s);
}

}  // namespace anyons
