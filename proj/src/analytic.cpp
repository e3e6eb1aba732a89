#include "anyons/analytic.hpp"

#include <numbers>

namespace anyons {

namespace {

const cplx kI(0.0, 1.0);

struct SpinorExpr {
    HoloExpr a, c, d, e;
};

SpinorExpr constant_spinor(const CMat2& u)
{
    return {u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
}

// su11_boost1(z) * u
SpinorExpr boosted_spinor(const CMat2& u)
{
    const HoloExpr ch = (exp(HoloExpr::affine(0.0, 0.5)) + exp(HoloExpr::affine(0.0, -0.5))) * 0.5;
    const HoloExpr sh = (exp(HoloExpr::affine(0.0, 0.5)) - exp(HoloExpr::affine(0.0, -0.5))) * 0.5;
    return {ch * u(0, 0) + sh * u(1, 0), ch * u(0, 1) + sh * u(1, 1), sh * u(0, 0) + ch * u(1, 0),
            sh * u(0, 1) + ch * u(1, 1)};
}

HoloExpr wigner_from_spinor(const SpinorExpr& u, const MomentumExpr& p, const MomentumExpr& q, double m, double s,
                            AnchorArg anchor)
{
    const HoloExpr pp = p.k0 + m;
    const HoloExpr pi = p.k1 + kI * p.k2;
    const HoloExpr f = (pp * u.a - pi * u.d) * (q.k0 + m) + (pp * u.c - pi * u.e) * (q.k1 - kI * q.k2);
    return pow(f, 2.0 * s, std::move(anchor)) * pow(2.0 * m * pp, -s) * pow(2.0 * m * (q.k0 + m), -s);
}

MomentumExpr constant_momentum(const Eigen::Vector3d& p)
{
    return {p(0), p(1), p(2)};
}

}  // namespace

MomentumExpr continued_momentum(const Eigen::Vector3d& p, const Mat3& pre, const Mat3& post)
{
    return {HoloExpr::momentum(0, p, pre, post), HoloExpr::momentum(1, p, pre, post),
            HoloExpr::momentum(2, p, pre, post)};
}

HoloExpr boosted_wigner_factor(const CoverElement& g, const MomentumPoint& p, double s)
{
    const Mat3 lam_inv = project(g).inverse();
    const MomentumExpr q = continued_momentum(p.vec(), lam_inv);
    AnchorArg anchor = [g, p](double t) { return 0.5 * wigner_angle(compose(lift_boost1(t), g), p).value; };
    return wigner_from_spinor(boosted_spinor(su11_matrix(g)), constant_momentum(p.vec()), q, p.m(), s,
                              std::move(anchor));
}

HoloExpr wigner_factor_on_orbit(const CoverElement& g, const MomentumPoint& p, double s)
{
    const MomentumExpr k = continued_momentum(p.vec());
    const MomentumExpr q = continued_momentum(p.vec(), project(g).inverse());
    const double m = p.m();
    AnchorArg anchor = [g, p, m](double t) {
        const MomentumPoint kt = shell_point(boost1(-t) * p.vec(), m);
        return 0.5 * wigner_angle(g, kt).value;
    };
    return wigner_from_spinor(constant_spinor(su11_matrix(g)), k, q, m, s, std::move(anchor));
}

HoloExpr u_expr(const MomentumExpr& k, UVariant::Kind kind, double s, double m)
{
    switch (kind) {
    case UVariant::Kind::plain: {
        const HoloExpr a = k.k0 - k.k1;
        return pow(a / m, s) * pow(a + m - kI * k.k2, s) * pow(a + m + kI * k.k2, -s);
    }
    case UVariant::Kind::pihalf: {
        const HoloExpr a = k.k0 - k.k2;
        return std::exp(kI * s * (std::numbers::pi / 2)) * pow(a / m, s) * pow(a + m + kI * k.k1, s) *
               pow(a + m - kI * k.k1, -s);
    }
    case UVariant::Kind::l0:
        break;
    }
    throw std::invalid_argument("u_expr supports the plain and pihalf compensators");
}

HoloExpr omega_expr(const CoverElement& g, const MomentumPoint& p, double s)
{
    const MomentumExpr q = continued_momentum(p.vec(), project(g).inverse());
    return boosted_wigner_factor(g, p, s) * u_expr(q, UVariant::Kind::pihalf, s, p.m());
}

HoloExpr cocycle_expr(const CoverElement& g, const MomentumPoint& p, CocycleKind kind, double s)
{
    const MomentumExpr q = continued_momentum(p.vec(), project(g).inverse());
    const UVariant::Kind uk = kind == CocycleKind::c ? UVariant::Kind::plain : UVariant::Kind::pihalf;
    const UVariant variant = kind == CocycleKind::c ? UVariant::plain() : UVariant::pihalf();
    const cplx norm = 1.0 / u_function(p, variant, s);
    return norm * boosted_wigner_factor(g, p, s) * u_expr(q, uk, s, p.m());
}

HoloExpr plane_wave(const CVec3& b, const MomentumExpr& k)
{
    return exp(kI * (b.k0 * k.k0 - b.k1 * k.k1 - b.k2 * k.k2));
}

}  // namespace anyons
