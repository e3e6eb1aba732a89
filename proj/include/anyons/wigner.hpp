// Standard boosts, the lifted Wigner rotation, and the compensated cocycles.
#pragma once

#include "anyons/covergroup.hpp"
#include "anyons/minkowski.hpp"

namespace anyons {

/// Lifted little-group angle in radians, unbounded.
struct WignerAngle {
    double value = 0.0;
};

/// Non-vanishing value of a compensated cocycle.
struct CocycleValue {
    cplx value{1.0, 0.0};
};

/// Pure boost taking (m,0,0) to p: the positive square root of the spinor
/// matrix of p/m, on the zero-rotation sheet.
CoverElement standard_boost(const MomentumPoint& p);

/// Lambda^{-1} p for the projection Lambda of g, back on the shell.
MomentumPoint pull_back(const CoverElement& g, const MomentumPoint& p);

/// -j p = (p0, p1, -p2).
MomentumPoint minus_j(const MomentumPoint& p);

/// Omega(g, p) = 2 * omega(b(p)^{-1} g b(Lambda^{-1} p)), read off in cover
/// coordinates so the lift is exact. Omega(identity, p) = 0.
WignerAngle wigner_angle(const CoverElement& g, const MomentumPoint& p);

/// The little-group element b(p)^{-1} g b(Lambda^{-1} p) itself.
CoverElement little_group_element(const CoverElement& g, const MomentumPoint& p);

/// W11 + i W21 of the projected little-group rotation; equals e^{i Omega}.
cplx little_group_phase(const CoverElement& g, const MomentumPoint& p);

struct UVariant {
    enum class Kind { plain, pihalf, l0 };
    Kind kind = Kind::plain;
    CoverElement g0{};

    static UVariant plain() { return {Kind::plain, {}}; }
    static UVariant pihalf() { return {Kind::pihalf, {}}; }
    static UVariant l0(const CoverElement& g0) { return {Kind::l0, g0}; }
};

/// Compensating function on the mass shell.
///   plain : ((p0-p1)/m * (p0-p1+m-ip2)/(p0-p1+m+ip2))^s, principal branch
///   pihalf: e^{is pi/2} ((p0-p2)/m * (p0-p2+m+ip1)/(p0-p2+m-ip1))^s
///   l0    : e^{is Omega(g0,p)} u(Lambda0^{-1} p)
/// Throws std::domain_error if a base lands on the cut (-inf, 0].
cplx u_function(const MomentumPoint& p, const UVariant& variant, double s);

enum class CocycleKind { c, c_l0 };

/// c(g,p) = u(p)^{-1} e^{is Omega(g,p)} u(Lambda^{-1}p); c_l0 uses u_{L0(g0)}.
CocycleValue cocycle(const CoverElement& g, const MomentumPoint& p, CocycleKind kind, double s,
                     const CoverElement& g0 = lift_rotation(1.5707963267948966));

/// e^{i pi s} conj(c(g, -jp)): the strip boundary value of t -> c(lambda(t) g, p)
/// when g carries the reference direction into the wedge class.
cplx cocycle_boundary_reflected(const CoverElement& g, const MomentumPoint& p, double s);

/// e^{i pi s} c(J g J, p); the same boundary value written with the lifted J.
cplx cocycle_boundary_conjugated(const CoverElement& g, const MomentumPoint& p, double s);

/// e^{i pi s} e^{is Omega(J g g0 J, p)} u(J (Lambda Lambda0)^{-1} J p): boundary
/// value at t = i pi of f(t) = e^{is Omega(lambda(t) g, p)} u_{L0}(Lambda^{-1} Lambda_1(-t) p).
cplx compensated_boundary(const CoverElement& g, const CoverElement& g0, const MomentumPoint& p,
                          double s);

}  // namespace anyons
