// Holomorphic expressions for the Wigner factor, the compensating functions
// and the cocycles, in the boost parameter z.
//
// The Wigner phase comes from the spinor entries: with U(z) the SU(1,1)
// matrix of lambda(z) g and q = Lambda^{-1} Lambda_1(-z) p,
//
//     e^{is Omega} = F^{2s} (2m(p0+m))^{-s} (2m(q0+m))^{-s},
//     F = ((p0+m) a - (p1+ip2) d)(q0+m) + ((p0+m) c - (p1+ip2) e)(q1 - iq2),
//
// where [[a, c], [d, e]] = U(z).  The ledger of F starts at Omega / 2 on the
// real axis, which fixes the branch.
#pragma once

#include "anyons/covergroup.hpp"
#include "anyons/holo.hpp"
#include "anyons/wigner.hpp"

namespace anyons {

struct MomentumExpr {
    HoloExpr k0;
    HoloExpr k1;
    HoloExpr k2;
};

/// pre * Lambda_1(-z) * post * p
MomentumExpr continued_momentum(const Eigen::Vector3d& p, const Mat3& pre = Mat3::Identity(),
                                const Mat3& post = Mat3::Identity());

/// z -> e^{is Omega(lambda(z) g, p)}
HoloExpr boosted_wigner_factor(const CoverElement& g, const MomentumPoint& p, double s);

/// z -> e^{is Omega(g, Lambda_1(-z) p)} for a fixed g.
HoloExpr wigner_factor_on_orbit(const CoverElement& g, const MomentumPoint& p, double s);

/// Compensating function of a continued momentum, plain or pihalf, with
/// every power on its own ledger.
HoloExpr u_expr(const MomentumExpr& k, UVariant::Kind kind, double s, double m);

/// omega(lambda(z) g, p) = e^{is Omega(lambda(z) g, p)} u_pihalf(Lambda^{-1} Lambda_1(-z) p)
HoloExpr omega_expr(const CoverElement& g, const MomentumPoint& p, double s);

/// c(lambda(z) g, p) (plain compensator) or c_L0 with g0 = r(pi/2).
HoloExpr cocycle_expr(const CoverElement& g, const MomentumPoint& p, CocycleKind kind, double s);

/// exp(i b . k) for a complex translation b.
HoloExpr plane_wave(const CVec3& b, const MomentumExpr& k);

}  // namespace anyons
