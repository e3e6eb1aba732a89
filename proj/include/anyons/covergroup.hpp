// Universal covering group of the proper orthochronous Lorentz group in
// 2+1 dimensions.
//
// Elements are stored in Bargmann coordinates (gamma, omega) of the covering
// of SU(1,1):
//
//     alpha = e^{i omega} / sqrt(1 - |gamma|^2),   beta = gamma * alpha,
//     U = [[alpha, beta], [conj(beta), conj(alpha)]],
//
// with omega an unbounded real.  The product law lifts arg(alpha) exactly:
//
//     omega_ab = omega_a + omega_b + Arg(1 + gamma_a conj(gamma_b) e^{-2i omega_b}),
//
// where the principal Arg is continuous because the argument has positive
// real part.  A rotation by phi lifts to (0, phi/2); a 2 pi rotation is the
// deck generator (0, pi).
//
// SU(1,1) is mapped to SL(2,R) by conjugation with the eigenvector matrix of
// the rotation generator, and SL(2,R) acts on symmetric matrices
// X = [[x0+x1, x2], [x2, x0-x1]] by X -> A X A^T, which gives the covering map.
#pragma once

#include <complex>

#include <Eigen/Dense>

#include "anyons/minkowski.hpp"

namespace anyons {

using Mat2 = Eigen::Matrix2d;
using CMat2 = Eigen::Matrix2cd;

struct CoverElement {
    cplx gamma{};
    double omega = 0.0;

    static CoverElement identity() { return {}; }
};

CoverElement make_cover_element(cplx gamma, double omega);

CoverElement compose(const CoverElement& a, const CoverElement& b);
CoverElement inverse(const CoverElement& g);

/// SU(1,1) entries (alpha, beta) of g.
std::pair<cplx, cplx> su11_entries(const CoverElement& g);
CMat2 su11_matrix(const CoverElement& g);
Mat2 sl2_matrix(const CoverElement& g);

/// Element over a positive-definite symmetric SL(2,R) matrix, on the
/// zero-rotation sheet (omega = 0).
CoverElement from_symmetric_sl2(const Mat2& a);

/// The covering map to SO(2,1)^+.
Mat3 project(const CoverElement& g);

Vec3 act_on_vector(const CoverElement& g, const Vec3& x);

enum class OneParameter { rotation, boost1, boost_dir };

/// Lift of a one-parameter subgroup through the identity. For boost_dir the
/// boost direction angle is `direction` (boost_dir with direction 0 is boost1).
CoverElement lift_one_parameter(OneParameter kind, double param, double direction = 0.0);

CoverElement lift_rotation(double phi);
CoverElement lift_boost1(double t);
CoverElement lift_boost_dir(double direction, double t);

/// SU(1,1) matrix of the x^1 boost lift at complex rapidity (entire in z).
CMat2 su11_boost1(cplx z);

/// Lift of X -> J X J. Fixes boosts along x^1, reverses rotations.
CoverElement j_conjugate(const CoverElement& g);

/// Distance in cover coordinates: max(|d gamma|, |d omega|).
double cover_distance(const CoverElement& a, const CoverElement& b);

struct PoincareElement {
    Vec3 translation;
    CoverElement lorentz;

    static PoincareElement identity() { return {}; }
};

/// (a, L)(a', L') = (a + L a', L L').
PoincareElement compose(const PoincareElement& g, const PoincareElement& h);
PoincareElement inverse(const PoincareElement& g);
Vec3 act_on_point(const PoincareElement& g, const Vec3& x);

}  // namespace anyons
