// Constructed single-particle data for the spin-statistics pipeline.
//
// The toy family is
//
//     Psi1(p) = u_pihalf(p) e^{i b1.p} A1
//     Psi2(p) = conj(u_pihalf^{[-s]}(p) e^{i b2.p}) A2
//
// where u^{[-s]} is the compensator with exponent -s.  The dressed functions
// Psi_i(t; p) = e^{is Omega(lambda(t), p)} Psi_i(Lambda_1(-t) p) are continued
// by the holo engine.  The conjugate family is assembled from the closed-form
// strip boundary values, so every relation checked below compares a
// continuation with a closed form or two continuations with each other.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "anyons/covergroup.hpp"
#include "anyons/holo.hpp"
#include "anyons/minkowski.hpp"

namespace anyons {

enum class SpinStatErrorKind { hypothesis_violation, singular_conjugate, non_scalar_mismatch };

class SpinStatError : public std::runtime_error {
public:
    SpinStatError(SpinStatErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    SpinStatErrorKind kind() const { return kind_; }

private:
    SpinStatErrorKind kind_;
};

struct ToyModel {
    double s = 0.0;
    double m = 1.0;
    int n = 1;
    CVec3 b1;
    CVec3 b2;
    CMatX a1;
    CMatX a2;
    CMatX d;
    cplx omega_target{1.0, 0.0};
};

struct ToyOptions {
    std::optional<CMatX> d;   // default: random unitary
    std::optional<CMatX> a1;  // default: 1 + 0.3 * random
    std::optional<CMatX> a2;
};

/// Deterministic in the seed. Throws std::invalid_argument for m <= 0 or n < 1.
ToyModel build_toy_model(double s, double m, int n, std::uint64_t seed, const ToyOptions& options = {});

class WaveMatrixFamily {
public:
    explicit WaveMatrixFamily(ToyModel model, const ContinuationOptions& options = {});

    const ToyModel& model() const { return model_; }
    const ContinuationOptions& options() const { return options_; }

    CMatX psi1(const MomentumPoint& p) const;
    CMatX psi2(const MomentumPoint& p) const;
    CMatX psi1c(const MomentumPoint& p) const;
    CMatX psi2c(const MomentumPoint& p) const;

    /// z -> Psi1(z; p)
    HoloMatrix dressed1(const MomentumPoint& p) const;
    /// z -> Psi2(z; p)^*, the spin -s family
    HoloMatrix dressed2_adjoint(const MomentumPoint& p) const;
    /// z -> conj(Psi2(z; p)), conjugated on the real axis and then continued
    HoloMatrix dressed2_conjugate(const MomentumPoint& p) const;
    /// z -> M(Lambda_1(-z) p) as one product expression
    HoloMatrix two_point(const MomentumPoint& p) const;

    /// Psi_i(t; p) for real t from the definition.
    CMatX dressed_real(int i, double t, const MomentumPoint& p) const;
    /// Psi_i(t; p) for t in the strip: continued along the vertical path from Re t.
    CMatX dressed(int i, cplx t, const MomentumPoint& p) const;

    /// conj(Psi1(t; -jp)) at t = i pi, continued.
    CMatX tomita_hat(const MomentumPoint& p) const;
    /// conj(Psi2)(t; -jp) at t = i pi, continued.
    CMatX tomita_check(const MomentumPoint& p) const;
    /// The same from the closed-form boundary value e^{is pi/2} u(R(pi/2) q).
    CMatX tomita_hat_closed(const MomentumPoint& p) const;
    CMatX tomita_check_closed(const MomentumPoint& p) const;

    /// Psi2(p)^* Psi1(p)
    CMatX two_point_real(const MomentumPoint& p) const;

    /// hat(U(r(pi)) Psi2)(p), continued.
    CMatX rotated_hat(const MomentumPoint& p) const;

    /// The ODE kernel h_{t0}(z) = Psi2(z; p)^* Psi1(z + t0; p).
    HoloMatrix ode_kernel(const MomentumPoint& p, double t0) const;

private:
    ToyModel model_;
    CMatX d_inv_;
    ContinuationOptions options_;
};

/// k x k points within `extent` of the origin, slightly shifted, plus two boosted points.
std::vector<MomentumPoint> momentum_grid(double m, int k = 5, double extent = 0.8);

struct TransformationLawResult {
    double law = 0.0;          // both sides at i pi
    double first_factors = 0.0;  // continued first factors against each other
    double lhs_closed = 0.0;   // continued LHS first factor against its closed form
    double rhs_closed = 0.0;
};

/// Both sides of the transformation law continued to i pi. Throws
/// SpinStatError(hypothesis_violation) unless g r(pi/2) is in the wedge class.
TransformationLawResult verify_transformation_law(const CoverElement& g, const MomentumPoint& p,
                                                  const WaveMatrixFamily& family);

struct DExtraction {
    CMatX mean;
    double residual = 0.0;
};

/// D(p) = hat(Psi1)(p) Psi1c(p)^{-1} over the grid.
DExtraction extract_D(const WaveMatrixFamily& family, const std::vector<MomentumPoint>& grid);

struct RotationPiResult {
    double hat_relation = 0.0;     // hat(Psi2^pi)(p) vs e^{-is pi} check(Psi2)(r(pi) p)
    double check_relation = 0.0;   // check(Psi2)(p) vs e^{2 pi i s} D Psi2c(p)
    double conjugate_side = 0.0;   // D^{-1} hat(Psi2^pi)(p) vs e^{i pi s} Psi2c(r(-pi) p)
    double max() const;
};

RotationPiResult rotation_pi_relation(const WaveMatrixFamily& family, const MomentumPoint& p);

struct PhaseExtraction {
    cplx omega_hat{1.0, 0.0};
    double mismatch = 0.0;         // max_p |X - omega Y| / |Y|
    double dstar_d_min_eig = 0.0;  // of the recovered D
};

/// Least-squares phase between X = hat^* check and Y = Psi1c^* Psi2c.
/// Throws SpinStatError(non_scalar_mismatch) if the mismatch exceeds tol.
PhaseExtraction extract_statistics_phase(const WaveMatrixFamily& family, const std::vector<MomentumPoint>& grid,
                                         double tol = 1e-8);

struct TwoPointResult {
    double boundary = 0.0;      // M(-p) vs omega (Psi1c^* Psi2c)^T
    double routes = 0.0;        // whole product vs (hat^* check)^T
    double untransposed = 0.0;  // negative control without the transpose
};

TwoPointResult two_point_boundary_check(const WaveMatrixFamily& family, const MomentumPoint& p);

struct OdeRouteResult {
    CMatX ode;
    CMatX direct;
    double difference = 0.0;
};

/// Psi1(z; p) by the log-derivative ODE and by direct continuation.
OdeRouteResult ode_route_check(const WaveMatrixFamily& family, const MomentumPoint& p, cplx z,
                               const OdeOptions& options = {});

}  // namespace anyons
