// Branch-tracked analytic continuation in the strip R + i[0, pi].
//
// A HoloExpr is an immutable expression tree built from constants, affine
// functions of z, components of continued momenta pre * Lambda_1(-z) * post * p,
// arithmetic, exp and real powers.  Every power node owns a ledger holding
// the continuous argument of its base; a continuation step is accepted only
// if no ledger moves by more than the phase bound, otherwise the step is
// halved.
#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "anyons/conegeom.hpp"
#include "anyons/minkowski.hpp"

namespace anyons {

using CMatX = Eigen::MatrixXcd;

enum class HoloErrorKind {
    power_base_vanishes,
    refinement_limit,
    not_in_gamma0,
    singular_determinant,
    invalid_path,
};

class HoloError : public std::runtime_error {
public:
    HoloError(HoloErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    HoloErrorKind kind() const { return kind_; }

private:
    HoloErrorKind kind_;
};

/// Ledger start for a power node as a function of the real anchor point.
/// Must agree with the base's argument modulo 2 pi.
using AnchorArg = std::function<double(double)>;

class HoloExpr {
public:
    struct Node;

    HoloExpr(cplx c = 0.0);
    HoloExpr(double c) : HoloExpr(cplx(c, 0.0)) {}

    static HoloExpr constant(cplx c) { return HoloExpr(c); }
    /// a + b z
    static HoloExpr affine(cplx a, cplx b);
    static HoloExpr z() { return affine(0.0, 1.0); }
    /// (pre * Lambda_1(-z) * post * anchor)_mu
    static HoloExpr momentum(int mu, const Eigen::Vector3d& anchor, const Mat3& pre = Mat3::Identity(),
                             const Mat3& post = Mat3::Identity());

    friend HoloExpr operator+(const HoloExpr& a, const HoloExpr& b);
    friend HoloExpr operator-(const HoloExpr& a, const HoloExpr& b);
    friend HoloExpr operator*(const HoloExpr& a, const HoloExpr& b);
    friend HoloExpr operator/(const HoloExpr& a, const HoloExpr& b);
    HoloExpr operator-() const;

    friend HoloExpr exp(const HoloExpr& a);
    /// base^s. Without an anchor the ledger starts on the principal branch.
    friend HoloExpr pow(const HoloExpr& base, double s, AnchorArg anchor);
    friend HoloExpr pow(const HoloExpr& base, double s);

    /// Direct evaluation with principal branches everywhere.
    cplx evaluate_principal(cplx z) const;

    const std::shared_ptr<const Node>& node() const { return node_; }

private:
    explicit HoloExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Polyline in the closed strip.
class StripPath {
public:
    /// Throws HoloError(invalid_path) for fewer than two vertices or a vertex
    /// outside R + i[0, pi].
    static StripPath polyline(std::vector<cplx> vertices);
    static StripPath straight(cplx from, cplx to);
    /// t -> t + i height
    static StripPath vertical(double t, double height = 3.141592653589793);
    /// Closed rectangle [x0, x1] + i[y0, y1], positively oriented, starting at x0 + i y0.
    static StripPath rectangle(double x0, double x1, double y0, double y1);

    const std::vector<cplx>& vertices() const { return vertices_; }
    cplx start() const { return vertices_.front(); }
    cplx end() const { return vertices_.back(); }
    bool closed() const;
    double length() const;
    /// Same shape translated along the real axis.
    StripPath shifted(double dt) const;

private:
    friend StripPath lateral_offset_path(const StripPath& path, double offset);
    explicit StripPath(std::vector<cplx> v) : vertices_(std::move(v)) {}
    std::vector<cplx> vertices_;
};

/// Path displaced sideways by `offset` (left of the direction of travel for
/// positive offset), keeping both end points.
StripPath lateral_offset_path(const StripPath& path, double offset);

struct ContinuationOptions {
    double max_step = 0.02;
    double min_step = 1e-10;
    double max_phase_step = 1.5707963267948966;
    double vanish_tol = 1e-12;
    bool track_branches = true;  // false: principal branch at every sample
    double lateral_offset = 1e-3;
    double homotopy_tol = 1e-9;
};

/// Stateful continuation of one expression from a real anchor.
class Continuator {
public:
    Continuator(const HoloExpr& expr, double anchor, const ContinuationOptions& options = {});
    ~Continuator();
    Continuator(Continuator&&) noexcept;
    Continuator& operator=(Continuator&&) noexcept;

    /// Continues along the straight segment from the current position.
    cplx advance_to(cplx z);
    cplx value() const;
    cplx position() const;
    /// Number of accepted steps so far.
    long steps() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Value at path.end() of the continuation from path.start(), which must be
/// real. A vanishing power base triggers a retry along both laterally offset
/// paths; their values must agree to homotopy_tol.
cplx continue_along(const HoloExpr& expr, const StripPath& path, const ContinuationOptions& options = {});

struct MoreraResult {
    double residual = 0.0;   // |closed contour integral|
    double monodromy = 0.0;  // |value after one loop - value at the start|
};

/// Closed contour integral of the continued expression, reached by a vertical
/// path from the real point below the contour's first vertex. Composite
/// 8-point Gauss-Legendre panels of length <= panel.
MoreraResult morera(const HoloExpr& expr, const StripPath& contour, const ContinuationOptions& options = {},
                    double panel = 0.05);
double morera_residual(const HoloExpr& expr, const StripPath& contour, const ContinuationOptions& options = {});

/// Continued value at anchor_t + i pi along the vertical path.
cplx boundary_at_ipi(const HoloExpr& expr, double anchor_t, const ContinuationOptions& options = {});

/// Composite 8-point Gauss-Legendre integral of a function along a segment.
cplx gauss_legendre_segment(const std::function<cplx(cplx)>& f, cplx a, cplx b, int panels);

/// Matrix-valued expression: sum of scalar expressions times constant matrices.
class HoloMatrix {
public:
    struct Term {
        HoloExpr scalar;
        CMatX coeff;
    };

    HoloMatrix() = default;
    HoloMatrix(const HoloExpr& scalar, const CMatX& coeff) { terms_.push_back({scalar, coeff}); }

    HoloMatrix& add(const HoloExpr& scalar, const CMatX& coeff);
    const std::vector<Term>& terms() const { return terms_; }
    Eigen::Index rows() const;
    Eigen::Index cols() const;

private:
    std::vector<Term> terms_;
};

class MatrixContinuator {
public:
    MatrixContinuator(const HoloMatrix& m, double anchor, const ContinuationOptions& options = {});
    CMatX advance_to(cplx z);
    CMatX value() const;

private:
    std::vector<Continuator> parts_;
    std::vector<CMatX> coeffs_;
};

CMatX continue_along(const HoloMatrix& m, const StripPath& path, const ContinuationOptions& options = {});

/// Open dual (C_R2 - C_R1)* of a salient difference cone, as an interval of
/// spatial angles, together with the mass of the shell.
struct GammaRegion {
    double m = 1.0;
    double lo = 0.0;
    double hi = 0.0;

    /// Throws ConeGeometryError if C_R2 - C_R1 is not salient.
    static GammaRegion from_cones(const SpatialSector& c1, const SpatialSector& c2, double m);
};

bool gamma_contains(const CVec3& k, const GammaRegion& region);

struct Gamma0Decomposition {
    double r = 0.0;
    double theta = 0.0;
    MomentumPoint q;
};

/// k = R(r) Lambda_1(i theta) R(r)^{-1} q with theta in (0, pi), q on H_m^+.
/// Throws HoloError(not_in_gamma0) when no such form exists.
Gamma0Decomposition gamma0_decompose(const CVec3& k, double m);
CVec3 gamma0_compose(double r, double theta, const MomentumPoint& q);

struct OdeOptions {
    double fd_delta = 1e-3;
    double max_step = 0.02;
    double norm_step = 0.02;  // step * |h^{-1} h_hat| bound
    double det_tol = 1e-12;
    double detour_shift = 0.1;
    bool allow_detour = true;
    ContinuationOptions continuation{};
};

/// h(t0) is the matrix expression z -> f2(z) f1(z + t0), for real t0.
using HoloFamily = std::function<HoloMatrix(double t0)>;

/// Continuation of f1 along `path` by RK4 integration of
/// f1' = f1 h^{-1} h_hat, h_hat = d/dt0 h(t0)|_0 by a fourth-order stencil.
/// f1_real gives f1 on the real axis. On a singular h the path is shifted by
/// detour_shift and f1(z) = f1(z + t0) h(z + t0)^{-1} h_{-t0}(z + t0) is used.
CMatX ode_continue(const HoloFamily& h, const std::function<CMatX(double)>& f1_real, const StripPath& path,
                   const OdeOptions& options = {});

}  // namespace anyons
