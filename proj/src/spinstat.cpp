#include "anyons/spinstat.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "anyons/analytic.hpp"
#include "anyons/conegeom.hpp"
#include "anyons/wigner.hpp"

namespace anyons {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

CMatX random_matrix(int n, std::mt19937_64& rng)
{
    std::normal_distribution<double> normal;
    CMatX a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = cplx(normal(rng), normal(rng));
    return a;
}

cplx bdot(const CVec3& b, const Eigen::Vector3d& p)
{
    return b.k0 * p(0) - b.k1 * p(1) - b.k2 * p(2);
}

double max_abs(const CMatX& m)
{
    return m.cwiseAbs().maxCoeff();
}

// keeps grid points off p1 = 0, where single compensator bases vanish
// exactly on the vertical path
const Eigen::Vector2d kGridShift(0.0371, -0.0213);

MomentumPoint rotate(double phi, const MomentumPoint& p)
{
    return shell_point(rotation(phi) * p.vec(), p.m());
}

}  // namespace

ToyModel build_toy_model(double s, double m, int n, std::uint64_t seed, const ToyOptions& options)
{
    if (!(m > 0.0))
        throw std::invalid_argument("mass must be strictly positive");
    if (n < 1)
        throw std::invalid_argument("multiplicity must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(-0.5, 0.5);

    ToyModel t;
    t.s = s;
    t.m = m;
    t.n = n;
    auto tube = [&] {
        return CVec3(cplx(uni(rng), -0.5 + 0.1 * uni(rng)), cplx(uni(rng), -0.15 + 0.1 * uni(rng)),
                     cplx(uni(rng), 0.1 * uni(rng)));
    };
    t.b1 = tube();
    t.b2 = tube();
    t.a1 = options.a1.value_or(CMatX(CMatX::Identity(n, n) + 0.3 * random_matrix(n, rng)));
    t.a2 = options.a2.value_or(CMatX(CMatX::Identity(n, n) + 0.3 * random_matrix(n, rng)));
    if (options.d) {
        t.d = *options.d;
    } else {
        Eigen::HouseholderQR<CMatX> qr(random_matrix(n, rng));
        t.d = qr.householderQ();
    }
    if (t.a1.rows() != n || t.a2.rows() != n || t.d.rows() != n)
        throw std::invalid_argument("matrix sizes must equal the multiplicity");
    if (std::abs(t.d.determinant()) < 1e-12)
        throw std::invalid_argument("D must be invertible");
    t.omega_target = std::exp(2.0 * kPi * kI * s);
    return t;
}

WaveMatrixFamily::WaveMatrixFamily(ToyModel model, const ContinuationOptions& options)
    : model_(std::move(model)), d_inv_(model_.d.inverse()), options_(options)
{
}

CMatX WaveMatrixFamily::psi1(const MomentumPoint& p) const
{
    const cplx u = u_function(p, UVariant::pihalf(), model_.s);
    return u * std::exp(kI * bdot(model_.b1, p.vec())) * model_.a1;
}

CMatX WaveMatrixFamily::psi2(const MomentumPoint& p) const
{
    const cplx u = u_function(p, UVariant::pihalf(), -model_.s);
    return std::conj(u * std::exp(kI * bdot(model_.b2, p.vec()))) * model_.a2;
}

CMatX WaveMatrixFamily::tomita_hat_closed(const MomentumPoint& p) const
{
    const double s = model_.s;
    const MomentumPoint q = rotate(kPi / 2, minus_j(p));
    const cplx boundary = std::exp(kI * s * (kPi / 2)) * u_function(q, UVariant::plain(), s);
    return std::conj(boundary * std::exp(-kI * bdot(model_.b1, p.vec()))) * model_.a1.conjugate();
}

CMatX WaveMatrixFamily::tomita_check_closed(const MomentumPoint& p) const
{
    const double s = model_.s;
    const MomentumPoint q = rotate(kPi / 2, minus_j(p));
    const cplx boundary = std::exp(-kI * s * (kPi / 2)) * u_function(q, UVariant::plain(), -s);
    return boundary * std::exp(-kI * bdot(model_.b2, p.vec())) * model_.a2.conjugate();
}

CMatX WaveMatrixFamily::psi1c(const MomentumPoint& p) const
{
    return d_inv_ * tomita_hat_closed(p);
}

CMatX WaveMatrixFamily::psi2c(const MomentumPoint& p) const
{
    return std::exp(-2.0 * kPi * kI * model_.s) * d_inv_ * tomita_check_closed(p);
}

HoloMatrix WaveMatrixFamily::dressed1(const MomentumPoint& p) const
{
    const MomentumExpr k = continued_momentum(p.vec());
    return {omega_expr(CoverElement::identity(), p, model_.s) * plane_wave(model_.b1, k), model_.a1};
}

HoloMatrix WaveMatrixFamily::dressed2_adjoint(const MomentumPoint& p) const
{
    const MomentumExpr k = continued_momentum(p.vec());
    return {omega_expr(CoverElement::identity(), p, -model_.s) * plane_wave(model_.b2, k), model_.a2.adjoint()};
}

HoloMatrix WaveMatrixFamily::dressed2_conjugate(const MomentumPoint& p) const
{
    const MomentumExpr k = continued_momentum(p.vec());
    return {omega_expr(CoverElement::identity(), p, -model_.s) * plane_wave(model_.b2, k), model_.a2.conjugate()};
}

HoloMatrix WaveMatrixFamily::two_point(const MomentumPoint& p) const
{
    const double s = model_.s;
    const MomentumExpr k = continued_momentum(p.vec());
    const CVec3 b(model_.b1.k0 + model_.b2.k0, model_.b1.k1 + model_.b2.k1, model_.b1.k2 + model_.b2.k2);
    const HoloExpr scalar = u_expr(k, UVariant::Kind::pihalf, -s, model_.m) *
                            u_expr(k, UVariant::Kind::pihalf, s, model_.m) * plane_wave(b, k);
    return {scalar, model_.a2.adjoint() * model_.a1};
}

CMatX WaveMatrixFamily::dressed_real(int i, double t, const MomentumPoint& p) const
{
    const double omega = wigner_angle(lift_boost1(t), p).value;
    const MomentumPoint k = shell_point(boost1(-t) * p.vec(), p.m());
    const cplx phase = std::exp(kI * model_.s * omega);
    if (i == 1)
        return phase * psi1(k);
    if (i == 2)
        return phase * psi2(k);
    throw std::invalid_argument("family index must be 1 or 2");
}

CMatX WaveMatrixFamily::dressed(int i, cplx t, const MomentumPoint& p) const
{
    if (t.imag() == 0.0)
        return dressed_real(i, t.real(), p);
    const StripPath path = StripPath::straight(t.real(), t);
    if (i == 1)
        return continue_along(dressed1(p), path, options_);
    if (i == 2)
        return continue_along(dressed2_conjugate(p), path, options_).conjugate();
    throw std::invalid_argument("family index must be 1 or 2");
}

CMatX WaveMatrixFamily::tomita_hat(const MomentumPoint& p) const
{
    return continue_along(dressed1(minus_j(p)), StripPath::vertical(0.0), options_).conjugate();
}

CMatX WaveMatrixFamily::tomita_check(const MomentumPoint& p) const
{
    return continue_along(dressed2_conjugate(minus_j(p)), StripPath::vertical(0.0), options_);
}

CMatX WaveMatrixFamily::two_point_real(const MomentumPoint& p) const
{
    return psi2(p).adjoint() * psi1(p);
}

CMatX WaveMatrixFamily::rotated_hat(const MomentumPoint& p) const
{
    const double s = model_.s;
    const double m = model_.m;
    const MomentumPoint q = minus_j(p);
    // Psi2(x) = conj(u^{[-s]}(x) e^{i b2.x}) A2 written with holomorphic coefficients
    const MomentumExpr x = continued_momentum(q.vec(), rotation(-kPi));
    const HoloExpr a = x.k0 - x.k2;
    const CVec3 b2bar(std::conj(model_.b2.k0), std::conj(model_.b2.k1), std::conj(model_.b2.k2));
    const HoloExpr coefficient = std::exp(kI * s * (kPi / 2)) * pow(a / m, -s) * pow(a + m - kI * x.k1, -s) *
                                 pow(a + m + kI * x.k1, s) * exp(-kI * (b2bar.k0 * x.k0 - b2bar.k1 * x.k1 -
                                                                       b2bar.k2 * x.k2));
    const HoloExpr scalar = boosted_wigner_factor(lift_rotation(kPi), q, s) * coefficient;
    return continue_along(HoloMatrix(scalar, model_.a2), StripPath::vertical(0.0), options_).conjugate();
}

HoloMatrix WaveMatrixFamily::ode_kernel(const MomentumPoint& p, double t0) const
{
    const double s = model_.s;
    const double m = model_.m;
    const MomentumExpr k = continued_momentum(p.vec());
    const MomentumExpr kt = continued_momentum(p.vec(), boost1(-t0));
    const HoloExpr scalar = u_expr(k, UVariant::Kind::pihalf, -s, m) * plane_wave(model_.b2, k) *
                            wigner_factor_on_orbit(lift_boost1(t0), p, s) *
                            u_expr(kt, UVariant::Kind::pihalf, s, m) * plane_wave(model_.b1, kt);
    return {scalar, model_.a2.adjoint() * model_.a1};
}

std::vector<MomentumPoint> momentum_grid(double m, int k, double extent)
{
    std::vector<MomentumPoint> out;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            const double x = k == 1 ? 0.0 : -extent + 2.0 * extent * i / (k - 1);
            const double y = k == 1 ? 0.0 : -extent + 2.0 * extent * j / (k - 1);
            out.push_back(shell_point(x + kGridShift(0), y + kGridShift(1), m));
        }
    }
    const MomentumPoint base = shell_point(0.2, -0.3, m);
    out.push_back(shell_point(boost1(0.9) * base.vec(), m));
    out.push_back(shell_point(project(lift_boost_dir(2.0, 0.7)) * base.vec(), m));
    return out;
}

TransformationLawResult verify_transformation_law(const CoverElement& g, const MomentumPoint& p,
                                                  const WaveMatrixFamily& family)
{
    const CoverElement g0 = lift_rotation(kPi / 2);
    if (!in_wedge_class(compose(g, g0)))
        throw SpinStatError(SpinStatErrorKind::hypothesis_violation, "g r(pi/2) is outside the wedge class");
    const ToyModel& t = family.model();
    const double s = t.s;
    const ContinuationOptions& opt = family.options();
    const Mat3 lam_inv = project(g).inverse();
    const MomentumPoint mjp = minus_j(p);
    const MomentumPoint mj_pulled = minus_j(pull_back(g, p));

    const HoloExpr lhs_first = omega_expr(g, mjp, s);
    const HoloExpr lhs_second = plane_wave(t.b1, continued_momentum(mjp.vec(), lam_inv));
    const cplx pre = std::exp(-kI * s * wigner_angle(g, p).value);
    const HoloExpr rhs_first = pre * omega_expr(CoverElement::identity(), mj_pulled, s);
    const HoloExpr rhs_second = plane_wave(t.b1, continued_momentum(mj_pulled.vec()));

    const StripPath path = StripPath::vertical(0.0);
    const CMatX lhs = continue_along(HoloMatrix(lhs_first * lhs_second, t.a1), path, opt);
    const CMatX rhs = continue_along(HoloMatrix(rhs_first * rhs_second, t.a1), path, opt);
    const cplx lf = continue_along(lhs_first, path, opt);
    const cplx rf = continue_along(rhs_first, path, opt);

    const CoverElement gg0 = compose(g, g0);
    const MomentumPoint target = minus_j(pull_back(gg0, p));
    const cplx u = u_function(target, UVariant::plain(), s);
    const cplx bv_lhs = std::exp(kI * kPi * s) * std::exp(-kI * s * wigner_angle(gg0, p).value) * u;
    const cplx bv_rhs = std::exp(kI * kPi * s) * pre *
                        std::exp(-kI * s * wigner_angle(g0, pull_back(g, p)).value) * u;

    TransformationLawResult r;
    r.law = max_abs(lhs - rhs);
    r.first_factors = std::abs(lf - rf);
    r.lhs_closed = std::abs(lf - bv_lhs);
    r.rhs_closed = std::abs(rf - bv_rhs);
    return r;
}

DExtraction extract_D(const WaveMatrixFamily& family, const std::vector<MomentumPoint>& grid)
{
    std::vector<CMatX> ds;
    for (const MomentumPoint& p : grid) {
        const CMatX c = family.psi1c(p);
        const double scale = std::max(1.0, max_abs(c));
        if (std::abs(c.determinant()) < 1e-12 * std::pow(scale, static_cast<double>(c.rows())))
            throw SpinStatError(SpinStatErrorKind::singular_conjugate, "Psi1c is singular on the grid");
        ds.push_back(family.tomita_hat(p) * c.inverse());
    }
    DExtraction out;
    out.mean = CMatX::Zero(ds.front().rows(), ds.front().cols());
    for (const CMatX& d : ds)
        out.mean += d;
    out.mean /= static_cast<double>(ds.size());
    for (const CMatX& d : ds)
        out.residual = std::max(out.residual, max_abs(d - out.mean));
    return out;
}

double RotationPiResult::max() const
{
    return std::max({hat_relation, check_relation, conjugate_side});
}

RotationPiResult rotation_pi_relation(const WaveMatrixFamily& family, const MomentumPoint& p)
{
    const ToyModel& t = family.model();
    const double s = t.s;
    // the paths are chosen with C1 = r(pi) C2
    const SpatialSector c2 = SpatialSector::from_angles(kPi - 0.3, kPi + 0.3);
    const SpatialSector c1 = SpatialSector::from_angles(-0.3, 0.3);
    const ConePath path2 = ConePath::make(c2, -kPi);
    const ConePath path1 = poincare_act_path({{}, lift_rotation(kPi)}, path2);
    if (!same_sector(path1.sector(), c1) || !exchange_hypothesis(path1, path2))
        throw SpinStatError(SpinStatErrorKind::hypothesis_violation, "cone paths do not satisfy C1 = r(pi) C2");

    const CMatX hat_pi = family.rotated_hat(p);
    const MomentumPoint rp = rotate(kPi, p);
    const MomentumPoint rmp = rotate(-kPi, p);

    RotationPiResult r;
    r.hat_relation = max_abs(hat_pi - std::exp(-kI * s * kPi) * family.tomita_check(rp));
    r.check_relation = max_abs(family.tomita_check(p) - std::exp(2.0 * kPi * kI * s) * t.d * family.psi2c(p));
    r.conjugate_side = max_abs(t.d.inverse() * hat_pi - std::exp(kI * kPi * s) * family.psi2c(rmp));
    return r;
}

PhaseExtraction extract_statistics_phase(const WaveMatrixFamily& family, const std::vector<MomentumPoint>& grid,
                                         double tol)
{
    std::vector<CMatX> xs;
    std::vector<CMatX> ys;
    cplx num = 0.0;
    for (const MomentumPoint& p : grid) {
        const CMatX x = family.tomita_hat(p).adjoint() * family.tomita_check(p);
        const CMatX y = family.psi1c(p).adjoint() * family.psi2c(p);
        num += (y.adjoint() * x).trace();
        xs.push_back(x);
        ys.push_back(y);
    }
    PhaseExtraction out;
    out.omega_hat = num / std::abs(num);
    for (std::size_t i = 0; i < xs.size(); ++i)
        out.mismatch = std::max(out.mismatch, (xs[i] - out.omega_hat * ys[i]).norm() / ys[i].norm());

    const DExtraction d = extract_D(family, grid);
    const Eigen::SelfAdjointEigenSolver<CMatX> eig(d.mean.adjoint() * d.mean);
    out.dstar_d_min_eig = eig.eigenvalues().minCoeff();
    if (out.mismatch > tol)
        throw SpinStatError(SpinStatErrorKind::non_scalar_mismatch,
                            "no scalar relates hat^* check to Psi1c^* Psi2c within tolerance");
    return out;
}

TwoPointResult two_point_boundary_check(const WaveMatrixFamily& family, const MomentumPoint& p)
{
    const ToyModel& t = family.model();
    const CMatX whole = continue_along(family.two_point(minus_j(p)), StripPath::vertical(0.0), family.options());
    const CMatX factorwise = (family.tomita_hat(p).adjoint() * family.tomita_check(p)).transpose();
    const CMatX conj_side = family.psi1c(p).adjoint() * family.psi2c(p);

    TwoPointResult r;
    r.boundary = max_abs(whole - t.omega_target * conj_side.transpose());
    r.routes = max_abs(whole - factorwise);
    r.untransposed = max_abs(whole - t.omega_target * conj_side);
    return r;
}

OdeRouteResult ode_route_check(const WaveMatrixFamily& family, const MomentumPoint& p, cplx z,
                               const OdeOptions& options)
{
    const StripPath path = StripPath::straight(z.real(), z);
    OdeRouteResult r;
    r.ode = ode_continue([&family, &p](double t0) { return family.ode_kernel(p, t0); },
                         [&family, &p](double t) { return family.dressed_real(1, t, p); }, path, options);
    r.direct = family.dressed(1, z, p);
    r.difference = max_abs(r.ode - r.direct);
    return r;
}

}  // namespace anyons
