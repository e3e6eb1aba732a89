#include "anyons/conegeom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace anyons {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// wrap to (-pi, pi]
double wrap(double a)
{
    double r = std::remainder(a, kTwoPi);
    if (r <= -kPi)
        r += kTwoPi;
    return r;
}

// wrap to [0, 2 pi)
double wrap_positive(double a)
{
    double r = std::fmod(a, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    return r;
}

Eigen::Vector2d inward_normal_lower(double alpha)
{
    return {-std::sin(alpha), std::cos(alpha)};
}

Eigen::Vector2d inward_normal_upper(double beta)
{
    return {std::sin(beta), -std::cos(beta)};
}

// Is `angle` (mod 2 pi) inside the closed arc [lo, lo + len]?
bool in_arc(double angle, double lo, double len, double tol)
{
    const double d = wrap_positive(angle - lo);
    return d <= len + tol || d >= kTwoPi - tol;
}

}  // namespace

double spatial_angle(const Vec3& e)
{
    return std::atan2(e.x2, e.x1);
}

SpacelikeDirection SpacelikeDirection::from_angle(double angle, double e0)
{
    const double r = std::sqrt(1.0 + e0 * e0);
    return {{e0, r * std::cos(angle), r * std::sin(angle)}, angle};
}

SpacelikeDirection SpacelikeDirection::make(const Vec3& e, double lifted_angle)
{
    if (std::abs(minkowski_product(e, e) + 1.0) > 1e-10)
        throw ConeGeometryError("space-like direction must satisfy e.e = -1");
    if (std::abs(wrap(lifted_angle - spatial_angle(e))) > 1e-9)
        throw ConeGeometryError("lifted angle does not lie over the direction");
    return {e, lifted_angle};
}

SpacelikeDirection reference_direction()
{
    return {{0.0, 0.0, -1.0}, -kPi / 2};
}

SpacelikeDirection act_direction(const CoverElement& g, const SpacelikeDirection& d)
{
    // g = rotation(2 omega) * pure boost(gamma); the boost moves the spatial
    // angle by less than pi, the rotation by exactly 2 omega.
    const CoverElement boost{g.gamma, 0.0};
    const Vec3 boosted = act_on_vector(boost, d.e);
    const double shift = wrap(spatial_angle(boosted) - spatial_angle(d.e));
    const Vec3 image = act_on_vector(g, d.e);
    return {image, d.lifted_angle + shift + 2.0 * g.omega};
}

SpatialSector SpatialSector::from_angles(double alpha, double beta, const Vec3& apex)
{
    if (!(beta - alpha > 0.0 && beta - alpha < kPi))
        throw ConeGeometryError("sector must be salient with positive opening");
    const Vec3 lower{0.0, std::cos(alpha), std::sin(alpha)};
    const Vec3 upper{0.0, std::cos(beta), std::sin(beta)};
    return SpatialSector(lower, upper, apex);
}

SpatialSector SpatialSector::from_edges(const Vec3& lower, const Vec3& upper, const Vec3& apex)
{
    const double open = wrap_positive(spatial_angle(upper) - spatial_angle(lower));
    if (!(open > 0.0 && open < kPi))
        throw ConeGeometryError("degenerate sector image");
    return SpatialSector(lower, upper, apex);
}

double SpatialSector::alpha() const
{
    return spatial_angle(lower_);
}

double SpatialSector::beta() const
{
    return alpha() + wrap_positive(spatial_angle(upper_) - spatial_angle(lower_));
}

bool same_sector(const SpatialSector& a, const SpatialSector& b, double tol)
{
    auto close = [tol](const Vec3& x, const Vec3& y) {
        return (x.vec() - y.vec()).cwiseAbs().maxCoeff() <= tol;
    };
    return close(a.lower_edge(), b.lower_edge()) && close(a.upper_edge(), b.upper_edge()) &&
           close(a.apex(), b.apex());
}

bool contains_direction(const SpatialSector& cone, const Vec3& e, double tol)
{
    const Eigen::Vector2d spatial(e.x1, e.x2);
    const double bound = std::abs(e.x0);
    return inward_normal_lower(cone.alpha()).dot(spatial) >= bound - tol &&
           inward_normal_upper(cone.beta()).dot(spatial) >= bound - tol;
}

bool contains_direction(const SpatialSector& cone, const SpacelikeDirection& e, double tol)
{
    return contains_direction(cone, e.e, tol);
}

bool contains_point(const SpatialSector& cone, const Vec3& x)
{
    const Eigen::Vector2d y(x.x1 - cone.apex().x1, x.x2 - cone.apex().x2);
    const double dt = std::abs(x.x0 - cone.apex().x0);
    return inward_normal_lower(cone.alpha()).dot(y) > dt && inward_normal_upper(cone.beta()).dot(y) > dt;
}

SpatialSector dual_sector(const SpatialSector& cone)
{
    return SpatialSector::from_angles(cone.beta() - kPi / 2, cone.alpha() + kPi / 2);
}

DifferenceCone difference_cone(const SpatialSector& c1, const SpatialSector& c2)
{
    // arcs [a_start, a_start + a_len] (C2) and [b_start, b_start + b_len] (-C1)
    const double a_start = c2.alpha();
    const double a_len = c2.opening();
    const double b_start = c1.alpha() + kPi;
    const double b_len = c1.opening();

    const double from_a = std::max(a_len, wrap_positive(b_start - a_start) + b_len);
    const double from_b = std::max(b_len, wrap_positive(a_start - b_start) + a_len);

    DifferenceCone out;
    if (from_a <= from_b) {
        out.alpha = wrap(a_start);
        out.beta = out.alpha + from_a;
    } else {
        out.alpha = wrap(b_start);
        out.beta = out.alpha + from_b;
    }
    out.salient = out.beta - out.alpha < kPi;
    return out;
}

bool difference_salient(const SpatialSector& c1, const SpatialSector& c2)
{
    return difference_cone(c1, c2).salient;
}

bool c12_negative_axis(const SpatialSector& c1, const SpatialSector& c2)
{
    const DifferenceCone d = difference_cone(c1, c2);
    if (!d.salient)
        return false;
    const double lo = d.beta - kPi / 2;
    const double hi = d.alpha + kPi / 2;
    const double off = wrap_positive(kPi - lo);
    return off > 0.0 && off < hi - lo;
}

bool causally_separated(const SpatialSector& c1, const SpatialSector& c2, double tol)
{
    if (std::abs(c1.apex().x0 - c2.apex().x0) > tol)
        return false;

    // Separating normal n: n in dual(C2), -n in dual(C1) (closed arcs), and
    // n.(a2 - a1) >= 0. Intersect the two arcs and maximise over them.
    const double d2_lo = c2.beta() - kPi / 2;
    const double d2_len = kPi - c2.opening();
    const double d1_lo = c1.beta() + kPi / 2;
    const double d1_len = kPi - c1.opening();

    // the intersection of two arcs shorter than pi is a single arc (or empty)
    const double offset = std::remainder(d1_lo - d2_lo, kTwoPi);
    const double lo = offset >= 0.0 ? d1_lo : d2_lo;
    const double len = offset >= 0.0 ? std::min(d1_len, d2_len - offset) : std::min(d2_len, d1_len + offset);
    if (len < -tol)
        return false;

    const Eigen::Vector2d shift(c2.apex().x1 - c1.apex().x1, c2.apex().x2 - c1.apex().x2);
    auto support = [&](double a) { return std::cos(a) * shift(0) + std::sin(a) * shift(1); };
    double best = std::max(support(lo), support(lo + len));
    if (shift.norm() > 0.0 && in_arc(std::atan2(shift(1), shift(0)), lo, len, 0.0))
        best = shift.norm();
    return best >= -tol;
}

ConePath ConePath::make(const SpatialSector& sector, const SpacelikeDirection& endpoint)
{
    if (!contains_direction(sector, endpoint, 1e-12))
        throw ConeGeometryError("path endpoint is not contained in the cone");
    if (!in_arc(endpoint.lifted_angle, sector.alpha(), sector.opening(), 1e-12))
        throw ConeGeometryError("accumulated angle outside the cone's direction interval");
    return ConePath(sector, endpoint);
}

ConePath ConePath::make(const SpatialSector& sector, double accumulated_angle)
{
    return make(sector, SpacelikeDirection::from_angle(accumulated_angle));
}

bool exchange_hypothesis(const ConePath& path1, const ConePath& path2)
{
    const SpatialSector& c1 = path1.sector();
    const SpatialSector& c2 = path2.sector();
    if (!causally_separated(c1, c2))
        return false;
    constexpr double tol = 1e-12;

    // sheet of the C2 interval holding theta2
    const double theta2 = path2.accumulated_angle();
    const double j = std::floor((theta2 - c2.alpha() + tol) / kTwoPi);
    const double a2 = c2.alpha() + kTwoPi * j;
    if (theta2 > a2 + c2.opening() + tol)
        return false;

    // first sheet of C1 met when leaving C2 in the positive sense
    const double leave = a2 + c2.opening();
    const double k = std::ceil((leave - c1.alpha()) / kTwoPi);
    double a1 = c1.alpha() + kTwoPi * k;
    if (a1 <= leave)
        a1 += kTwoPi;
    if (a1 + c1.opening() >= a2 + kTwoPi)
        return false;

    const double theta1 = path1.accumulated_angle();
    return theta1 >= a1 - tol && theta1 <= a1 + c1.opening() + tol;
}

ConePath poincare_act_path(const PoincareElement& g, const ConePath& path)
{
    const SpatialSector& s = path.sector();
    const Vec3 lower = act_on_vector(g.lorentz, s.lower_edge());
    const Vec3 upper = act_on_vector(g.lorentz, s.upper_edge());
    const Vec3 apex = act_on_point(g, s.apex());
    const SpatialSector image = SpatialSector::from_edges(lower, upper, apex);
    return ConePath(image, act_direction(g.lorentz, path.endpoint()));
}

bool path_equivalent(const ConePath& path1, const ConePath& path2, const SpatialSector& ambient)
{
    constexpr double tol = 1e-12;
    const double theta1 = path1.accumulated_angle();
    const double theta2 = path2.accumulated_angle();
    const double j = std::floor((theta1 - ambient.alpha() + tol) / kTwoPi);
    const double lo = ambient.alpha() + kTwoPi * j;
    const double hi = lo + ambient.opening();
    auto inside = [&](double t) { return t >= lo - tol && t <= hi + tol; };
    return inside(theta1) && inside(theta2);
}

bool WedgePath::contains(const SpacelikeDirection& d, double tol)
{
    return d.e.x1 > std::abs(d.e.x0) + tol && d.lifted_angle > -kPi / 2 && d.lifted_angle < kPi / 2;
}

bool in_wedge_class(const CoverElement& g)
{
    return WedgePath::contains(act_direction(g, reference_direction()));
}

}  // namespace anyons
