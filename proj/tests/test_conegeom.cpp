#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anyons/conegeom.hpp"
#include "generators.hpp"

using namespace anyons;
using testgen::pi;

namespace {

double ray_distance(const Eigen::Vector2d& y, double angle)
{
    const Eigen::Vector2d d(std::cos(angle), std::sin(angle));
    return (y - std::max(0.0, y.dot(d)) * d).norm();
}

// disk of radius |x0| about the spatial point inside the open sector
bool disk_oracle(double alpha, double opening, const Vec3& x)
{
    const Eigen::Vector2d y(x.x1, x.x2);
    if (y.norm() == 0.0)
        return false;
    double rel = std::remainder(std::atan2(y(1), y(0)) - alpha, 2.0 * pi);
    if (rel < 0.0)
        rel += 2.0 * pi;
    if (!(rel > 0.0 && rel < opening))
        return false;
    const double r = std::abs(x.x0);
    return ray_distance(y, alpha) > r && ray_distance(y, alpha + opening) > r;
}

}  // namespace

TEST_CASE("paths into a single cone")
{
    const SpatialSector cone = SpatialSector::from_angles(0.2, 0.9);
    const ConePath e1 = ConePath::make(cone, 0.4);
    const ConePath e2 = ConePath::make(cone, 0.7);
    const ConePath e3 = ConePath::make(cone, 0.4 - 2.0 * pi);
    CHECK(path_equivalent(e1, e2, cone));
    CHECK(path_equivalent(e2, e1, cone));
    CHECK_FALSE(path_equivalent(e1, e3, cone));
    const ConePath e3r = poincare_act_path({{}, lift_rotation(2.0 * pi)}, e3);
    CHECK(same_sector(e3r.sector(), cone));
    CHECK(path_equivalent(e3r, e1, cone));
    CHECK(e3r.accumulated_angle() == doctest::Approx(0.4));
}

TEST_CASE("cones on opposite sides")
{
    const SpatialSector c1 = SpatialSector::from_angles(-0.3, 0.3);
    const SpatialSector c2 = SpatialSector::from_angles(pi - 0.3, pi + 0.3);
    const ConePath p1 = ConePath::make(c1, 0.0);
    const ConePath p2 = ConePath::make(c2, -pi);
    CHECK(causally_separated(c1, c2));
    CHECK(exchange_hypothesis(p1, p2));
    CHECK_FALSE(exchange_hypothesis(ConePath::make(c1, 2.0 * pi), p2));
    CHECK_FALSE(exchange_hypothesis(p2, p1));
    CHECK(difference_salient(c1, c2));
    CHECK(c12_negative_axis(c1, c2));
    CHECK_FALSE(c12_negative_axis(c2, c1));
    // overlapping cones are not separated
    CHECK_FALSE(causally_separated(c1, SpatialSector::from_angles(0.1, 0.8)));
    CHECK_FALSE(difference_salient(c1, c1));
}

TEST_CASE("construction errors")
{
    CHECK_THROWS_AS(SpatialSector::from_angles(0.0, pi), ConeGeometryError);
    CHECK_THROWS_AS(SpatialSector::from_angles(0.5, 0.5), ConeGeometryError);
    const SpatialSector cone = SpatialSector::from_angles(0.2, 0.9);
    CHECK_THROWS_AS(ConePath::make(cone, 1.5), ConeGeometryError);
    CHECK_THROWS_AS(SpacelikeDirection::make({0.0, 2.0, 0.0}, 0.0), ConeGeometryError);
    CHECK_THROWS_AS(SpacelikeDirection::make({0.0, 1.0, 0.0}, 1.0), ConeGeometryError);
}

TEST_CASE("deck transformation shifts the lifted angle")
{
    testgen::forall(40, 200, [](testgen::Gen& g) {
        const SpacelikeDirection d = SpacelikeDirection::from_angle(g.real(-5.0, 5.0), g.real(-0.5, 0.5));
        const CoverElement a = g.cover();
        const SpacelikeDirection moved = act_direction(a, d);
        const SpacelikeDirection decked = act_direction(compose(lift_rotation(2.0 * pi), a), d);
        CHECK(decked.lifted_angle - moved.lifted_angle == doctest::Approx(2.0 * pi));
        const Eigen::Vector3d image = project(a) * d.e.vec();
        CHECK((moved.e.vec() - image).norm() < 1e-12);
        // action is a homomorphism on lifted angles
        const CoverElement b = g.cover();
        CHECK(act_direction(compose(a, b), d).lifted_angle ==
              doctest::Approx(act_direction(a, act_direction(b, d)).lifted_angle));
    });
}

TEST_CASE("wedge class")
{
    CHECK(in_wedge_class(lift_rotation(pi / 2)));
    CHECK_FALSE(in_wedge_class(CoverElement::identity()));
    CHECK_FALSE(in_wedge_class(lift_rotation(pi / 2 + 2.0 * pi)));
    CHECK(in_wedge_class(compose(lift_boost1(0.7), lift_rotation(pi / 2))));
}

TEST_CASE("dual sector")
{
    testgen::forall(41, 200, [](testgen::Gen& g) {
        const double a = g.real(-pi, pi);
        const SpatialSector cone = SpatialSector::from_angles(a, a + g.real(0.05, pi - 0.05));
        const SpatialSector dual = dual_sector(cone);
        const SpatialSector dd = dual_sector(dual);
        CHECK(std::abs(std::remainder(dd.alpha() - cone.alpha(), 2.0 * pi)) < 1e-12);
        CHECK(std::abs(dd.opening() - cone.opening()) < 1e-12);
        // a direction in the dual pairs positively with both edges
        const double phi = g.real(dual.alpha(), dual.beta());
        for (double edge : {cone.alpha(), cone.beta()})
            CHECK(std::cos(phi - edge) > -1e-12);
    });
}

TEST_CASE("point containment agrees with the disk oracle")
{
    testgen::forall(42, 2000, [](testgen::Gen& g) {
        const double a = g.real(-pi, pi);
        const double open = g.real(0.1, pi - 0.1);
        const SpatialSector cone = SpatialSector::from_angles(a, a + open);
        const Vec3 x{g.real(-1.0, 1.0), g.real(-2.0, 2.0), g.real(-2.0, 2.0)};
        CHECK(contains_point(cone, x) == disk_oracle(a, open, x));
    });
}

TEST_CASE("direction containment agrees with translating sample points")
{
    int contained = 0;
    testgen::forall(43, 300, [&](testgen::Gen& g) {
        const double a = g.real(-pi, pi);
        const double open = g.real(0.2, pi - 0.2);
        const SpatialSector cone = SpatialSector::from_angles(a, a + open);
        const double phi = g.real(a - 0.5, a + open + 0.5);
        const double e0 = g.real(-0.6, 0.6);
        const double r = std::sqrt(1.0 + e0 * e0);
        const Vec3 e{e0, r * std::cos(phi), r * std::sin(phi)};
        const double margin = std::min(std::sin(phi - a), std::sin(a + open - phi)) * r - std::abs(e0);
        if (std::abs(margin) < 1e-6)
            return;
        bool oracle = true;
        int inside = 0;
        for (int k = 0; k < 40; ++k) {
            const double rho = std::pow(10.0, g.real(-3.0, 1.0));
            const double th = g.real(a, a + open);
            const Vec3 x{g.real(-rho, rho), rho * std::cos(th), rho * std::sin(th)};
            if (!disk_oracle(a, open, x))
                continue;
            ++inside;
            for (double lam : {1.0, 1e8})
                if (!disk_oracle(a, open, {x.x0 + lam * e.x0, x.x1 + lam * e.x1, x.x2 + lam * e.x2}))
                    oracle = false;
        }
        if (inside == 0)
            return;
        const bool fast = contains_direction(cone, e);
        contained += fast ? 1 : 0;
        CHECK(fast == oracle);
    });
    CHECK(contained > 0);
}
