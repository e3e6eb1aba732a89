// Space-like directions, spatial sectors and paths of space-like cones.
//
// Homotopy classes of paths in the manifold of space-like directions are
// carried by a single real number: the continuous lift of the spatial angle
// atan2(e2, e1) along the path.  The spatial part of a space-like unit
// vector never vanishes, so this retraction is well defined and one real
// lift subsumes the integer winding.
#pragma once

#include <stdexcept>

#include "anyons/covergroup.hpp"
#include "anyons/minkowski.hpp"

namespace anyons {

class ConeGeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SpacelikeDirection {
    Vec3 e;               // e.e = -1
    double lifted_angle;  // == atan2(e.x2, e.x1) mod 2 pi

    /// Direction with spatial angle `angle` and time component e0.
    static SpacelikeDirection from_angle(double angle, double e0 = 0.0);
    /// Validates e.e = -1 and that `lifted_angle` lies over e's angle.
    static SpacelikeDirection make(const Vec3& e, double lifted_angle);
};

/// Reference direction (0,0,-1) with lifted angle -pi/2.
SpacelikeDirection reference_direction();

double spatial_angle(const Vec3& e);

/// Lift of the Lorentz action on space-like directions to their covering space.
SpacelikeDirection act_direction(const CoverElement& g, const SpacelikeDirection& d);

/// Causal completion of an open salient sector of the time-zero plane,
/// translated to `apex`. The sector is stored through its two edge directions
/// (lower and upper in the positive sense) so that Lorentz images stay exact;
/// for the Buchholz-Epstein class the edges have zero time component.
class SpatialSector {
public:
    /// Throws ConeGeometryError unless 0 < beta - alpha < pi.
    static SpatialSector from_angles(double alpha, double beta, const Vec3& apex = {});
    static SpatialSector from_edges(const Vec3& lower, const Vec3& upper, const Vec3& apex);

    /// alpha in (-pi, pi], beta = alpha + opening.
    double alpha() const;
    double beta() const;
    double opening() const { return beta() - alpha(); }
    const Vec3& apex() const { return apex_; }
    const Vec3& lower_edge() const { return lower_; }
    const Vec3& upper_edge() const { return upper_; }

private:
    SpatialSector(const Vec3& lower, const Vec3& upper, const Vec3& apex)
        : lower_(lower), upper_(upper), apex_(apex)
    {
    }

    Vec3 lower_;
    Vec3 upper_;
    Vec3 apex_;
};

bool same_sector(const SpatialSector& a, const SpatialSector& b, double tol = 1e-10);

/// C + e subset of C, via the support inequalities n_i . e_spatial >= |e0|
/// of the two inward edge normals (the recession cone of the causal completion).
bool contains_direction(const SpatialSector& cone, const SpacelikeDirection& e, double tol = 1e-12);
bool contains_direction(const SpatialSector& cone, const Vec3& e, double tol = 1e-12);

/// Membership of a spacetime point in the causal completion of the sector.
bool contains_point(const SpatialSector& cone, const Vec3& x);

/// Dual sector {p : p.x > 0 for x in closure(C)\{0}}: the angular interval
/// (beta - pi/2, alpha + pi/2), apex at the origin.
SpatialSector dual_sector(const SpatialSector& cone);

struct DifferenceCone {
    bool salient = false;
    double alpha = 0.0;  // covering arc of C2 - C1
    double beta = 0.0;
};

/// C_R2 - C_R1 computed as the convex hull of the arcs C2 and -C1.
DifferenceCone difference_cone(const SpatialSector& c1, const SpatialSector& c2);
bool difference_salient(const SpatialSector& c1, const SpatialSector& c2);

/// The negative x^1 axis lies in the open dual of C_R2 - C_R1.
bool c12_negative_axis(const SpatialSector& c1, const SpatialSector& c2);

/// Spatial sectors disjoint (separating line exists) and apexes at a common time.
bool causally_separated(const SpatialSector& c1, const SpatialSector& c2, double tol = 1e-9);

class ConePath {
public:
    /// Throws ConeGeometryError unless the endpoint is contained in the cone
    /// and its lifted angle lies in the cone's direction interval mod 2 pi.
    static ConePath make(const SpatialSector& sector, const SpacelikeDirection& endpoint);
    /// Endpoint at time component 0 with the given lifted angle.
    static ConePath make(const SpatialSector& sector, double accumulated_angle);

    const SpatialSector& sector() const { return sector_; }
    const SpacelikeDirection& endpoint() const { return endpoint_; }
    double accumulated_angle() const { return endpoint_.lifted_angle; }

private:
    friend ConePath poincare_act_path(const PoincareElement& g, const ConePath& path);
    ConePath(const SpatialSector& s, const SpacelikeDirection& e) : sector_(s), endpoint_(e) {}

    SpatialSector sector_;
    SpacelikeDirection endpoint_;
};

/// Both cones causally separated and the class e1 * e2^{-1} winds directly,
/// in the positive sense, from C2 to C1. Not symmetric in its arguments.
bool exchange_hypothesis(const ConePath& path1, const ConePath& path2);

/// (a, L).(C, e) = (L C + a, L~ e). Throws ConeGeometryError if the image
/// sector is not an open salient interval.
ConePath poincare_act_path(const PoincareElement& g, const ConePath& path);

/// Endpoint classes can be joined inside the ambient's direction interval.
bool path_equivalent(const ConePath& path1, const ConePath& path2, const SpatialSector& ambient);

/// The wedge W1 = {x1 > |x0|} with the class of paths from the reference
/// direction that stay inside it.
struct WedgePath {
    static bool contains(const SpacelikeDirection& d, double tol = 1e-12);
};

/// g applied to the reference direction lands in the wedge class.
bool in_wedge_class(const CoverElement& g);

}  // namespace anyons
