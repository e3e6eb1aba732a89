// Real and complex vectors in 2+1 dimensional Minkowski space.
//
// Signature is (+,-,-) throughout the library; every other module takes
// the metric from here.
#pragma once

#include <complex>

#include <Eigen/Dense>

namespace anyons {

using cplx = std::complex<double>;
using Mat3 = Eigen::Matrix3d;
using CMat3 = Eigen::Matrix3cd;

/// Real spacetime vector (x^0, x^1, x^2), natural units.
struct Vec3 {
    double x0 = 0.0;
    double x1 = 0.0;
    double x2 = 0.0;

    Eigen::Vector3d vec() const { return {x0, x1, x2}; }
    static Vec3 from(const Eigen::Vector3d& v) { return {v(0), v(1), v(2)}; }
};

/// Complexified spacetime vector.
struct CVec3 {
    cplx k0{};
    cplx k1{};
    cplx k2{};

    CVec3() = default;
    CVec3(cplx a, cplx b, cplx c) : k0(a), k1(b), k2(c) {}
    explicit CVec3(const Vec3& x) : k0(x.x0), k1(x.x1), k2(x.x2) {}

    Eigen::Vector3cd vec() const { return {k0, k1, k2}; }
    static CVec3 from(const Eigen::Vector3cd& v) { return {v(0), v(1), v(2)}; }
    Vec3 real() const { return {k0.real(), k1.real(), k2.real()}; }
    Vec3 imag() const { return {k0.imag(), k1.imag(), k2.imag()}; }
};

/// Point on the positive mass shell. Only the spatial momentum and the mass
/// are stored; the energy is recomputed on every access so the on-shell
/// condition cannot be broken.
class MomentumPoint {
public:
    double p1() const { return p1_; }
    double p2() const { return p2_; }
    double m() const { return m_; }
    double p0() const;

    Vec3 vec3() const { return {p0(), p1_, p2_}; }
    Eigen::Vector3d vec() const { return vec3().vec(); }

private:
    friend MomentumPoint shell_point(double p1, double p2, double m);
    MomentumPoint(double p1, double p2, double m) : p1_(p1), p2_(p2), m_(m) {}

    double p1_;
    double p2_;
    double m_;
};

/// Throws std::invalid_argument unless m > 0 and the inputs are finite.
MomentumPoint shell_point(double p1, double p2, double m);

/// Projects a (nearly) on-shell vector back onto H_m^+ using its spatial part.
MomentumPoint shell_point(const Eigen::Vector3d& v, double m);

const Mat3& metric();

cplx minkowski_product(const CVec3& x, const CVec3& y);
double minkowski_product(const Vec3& x, const Vec3& y);

/// The x^1 boost Lambda_1(t) for real rapidity.
Mat3 boost1(double t);

/// Entire extension of the x^1 boost: (J(theta) + i sin(theta) sigma) Lambda_1(t)
/// for z = t + i theta.
CMat3 boost1(cplx z);

/// Rotation by phi in the (x^1, x^2) plane, positive = counter-clockwise.
Mat3 rotation(double phi);

/// J = diag(-1,-1,1), the boost at imaginary rapidity i pi.
const Mat3& j_matrix();

CVec3 j_reflect(const CVec3& x);
Vec3 j_reflect(const Vec3& x);

/// max |M^T g M - g|, entrywise; zero for complex Lorentz matrices.
double lorentz_residual(const CMat3& m);
double lorentz_residual(const Mat3& m);

}  // namespace anyons
