// One line per acceptance criterion; nonzero exit if any fails.
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "anyons/analytic.hpp"
#include "anyons/conegeom.hpp"
#include "anyons/repn.hpp"
#include "anyons/spinstat.hpp"
#include "generators.hpp"

using namespace anyons;
using testgen::pi;
namespace fs = std::filesystem;

namespace {

const cplx I(0.0, 1.0);

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what, double value)
    {
        pass = pass && ok;
        detail << ' ' << what << '=' << value;
    }
};

template <class Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m)
{
    return m.cwiseAbs().maxCoeff();
}

Outcome group_and_cover()
{
    Outcome o;
    double matrix = 0.0;
    double cover = 0.0;
    const CoverElement deck = lift_rotation(2.0 * pi);
    testgen::forall(101, 1000, [&](testgen::Gen& g) {
        const CoverElement a = g.cover();
        const CoverElement b = g.cover();
        matrix = std::max({matrix, max_abs(su11_matrix(compose(a, b)) - su11_matrix(a) * su11_matrix(b)),
                           max_abs(project(compose(a, b)) - project(a) * project(b)),
                           max_abs(project(j_conjugate(a)) - j_matrix() * project(a) * j_matrix())});
        cover = std::max({cover, cover_distance(compose(a, deck), compose(deck, a)),
                          cover_distance(j_conjugate(compose(a, b)), compose(j_conjugate(a), j_conjugate(b))),
                          cover_distance(compose(a, inverse(a)), CoverElement::identity())});
    });
    matrix = std::max(matrix, max_abs(project(deck) - Mat3::Identity()));
    o.require(matrix < 1e-12, "matrix", matrix);
    o.require(cover < 1e-10, "cover", cover);
    return o;
}

Outcome boost_analyticity()
{
    Outcome o;
    CMat3 k = CMat3::Zero();
    k(0, 1) = k(1, 0) = 1.0;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) {
            const cplx z(-2.0 + 4.0 * i / 19.0, pi * j / 19.0);
            worst = std::max(worst, max_abs(boost1(z) - CMat3((z * k).exp())));
        }
    Eigen::Vector3d diag(-1.0, -1.0, 1.0);
    const double at_ipi = max_abs(boost1(cplx(0.0, pi)) - CMat3(diag.asDiagonal().toDenseMatrix().cast<cplx>()));
    o.require(worst < 1e-12, "expm", worst);
    o.require(at_ipi < 1e-14, "J", at_ipi);
    return o;
}

Outcome wigner()
{
    Outcome o;
    double additivity = 0.0;
    double jconj = 0.0;
    double rotation_angle = 0.0;
    testgen::forall(102, 1000, [&](testgen::Gen& g) {
        const CoverElement a = g.cover();
        const CoverElement b = g.cover();
        const MomentumPoint p = g.momentum(1.3);
        additivity = std::max(additivity, std::abs(wigner_angle(compose(a, b), p).value - wigner_angle(a, p).value -
                                                   wigner_angle(b, pull_back(a, p)).value));
        jconj = std::max(jconj, std::abs(wigner_angle(j_conjugate(a), p).value + wigner_angle(a, minus_j(p)).value));
        const double w = g.real(-4.0 * pi, 4.0 * pi);
        rotation_angle = std::max(rotation_angle, std::abs(wigner_angle(lift_rotation(w), p).value - w));
    });
    const MomentumPoint p = shell_point(0.6, -0.8, 1.0);
    for (double w : {2.0 * pi, 4.0 * pi})
        rotation_angle = std::max(rotation_angle, std::abs(wigner_angle(lift_rotation(w), p).value - w));
    o.require(additivity < 1e-9, "additivity", additivity);
    o.require(rotation_angle < 1e-10, "rotation", rotation_angle);
    o.require(jconj < 1e-9, "j", jconj);
    return o;
}

Outcome boundary_formula()
{
    Outcome o;
    const CoverElement quarter = lift_rotation(pi / 2);
    double boundary = 0.0;
    int cases = 0;
    testgen::Gen g(103);
    while (cases < 50) {
        const CoverElement a = compose(lift_rotation(g.real(-0.5, 0.5)), lift_boost_dir(g.real(-pi, pi), g.real(0.0, 0.4)));
        const MomentumPoint p = g.momentum(1.3, 1.0);
        const double s = g.real(0.0, 1.0);
        if (!in_wedge_class(compose(a, quarter)))
            continue;
        ++cases;
        boundary = std::max(boundary,
                            std::abs(boundary_at_ipi(omega_expr(a, p, s), 0.0) - compensated_boundary(a, quarter, p, s)));
    }
    double morera_worst = 0.0;
    testgen::forall(104, 10, [&](testgen::Gen& h) {
        const CoverElement a = compose(lift_rotation(h.real(-0.3, 0.3)), lift_boost1(h.real(-0.3, 0.3)));
        const MomentumPoint p = h.momentum(1.3, 1.0);
        const double s = h.real(0.0, 1.0);
        const double x0 = h.real(-0.8, 0.3);
        for (const StripPath& box : {StripPath::rectangle(x0, x0 + 0.5, 0.2, 1.6), StripPath::rectangle(x0, x0 + 0.5, 1.5, 3.1)})
            morera_worst = std::max(morera_worst, morera(omega_expr(a, p, s), box).residual);
    });
    const MomentumPoint p = shell_point(0.3, -0.4, 1.3);
    const double control = morera(boosted_wigner_factor(CoverElement::identity(), p, 0.37),
                                  StripPath::rectangle(-0.3, 0.7, 2.4, 3.1)).residual;
    o.require(boundary < 1e-8, "boundary", boundary);
    o.require(morera_worst < 1e-8, "morera", morera_worst);
    o.require(control > 1e-3, "negative_control", control);
    return o;
}

Outcome pauli_lubanski_check()
{
    Outcome o;
    double worst = 0.0;
    for (auto [m, s] : {std::pair{1.0, 0.0}, std::pair{1.0, 0.5}, std::pair{1.7, 0.137}}) {
        const RepConfig cfg = RepConfig::make(m, s, 2);
        const WaveFunction psi = WaveFunction::gaussian(cfg, {0.2, -0.1}, 0.7, Eigen::Vector4cd(1.0, 0.3, cplx(0.0, 0.2), 0.1),
                                                        Eigen::Vector2cd(1.0, cplx(0.5, -1.0)));
        for (const MomentumPoint& p : {shell_point(0.0, 0.0, m), shell_point(0.5, -0.3, m), shell_point(-0.8, 0.6, m)})
            worst = std::max(worst, (pauli_lubanski(psi, p) + m * s * psi(p)).norm() / psi(p).norm());
    }
    o.require(worst < 1e-6, "relative", worst);
    return o;
}

double ray_distance(const Eigen::Vector2d& y, double angle)
{
    const Eigen::Vector2d d(std::cos(angle), std::sin(angle));
    return (y - std::max(0.0, y.dot(d)) * d).norm();
}

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
    return ray_distance(y, alpha) > std::abs(x.x0) && ray_distance(y, alpha + opening) > std::abs(x.x0);
}

Outcome cones()
{
    Outcome o;
    const SpatialSector cone = SpatialSector::from_angles(0.2, 0.9);
    const ConePath e1 = ConePath::make(cone, 0.4);
    const ConePath e2 = ConePath::make(cone, 0.7);
    const ConePath e3 = ConePath::make(cone, 0.4 - 2.0 * pi);
    const ConePath e3r = poincare_act_path({{}, lift_rotation(2.0 * pi)}, e3);
    const bool single_cone = path_equivalent(e1, e2, cone) && !path_equivalent(e1, e3, cone) && path_equivalent(e3r, e1, cone);

    const SpatialSector c1 = SpatialSector::from_angles(-0.3, 0.3);
    const SpatialSector c2 = SpatialSector::from_angles(pi - 0.3, pi + 0.3);
    const ConePath p1 = ConePath::make(c1, 0.0);
    const ConePath p2 = ConePath::make(c2, -pi);
    const bool opposite_cones = exchange_hypothesis(p1, p2) && !exchange_hypothesis(ConePath::make(c1, 2.0 * pi), p2) &&
                      !exchange_hypothesis(p2, p1) && difference_salient(c1, c2) && c12_negative_axis(c1, c2);

    double dual = 0.0;
    testgen::forall(105, 200, [&](testgen::Gen& g) {
        const double a = g.real(-pi, pi);
        const SpatialSector c = SpatialSector::from_angles(a, a + g.real(0.05, pi - 0.05));
        const SpatialSector dd = dual_sector(dual_sector(c));
        dual = std::max({dual, std::abs(std::remainder(dd.alpha() - c.alpha(), 2.0 * pi)), std::abs(dd.opening() - c.opening())});
    });

    int cases = 0;
    int disagreements = 0;
    testgen::Gen g(106);
    while (cases < 200) {
        const double a = g.real(-pi, pi);
        const double open = g.real(0.2, pi - 0.2);
        const SpatialSector c = SpatialSector::from_angles(a, a + open);
        const double phi = g.real(a - 0.5, a + open + 0.5);
        const double e0 = g.real(-0.6, 0.6);
        const double r = std::sqrt(1.0 + e0 * e0);
        const Vec3 e{e0, r * std::cos(phi), r * std::sin(phi)};
        if (std::abs(std::min(std::sin(phi - a), std::sin(a + open - phi)) * r - std::abs(e0)) < 1e-6)
            continue;
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
                oracle = oracle && disk_oracle(a, open, {x.x0 + lam * e.x0, x.x1 + lam * e.x1, x.x2 + lam * e.x2});
        }
        if (inside == 0)
            continue;
        ++cases;
        disagreements += contains_direction(c, e) != oracle ? 1 : 0;
    }
    o.require(single_cone, "single_cone", single_cone);
    o.require(opposite_cones, "opposite_cones", opposite_cones);
    o.require(dual < 1e-12, "double_dual", dual);
    o.require(disagreements == 0, "containment_disagreements", disagreements);
    return o;
}

Outcome pipeline()
{
    Outcome o;
    double phase = 0.0;
    double square = 0.0;
    double d_const = 0.0;
    double rot = 0.0;
    double routes = 0.0;
    for (double s : {0.0, 0.25, 1.0 / 3.0, 0.5, 0.137}) {
        const WaveMatrixFamily family(build_toy_model(s, 1.3, 2, 7));
        const std::vector<MomentumPoint> grid = momentum_grid(1.3);
        const cplx w = extract_statistics_phase(family, grid).omega_hat;
        phase = std::max(phase, std::abs(w - std::exp(2.0 * pi * I * s)));
        square = std::max(square, std::abs(w * w - std::exp(4.0 * pi * I * s)));
        d_const = std::max(d_const, extract_D(family, grid).residual);
        for (const MomentumPoint& p : {grid.front(), grid.back()}) {
            rot = std::max(rot, rotation_pi_relation(family, p).max());
            routes = std::max(routes, two_point_boundary_check(family, p).routes);
        }
    }
    o.require(phase < 1e-8, "phase", phase);
    o.require(d_const < 1e-8, "D", d_const);
    o.require(rot < 1e-8, "rotation_pi", rot);
    o.require(routes < 1e-8, "routes", routes);
    o.require(square < 1e-7, "phase_squared", square);
    return o;
}

Outcome ode()
{
    Outcome o;
    double worst = 0.0;
    for (double s : {0.25, 0.137}) {
        const WaveMatrixFamily family(build_toy_model(s, 1.3, 2, 7));
        for (const MomentumPoint& p : {shell_point(0.3, -0.2, 1.3), shell_point(-0.5, 0.4, 1.3)})
            for (cplx z : {cplx(0.3, 1.0), cplx(0.0, pi / 2), cplx(-0.4, 2.5)})
                worst = std::max(worst, ode_route_check(family, p, z).difference);
    }
    o.require(worst < 1e-6, "ode_vs_direct", worst);
    return o;
}

int run_cli(const std::string& args)
{
    const std::string cmd = std::string(ANYONS_VERIFY_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome determinism()
{
    Outcome o;
    const fs::path dir = fs::temp_directory_path() / ("anyons_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const int a = run_cli("--seed 5 --out " + (dir / "a.json").string());
    const int b = run_cli("--seed 5 --out " + (dir / "b.json").string());
    const std::string ja = slurp(dir / "a.json");
    const bool identical = !ja.empty() && ja == slurp(dir / "b.json");
    const int fail = run_cli("--tol-engine 1e-20 --tol-boundary 1e-20 --tol-pipeline 1e-20");
    const int config = run_cli("--grid zero");
    fs::remove_all(dir);
    o.require(identical, "byte_identical", identical);
    o.require(a == 0 && b == 0, "exit_pass", a);
    o.require(fail == 1, "exit_fail", fail);
    o.require(config == 2, "exit_config", config);
    return o;
}

}  // namespace

int main()
{
    const std::pair<const char*, Outcome (*)()> criteria[] = {
        {"group and cover laws", group_and_cover},
        {"boost analyticity", boost_analyticity},
        {"Wigner rotation", wigner},
        {"strip boundary formula", boundary_formula},
        {"Pauli-Lubanski", pauli_lubanski_check},
        {"cone geometry", cones},
        {"spin-statistics pipeline", pipeline},
        {"ODE route", ode},
        {"determinism and exit codes", determinism},
    };
    bool all = true;
    int n = 0;
    for (const auto& [name, check] : criteria) {
        ++n;
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " error=" << e.what();
        }
        all = all && o.pass;
        std::printf("criterion %d %-28s %s |%s\n", n, name, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
    }
    return all ? 0 : 1;
}
