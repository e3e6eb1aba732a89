#include "anyons/holo.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace anyons {

enum class NodeKind { constant, affine, momentum, add, sub, mul, div, neg, exp, power };

struct HoloExpr::Node {
    NodeKind kind = NodeKind::constant;
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
    cplx c0{};
    cplx c1{};
    int mu = 0;
    Mat3 pre = Mat3::Identity();
    Eigen::Vector3d v = Eigen::Vector3d::Zero();  // post * anchor
    double s = 0.0;
    AnchorArg anchor;
};

namespace {

constexpr double kPi = std::numbers::pi;

using NodePtr = std::shared_ptr<const HoloExpr::Node>;

NodePtr make_node(HoloExpr::Node n)
{
    return std::make_shared<const HoloExpr::Node>(std::move(n));
}

double wrap(double a)
{
    double r = std::remainder(a, 2.0 * kPi);
    if (r <= -kPi)
        r += 2.0 * kPi;
    return r;
}

std::string where(cplx z)
{
    std::ostringstream os;
    os << " at z = " << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

struct Instr {
    NodeKind kind;
    int a = -1;
    int b = -1;
    const HoloExpr::Node* node = nullptr;
    int ledger = -1;
};

struct Program {
    std::vector<Instr> code;
    int ledgers = 0;
    NodePtr root;  // keeps the nodes behind code alive
};

int compile(const HoloExpr::Node* n, Program& prog, std::unordered_map<const HoloExpr::Node*, int>& seen)
{
    if (auto it = seen.find(n); it != seen.end())
        return it->second;
    Instr ins{n->kind};
    ins.node = n;
    if (n->a)
        ins.a = compile(n->a.get(), prog, seen);
    if (n->b)
        ins.b = compile(n->b.get(), prog, seen);
    if (n->kind == NodeKind::power)
        ins.ledger = prog.ledgers++;
    prog.code.push_back(ins);
    const int idx = static_cast<int>(prog.code.size()) - 1;
    seen.emplace(n, idx);
    return idx;
}

Program compile(const HoloExpr& e)
{
    Program prog;
    prog.root = e.node();
    std::unordered_map<const HoloExpr::Node*, int> seen;
    compile(e.node().get(), prog, seen);
    return prog;
}

struct Ledgers {
    std::vector<cplx> base;
    std::vector<double> arg;
};

enum class Mode { init, step, principal };

// Evaluates the program at z. Returns false if a ledger would move by more
// than the phase bound.
bool evaluate(const Program& prog, cplx z, double anchor, Mode mode, const Ledgers& prev, Ledgers& next,
              cplx& out, const ContinuationOptions& opt)
{
    std::vector<cplx> val(prog.code.size());
    const cplx ch = std::cosh(z);
    const cplx sh = std::sinh(z);
    next.base.resize(prog.ledgers);
    next.arg.resize(prog.ledgers);

    for (std::size_t i = 0; i < prog.code.size(); ++i) {
        const Instr& ins = prog.code[i];
        const HoloExpr::Node& n = *ins.node;
        switch (ins.kind) {
        case NodeKind::constant:
            val[i] = n.c0;
            break;
        case NodeKind::affine:
            val[i] = n.c0 + n.c1 * z;
            break;
        case NodeKind::momentum: {
            const Eigen::Vector3cd k(ch * n.v(0) - sh * n.v(1), -sh * n.v(0) + ch * n.v(1), cplx(n.v(2)));
            val[i] = n.pre(n.mu, 0) * k(0) + n.pre(n.mu, 1) * k(1) + n.pre(n.mu, 2) * k(2);
            break;
        }
        case NodeKind::add:
            val[i] = val[ins.a] + val[ins.b];
            break;
        case NodeKind::sub:
            val[i] = val[ins.a] - val[ins.b];
            break;
        case NodeKind::mul:
            val[i] = val[ins.a] * val[ins.b];
            break;
        case NodeKind::div:
            val[i] = val[ins.a] / val[ins.b];
            break;
        case NodeKind::neg:
            val[i] = -val[ins.a];
            break;
        case NodeKind::exp:
            val[i] = std::exp(val[ins.a]);
            break;
        case NodeKind::power: {
            const cplx b = val[ins.a];
            const double mod = std::abs(b);
            if (!(mod > opt.vanish_tol))
                throw HoloError(HoloErrorKind::power_base_vanishes, "power base vanishes" + where(z));
            double arg = std::arg(b);
            if (mode == Mode::init && n.anchor) {
                const double a = n.anchor(anchor);
                if (std::abs(wrap(a - arg)) > 1e-6)
                    throw std::logic_error("power ledger anchor disagrees with the base argument");
                arg = a + wrap(arg - a);
            } else if (mode == Mode::step && opt.track_branches) {
                const double d = std::arg(b / prev.base[ins.ledger]);
                if (std::abs(d) > opt.max_phase_step)
                    return false;
                arg = prev.arg[ins.ledger] + d;
            }
            next.base[ins.ledger] = b;
            next.arg[ins.ledger] = arg;
            val[i] = std::exp(n.s * cplx(std::log(mod), arg));
            break;
        }
        }
    }
    out = val.back();
    return true;
}

}  // namespace

HoloExpr::HoloExpr(cplx c)
{
    Node n;
    n.kind = NodeKind::constant;
    n.c0 = c;
    node_ = make_node(std::move(n));
}

HoloExpr HoloExpr::affine(cplx a, cplx b)
{
    Node n;
    n.kind = NodeKind::affine;
    n.c0 = a;
    n.c1 = b;
    return HoloExpr(make_node(std::move(n)));
}

HoloExpr HoloExpr::momentum(int mu, const Eigen::Vector3d& anchor, const Mat3& pre, const Mat3& post)
{
    if (mu < 0 || mu > 2)
        throw std::invalid_argument("momentum component must be 0, 1 or 2");
    Node n;
    n.kind = NodeKind::momentum;
    n.mu = mu;
    n.pre = pre;
    n.v = post * anchor;
    return HoloExpr(make_node(std::move(n)));
}

namespace {

HoloExpr::Node binary(NodeKind k, const NodePtr& a, const NodePtr& b)
{
    HoloExpr::Node n;
    n.kind = k;
    n.a = a;
    n.b = b;
    return n;
}

}  // namespace

HoloExpr operator+(const HoloExpr& a, const HoloExpr& b)
{
    return HoloExpr(make_node(binary(NodeKind::add, a.node_, b.node_)));
}

HoloExpr operator-(const HoloExpr& a, const HoloExpr& b)
{
    return HoloExpr(make_node(binary(NodeKind::sub, a.node_, b.node_)));
}

HoloExpr operator*(const HoloExpr& a, const HoloExpr& b)
{
    return HoloExpr(make_node(binary(NodeKind::mul, a.node_, b.node_)));
}

HoloExpr operator/(const HoloExpr& a, const HoloExpr& b)
{
    return HoloExpr(make_node(binary(NodeKind::div, a.node_, b.node_)));
}

HoloExpr HoloExpr::operator-() const
{
    return HoloExpr(make_node(binary(NodeKind::neg, node_, nullptr)));
}

HoloExpr exp(const HoloExpr& a)
{
    return HoloExpr(make_node(binary(NodeKind::exp, a.node_, nullptr)));
}

HoloExpr pow(const HoloExpr& base, double s, AnchorArg anchor)
{
    HoloExpr::Node n = binary(NodeKind::power, base.node_, nullptr);
    n.s = s;
    n.anchor = std::move(anchor);
    return HoloExpr(make_node(std::move(n)));
}

HoloExpr pow(const HoloExpr& base, double s)
{
    return pow(base, s, AnchorArg{});
}

cplx HoloExpr::evaluate_principal(cplx z) const
{
    const Program prog = compile(*this);
    Ledgers none;
    Ledgers next;
    cplx out;
    ContinuationOptions opt;
    evaluate(prog, z, z.real(), Mode::principal, none, next, out, opt);
    return out;
}

// ---------------------------------------------------------------- paths

StripPath StripPath::polyline(std::vector<cplx> vertices)
{
    if (vertices.size() < 2)
        throw HoloError(HoloErrorKind::invalid_path, "a strip path needs at least two vertices");
    for (const cplx& v : vertices) {
        if (!std::isfinite(v.real()) || !(v.imag() >= -1e-12 && v.imag() <= kPi + 1e-12))
            throw HoloError(HoloErrorKind::invalid_path, "path vertex outside the closed strip" + where(v));
    }
    return StripPath(std::move(vertices));
}

StripPath StripPath::straight(cplx from, cplx to)
{
    return polyline({from, to});
}

StripPath StripPath::vertical(double t, double height)
{
    return polyline({cplx(t, 0.0), cplx(t, height)});
}

StripPath StripPath::rectangle(double x0, double x1, double y0, double y1)
{
    return polyline({cplx(x0, y0), cplx(x1, y0), cplx(x1, y1), cplx(x0, y1), cplx(x0, y0)});
}

bool StripPath::closed() const
{
    return std::abs(start() - end()) < 1e-14;
}

double StripPath::length() const
{
    double l = 0.0;
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        l += std::abs(vertices_[i] - vertices_[i - 1]);
    return l;
}

StripPath StripPath::shifted(double dt) const
{
    std::vector<cplx> v = vertices_;
    for (cplx& x : v)
        x += dt;
    return StripPath(std::move(v));
}

StripPath lateral_offset_path(const StripPath& path, double offset)
{
    const auto& v = path.vertices();
    std::vector<cplx> out{v.front()};
    for (std::size_t i = 1; i < v.size(); ++i) {
        const cplx d = v[i] - v[i - 1];
        if (std::abs(d) == 0.0)
            continue;
        const cplx normal = cplx(0.0, 1.0) * d / std::abs(d) * offset;
        out.push_back(v[i - 1] + normal);
        out.push_back(v[i] + normal);
    }
    out.push_back(v.back());
    return StripPath(std::move(out));
}

// ---------------------------------------------------------------- continuation

struct Continuator::Impl {
    Program prog;
    ContinuationOptions opt;
    double anchor = 0.0;
    cplx pos;
    cplx value;
    Ledgers state;
    double step;
    long steps = 0;
};

Continuator::Continuator(const HoloExpr& expr, double anchor, const ContinuationOptions& options)
    : impl_(std::make_unique<Impl>())
{
    impl_->prog = compile(expr);
    impl_->opt = options;
    impl_->anchor = anchor;
    impl_->pos = cplx(anchor, 0.0);
    impl_->step = options.max_step;
    Ledgers none;
    evaluate(impl_->prog, impl_->pos, anchor, Mode::init, none, impl_->state, impl_->value, options);
}

Continuator::~Continuator() = default;
Continuator::Continuator(Continuator&&) noexcept = default;
Continuator& Continuator::operator=(Continuator&&) noexcept = default;

cplx Continuator::advance_to(cplx z)
{
    Impl& s = *impl_;
    const Mode mode = s.opt.track_branches ? Mode::step : Mode::principal;
    Ledgers next;
    cplx out;
    while (s.pos != z) {
        const cplx d = z - s.pos;
        const double dist = std::abs(d);
        const bool last = dist <= s.step;
        const cplx target = last ? z : s.pos + d / dist * s.step;
        if (!evaluate(s.prog, target, s.anchor, mode, s.state, next, out, s.opt)) {
            s.step *= 0.5;
            if (s.step < s.opt.min_step)
                throw HoloError(HoloErrorKind::refinement_limit, "phase step cannot be bounded" + where(s.pos));
            continue;
        }
        std::swap(s.state, next);
        s.value = out;
        s.pos = target;
        ++s.steps;
        s.step = std::min(s.opt.max_step, 2.0 * s.step);
    }
    return s.value;
}

cplx Continuator::value() const
{
    return impl_->value;
}

cplx Continuator::position() const
{
    return impl_->pos;
}

long Continuator::steps() const
{
    return impl_->steps;
}

namespace {

cplx run_path(const HoloExpr& expr, const StripPath& path, const ContinuationOptions& options)
{
    Continuator c(expr, path.start().real(), options);
    for (std::size_t i = 1; i < path.vertices().size(); ++i)
        c.advance_to(path.vertices()[i]);
    return c.value();
}

void require_real_start(const StripPath& path)
{
    if (path.start().imag() != 0.0)
        throw HoloError(HoloErrorKind::invalid_path, "continuation must start on the real axis");
}

}  // namespace

cplx continue_along(const HoloExpr& expr, const StripPath& path, const ContinuationOptions& options)
{
    require_real_start(path);
    try {
        return run_path(expr, path, options);
    } catch (const HoloError& e) {
        const bool local = e.kind() == HoloErrorKind::power_base_vanishes ||
                           e.kind() == HoloErrorKind::refinement_limit;
        if (!local || options.lateral_offset <= 0.0)
            throw;
        const cplx left = run_path(expr, lateral_offset_path(path, options.lateral_offset), options);
        const cplx right = run_path(expr, lateral_offset_path(path, -options.lateral_offset), options);
        if (std::abs(left - right) > options.homotopy_tol * std::max(1.0, std::abs(left)))
            throw HoloError(e.kind(), std::string(e.what()) + "; the offset paths disagree (branch point on the path)");
        return 0.5 * (left + right);
    }
}

namespace {

// 8-point Gauss-Legendre on [-1, 1]
constexpr std::array<double, 8> kGlNodes{-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                         -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                         0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGlWeights{0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                           0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                           0.2223810344533745, 0.1012285362903763};

}  // namespace

cplx gauss_legendre_segment(const std::function<cplx(cplx)>& f, cplx a, cplx b, int panels)
{
    cplx sum = 0.0;
    const cplx h = (b - a) / static_cast<double>(panels);
    for (int k = 0; k < panels; ++k) {
        const cplx mid = a + (k + 0.5) * h;
        for (std::size_t j = 0; j < kGlNodes.size(); ++j)
            sum += kGlWeights[j] * f(mid + 0.5 * h * kGlNodes[j]);
    }
    return sum * 0.5 * h;
}

MoreraResult morera(const HoloExpr& expr, const StripPath& contour, const ContinuationOptions& options,
                    double panel)
{
    if (!contour.closed())
        throw HoloError(HoloErrorKind::invalid_path, "Morera contour must be closed");
    Continuator c(expr, contour.start().real(), options);
    const cplx v0 = c.advance_to(contour.start());
    cplx integral = 0.0;
    const auto& v = contour.vertices();
    for (std::size_t i = 1; i < v.size(); ++i) {
        const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(v[i] - v[i - 1]) / panel)));
        integral += gauss_legendre_segment([&c](cplx z) { return c.advance_to(z); }, v[i - 1], v[i], panels);
        c.advance_to(v[i]);
    }
    return {std::abs(integral), std::abs(c.value() - v0)};
}

double morera_residual(const HoloExpr& expr, const StripPath& contour, const ContinuationOptions& options)
{
    return morera(expr, contour, options).residual;
}

cplx boundary_at_ipi(const HoloExpr& expr, double anchor_t, const ContinuationOptions& options)
{
    return continue_along(expr, StripPath::vertical(anchor_t), options);
}

// ---------------------------------------------------------------- matrices

HoloMatrix& HoloMatrix::add(const HoloExpr& scalar, const CMatX& coeff)
{
    if (!terms_.empty() && (coeff.rows() != rows() || coeff.cols() != cols()))
        throw std::invalid_argument("HoloMatrix terms must share one shape");
    terms_.push_back({scalar, coeff});
    return *this;
}

Eigen::Index HoloMatrix::rows() const
{
    return terms_.empty() ? 0 : terms_.front().coeff.rows();
}

Eigen::Index HoloMatrix::cols() const
{
    return terms_.empty() ? 0 : terms_.front().coeff.cols();
}

MatrixContinuator::MatrixContinuator(const HoloMatrix& m, double anchor, const ContinuationOptions& options)
{
    for (const auto& t : m.terms()) {
        parts_.emplace_back(t.scalar, anchor, options);
        coeffs_.push_back(t.coeff);
    }
}

CMatX MatrixContinuator::advance_to(cplx z)
{
    for (auto& p : parts_)
        p.advance_to(z);
    return value();
}

CMatX MatrixContinuator::value() const
{
    CMatX out = CMatX::Zero(coeffs_.front().rows(), coeffs_.front().cols());
    for (std::size_t i = 0; i < parts_.size(); ++i)
        out += parts_[i].value() * coeffs_[i];
    return out;
}

CMatX continue_along(const HoloMatrix& m, const StripPath& path, const ContinuationOptions& options)
{
    require_real_start(path);
    MatrixContinuator c(m, path.start().real(), options);
    for (std::size_t i = 1; i < path.vertices().size(); ++i)
        c.advance_to(path.vertices()[i]);
    return c.value();
}

// ---------------------------------------------------------------- regions

GammaRegion GammaRegion::from_cones(const SpatialSector& c1, const SpatialSector& c2, double m)
{
    const DifferenceCone d = difference_cone(c1, c2);
    if (!d.salient)
        throw ConeGeometryError("C_R2 - C_R1 is not salient");
    return {m, d.beta - kPi / 2, d.alpha + kPi / 2};
}

bool gamma_contains(const CVec3& k, const GammaRegion& region)
{
    if (std::abs(minkowski_product(k, k) - region.m * region.m) >= 1e-10)
        return false;
    const double y1 = k.k1.imag();
    const double y2 = k.k2.imag();
    if (std::hypot(y1, y2) == 0.0)
        return false;
    double off = std::fmod(std::atan2(y2, y1) - region.lo, 2.0 * kPi);
    if (off < 0.0)
        off += 2.0 * kPi;
    return off > 0.0 && off < region.hi - region.lo;
}

CVec3 gamma0_compose(double r, double theta, const MomentumPoint& q)
{
    const Mat3 rot = rotation(r);
    const CMat3 m = rot.cast<cplx>() * boost1(cplx(0.0, theta)) * rot.transpose().cast<cplx>();
    return CVec3::from(m * q.vec().cast<cplx>());
}

Gamma0Decomposition gamma0_decompose(const CVec3& k, double m)
{
    const Vec3 im = k.imag();
    const double spatial = std::hypot(im.x1, im.x2);
    if (!(spatial > 1e-12))
        throw HoloError(HoloErrorKind::not_in_gamma0, "imaginary part has no spatial component");
    const double r = std::atan2(im.x2, im.x1);
    const CVec3 kr = CVec3::from(rotation(-r).cast<cplx>() * k.vec());
    const double theta = std::atan2(kr.k1.imag(), kr.k0.real());
    if (!(theta > 0.0 && theta < kPi))
        throw HoloError(HoloErrorKind::not_in_gamma0, "no decomposition with theta in (0, pi)");
    const Eigen::Vector3d qr(0.0, kr.k0.imag() / std::sin(theta), kr.k2.real());
    const Eigen::Vector3d qv = rotation(r) * qr;
    const MomentumPoint q = shell_point(qv(1), qv(2), m);
    const CVec3 back = gamma0_compose(r, theta, q);
    const double res = (back.vec() - k.vec()).cwiseAbs().maxCoeff();
    if (res > 1e-10 * std::max(1.0, k.vec().cwiseAbs().maxCoeff()))
        throw HoloError(HoloErrorKind::not_in_gamma0, "point is not of the form R Lambda_1(i theta) R^-1 q");
    return {r, theta, q};
}

// ---------------------------------------------------------------- ODE route

namespace {

struct FamilyState {
    std::vector<MatrixContinuator> members;  // t0 = 0, +d, -d, +2d, -2d
    double delta;

    FamilyState(const HoloFamily& h, double anchor, const OdeOptions& o) : delta(o.fd_delta)
    {
        for (double t0 : {0.0, delta, -delta, 2.0 * delta, -2.0 * delta})
            members.emplace_back(h(t0), anchor, o.continuation);
    }

    // h and h_hat at z
    std::pair<CMatX, CMatX> at(cplx z)
    {
        std::array<CMatX, 5> v;
        for (int i = 0; i < 5; ++i)
            v[i] = members[i].advance_to(z);
        const CMatX hhat = (8.0 * (v[1] - v[2]) - (v[3] - v[4])) / (12.0 * delta);
        return {v[0], hhat};
    }
};

struct Singular {
    cplx z;
};

CMatX generator(const std::pair<CMatX, CMatX>& hh, cplx z, const OdeOptions& o)
{
    const CMatX& h = hh.first;
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    const cplx det = h.determinant();
    if (std::abs(det) < o.det_tol * std::pow(scale, static_cast<double>(h.rows())))
        throw Singular{z};
    return h.partialPivLu().solve(hh.second);
}

CMatX integrate(const HoloFamily& h, const CMatX& f0, const StripPath& path, const OdeOptions& o)
{
    FamilyState fam(h, path.start().real(), o);
    CMatX f = f0;
    cplx z = path.start();
    const auto& v = path.vertices();
    for (std::size_t i = 1; i < v.size(); ++i) {
        while (z != v[i]) {
            const CMatX a0 = generator(fam.at(z), z, o);
            const double norm = std::max(a0.cwiseAbs().rowwise().sum().maxCoeff(), 1e-300);
            const double hmax = std::min(o.max_step, o.norm_step / norm);
            const cplx d = v[i] - z;
            const double dist = std::abs(d);
            const cplx step = dist <= hmax ? d : d / dist * hmax;
            const CMatX a1 = generator(fam.at(z + 0.5 * step), z + 0.5 * step, o);
            const CMatX a2 = a1;
            const CMatX a3 = generator(fam.at(z + step), z + step, o);
            const CMatX k1 = f * a0 * step;
            const CMatX k2 = (f + 0.5 * k1) * a1 * step;
            const CMatX k3 = (f + 0.5 * k2) * a2 * step;
            const CMatX k4 = (f + k3) * a3 * step;
            f += (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
            z = dist <= hmax ? v[i] : z + step;
        }
    }
    return f;
}

}  // namespace

CMatX ode_continue(const HoloFamily& h, const std::function<CMatX(double)>& f1_real, const StripPath& path,
                   const OdeOptions& options)
{
    require_real_start(path);
    try {
        return integrate(h, f1_real(path.start().real()), path, options);
    } catch (const Singular& s) {
        if (!options.allow_detour)
            throw HoloError(HoloErrorKind::singular_determinant, "det h vanishes" + where(s.z));
    }
    const double t0 = options.detour_shift;
    const StripPath moved = path.shifted(t0);
    try {
        const CMatX f_moved = integrate(h, f1_real(moved.start().real()), moved, options);
        const CMatX h0 = continue_along(h(0.0), moved, options.continuation);
        const CMatX hm = continue_along(h(-t0), moved, options.continuation);
        const double scale = std::max(1.0, h0.cwiseAbs().maxCoeff());
        if (std::abs(h0.determinant()) < options.det_tol * std::pow(scale, static_cast<double>(h0.rows())))
            throw Singular{moved.end()};
        return f_moved * h0.partialPivLu().solve(hm);
    } catch (const Singular& s) {
        throw HoloError(HoloErrorKind::singular_determinant, "det h vanishes on the shifted path too" + where(s.z));
    }
}

}  // namespace anyons
