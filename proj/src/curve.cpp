#include "geocurve/curve.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

namespace geocurve {

namespace {

constexpr double kMinLoopSpeed = 1e-3;
constexpr double kMinLoopRadius = 0.1;
constexpr double kMaxLoopCurvature = 5.0;
constexpr int kLoopCheckGrid = 2048;
constexpr int kMaxLoopDraws = 1000;

double two_pi() { return 2.0 * std::numbers::pi; }

// ---------------------------------------------------------------------------
// Cubic spline interpolation of vector-valued data, natural or periodic.

void solve_tridiagonal(std::vector<double> lower, std::vector<double> diag,
                       std::vector<double> upper, Mat& rhs) {
    const long n = static_cast<long>(diag.size());
    for (long i = 1; i < n; ++i) {
        const double w = lower[i] / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs.row(i) -= w * rhs.row(i - 1);
    }
    rhs.row(n - 1) /= diag[n - 1];
    for (long i = n - 2; i >= 0; --i)
        rhs.row(i) = (rhs.row(i) - upper[i] * rhs.row(i + 1)) / diag[i];
}

// Same system with the two periodic corner entries, via Sherman-Morrison.
void solve_cyclic_tridiagonal(const std::vector<double>& lower, std::vector<double> diag,
                              const std::vector<double>& upper, double corner, Mat& rhs) {
    const long n = static_cast<long>(diag.size());
    const double gamma = -diag[0];
    diag[0] -= gamma;
    diag[n - 1] -= corner * corner / gamma;

    Mat work(n, rhs.cols() + 1);
    work.leftCols(rhs.cols()) = rhs;
    work.col(rhs.cols()).setZero();
    work(0, rhs.cols()) = gamma;
    work(n - 1, rhs.cols()) = corner;
    solve_tridiagonal(lower, diag, upper, work);

    const auto z = work.col(rhs.cols());
    for (long c = 0; c < rhs.cols(); ++c) {
        const auto x = work.col(c);
        const double fact =
            (x[0] + corner * x[n - 1] / gamma) / (1.0 + z[0] + corner * z[n - 1] / gamma);
        rhs.col(c) = x - fact * z;
    }
}

// Interpolating cubic spline through points[i] at params[i]; periodic splines
// close the loop over `period`.
class SplineCurve {
  public:
    SplineCurve(Mat points, std::vector<double> params, bool closed, double period)
        : y_(std::move(points)), u_(std::move(params)), closed_(closed), period_(period) {
        const long n = static_cast<long>(u_.size());
        if (n < 4)
            throw Error(ErrorCode::insufficient_data, "spline needs at least 4 samples");
        const long segs = closed_ ? n : n - 1;
        h_.resize(segs);
        for (long i = 0; i < segs; ++i)
            h_[i] = (i + 1 < n ? u_[i + 1] : u_[0] + period_) - u_[i];

        Mat rhs = Mat::Zero(n, y_.cols());
        std::vector<double> lower(n, 0.0), diag(n, 1.0), upper(n, 0.0);
        auto slope = [&](long seg) -> Eigen::RowVectorXd {
            const long a = seg % n, b = (seg + 1) % n;
            return (y_.row(b) - y_.row(a)) / h_[seg];
        };
        if (closed_) {
            for (long i = 0; i < n; ++i) {
                const long prev = (i + n - 1) % n;
                lower[i] = h_[prev] / 6.0;
                diag[i] = (h_[prev] + h_[i]) / 3.0;
                upper[i] = h_[i] / 6.0;
                rhs.row(i) = slope(i) - slope(prev);
            }
            m_ = rhs;
            solve_cyclic_tridiagonal(lower, diag, upper, h_[n - 1] / 6.0, m_);
        } else {
            // Natural boundary: vanishing second derivative at both ends.
            for (long i = 1; i + 1 < n; ++i) {
                lower[i] = h_[i - 1] / 6.0;
                diag[i] = (h_[i - 1] + h_[i]) / 3.0;
                upper[i] = h_[i] / 6.0;
                rhs.row(i) = slope(i) - slope(i - 1);
            }
            m_ = rhs;
            solve_tridiagonal(lower, diag, upper, m_);
        }
    }

    double param_begin() const { return u_.front(); }
    double param_end() const { return closed_ ? u_.front() + period_ : u_.back(); }
    long segments() const { return static_cast<long>(h_.size()); }
    double knot(long seg) const { return u_[seg]; }
    double seg_width(long seg) const { return h_[seg]; }

    Vec eval(double u) const {
        const auto [seg, t] = locate(u);
        const long n = static_cast<long>(u_.size());
        const long a = seg % n, b = (seg + 1) % n;
        const double h = h_[seg];
        const double A = (h - t) / h, B = t / h;
        return (A * y_.row(a) + B * y_.row(b) +
                h * h / 6.0 * ((A * A * A - A) * m_.row(a) + (B * B * B - B) * m_.row(b)))
            .transpose();
    }

    Vec derivative(double u) const {
        const auto [seg, t] = locate(u);
        const long n = static_cast<long>(u_.size());
        const long a = seg % n, b = (seg + 1) % n;
        const double h = h_[seg];
        const double A = (h - t) / h, B = t / h;
        return ((y_.row(b) - y_.row(a)) / h +
                h / 6.0 * (-(3.0 * A * A - 1.0) * m_.row(a) + (3.0 * B * B - 1.0) * m_.row(b)))
            .transpose();
    }

  private:
    std::pair<long, double> locate(double u) const {
        if (closed_) {
            double rel = std::fmod(u - u_.front(), period_);
            if (rel < 0.0) rel += period_;
            u = u_.front() + rel;
        } else {
            u = std::clamp(u, u_.front(), u_.back());
        }
        const long n = static_cast<long>(u_.size());
        long seg = static_cast<long>(std::upper_bound(u_.begin(), u_.end(), u) - u_.begin()) - 1;
        seg = std::clamp(seg, 0L, segments() - 1);
        (void)n;
        return {seg, u - u_[seg]};
    }

    Mat y_;                   // one sample per row
    std::vector<double> u_;   // knot parameters
    bool closed_;
    double period_;
    std::vector<double> h_;   // segment widths, including the wrap segment
    Mat m_;                   // spline second derivatives at the knots
};

// ---------------------------------------------------------------------------
// Arc-length resampling machinery shared by the public resampler and the
// generators.  Interpolation runs over chord-length parameters, the length
// table is composite Simpson on the spline speed across a refined grid.

double form_speed(const SpaceSpec* space, const Vec& d) {
    if (space == nullptr || space->kind != SpaceKind::hyperbolic) return d.norm();
    const double sq = inner(*space, d, d);
    return sq <= 0.0 ? 0.0 : std::sqrt(sq);
}

struct ArcSampled {
    std::vector<Vec> points;
    std::vector<double> s;
    double total = 0.0;
};

ArcSampled resample_core(const SpaceSpec* form_space, const std::vector<Vec>& pts, bool closed,
                         int n, const std::function<Vec(const Vec&)>& project) {
    const long count = static_cast<long>(pts.size());
    if (count < 5)
        throw Error(ErrorCode::insufficient_data, "resampling needs at least 5 samples");
    if (n < 8)
        throw Error(ErrorCode::invalid_argument, "resampling target must be at least 8 samples");

    std::vector<double> params(count, 0.0);
    for (long i = 1; i < count; ++i) {
        const double chord = (pts[i] - pts[i - 1]).norm();
        if (chord <= 1e-13 * std::max(1.0, pts[i].norm()))
            throw Error(ErrorCode::regularity, "degenerate curve: consecutive duplicate samples", i);
        params[i] = params[i - 1] + chord;
    }
    double period = params.back();
    if (closed) {
        const double wrap = (pts.front() - pts.back()).norm();
        if (wrap <= 1e-13 * std::max(1.0, pts.front().norm()))
            throw Error(ErrorCode::regularity, "closed curve duplicates its first sample at the end");
        period += wrap;
    }

    Mat rows(count, pts.front().size());
    for (long i = 0; i < count; ++i) rows.row(i) = pts[i];
    SplineCurve spline(std::move(rows), params, closed, period);

    // Cumulative length over a grid refining every spline segment, Simpson on
    // each cell (the speed is smooth inside a segment, kinked only at knots).
    const long per_seg = std::max<long>(8, (4L * n) / std::max(1L, spline.segments()) + 1);
    const long cells = spline.segments() * per_seg;
    std::vector<double> grid_u(cells + 1), cum(cells + 1, 0.0);
    {
        long g = 0;
        for (long seg = 0; seg < spline.segments(); ++seg)
            for (long j = 0; j < per_seg; ++j)
                grid_u[g++] = spline.knot(seg) + spline.seg_width(seg) * double(j) / per_seg;
        grid_u[cells] = spline.param_end();
    }
    double prev_speed = form_speed(form_space, spline.derivative(grid_u[0]));
    for (long g = 0; g < cells; ++g) {
        const double a = grid_u[g], b = grid_u[g + 1];
        const double mid = form_speed(form_space, spline.derivative(0.5 * (a + b)));
        const double next = form_speed(form_space, spline.derivative(b));
        cum[g + 1] = cum[g] + (b - a) / 6.0 * (prev_speed + 4.0 * mid + next);
        prev_speed = next;
    }
    const double total = cum[cells];
    if (!(total > 0.0))
        throw Error(ErrorCode::regularity, "curve has vanishing length");

    // Invert the length table at uniform arc-length targets: quadratic seed
    // inside the bracketing cell, then Newton steps against a local Simpson
    // partial integral.
    ArcSampled out;
    out.points.resize(n);
    out.s.resize(n);
    long cell = 0;
    for (long j = 0; j < n; ++j) {
        const double target = closed ? total * double(j) / n : total * double(j) / (n - 1);
        while (cell + 1 < cells && cum[cell + 1] < target) ++cell;
        const double a = grid_u[cell], b = grid_u[cell + 1];
        const double va = form_speed(form_space, spline.derivative(a));
        const double vb = form_speed(form_space, spline.derivative(b));
        double u;
        const double need = target - cum[cell];
        const double accel = (vb - va) / (b - a);
        if (std::abs(accel) > 1e-12 * std::max(va, vb)) {
            const double disc = std::max(0.0, va * va + 2.0 * accel * need);
            u = a + (std::sqrt(disc) - va) / accel;
        } else {
            u = a + (va > 0.0 ? need / va : 0.0);
        }
        u = std::clamp(u, a, b);
        for (int it = 0; it < 2; ++it) {
            const double mid = form_speed(form_space, spline.derivative(0.5 * (a + u)));
            const double vu = form_speed(form_space, spline.derivative(u));
            const double len = (u - a) / 6.0 * (va + 4.0 * mid + vu);
            if (vu <= 0.0) break;
            u = std::clamp(u - (len - need) / vu, a, b);
        }
        out.points[j] = project(spline.eval(u));
        out.s[j] = target;
    }
    out.total = total;
    return out;
}

Vec embed_coords(const Vec& coords, const std::vector<Vec>& basis) {
    Vec out = Vec::Zero(basis.front().size());
    for (long j = 0; j < coords.size(); ++j) out += coords[j] * basis[j];
    return out;
}

std::function<Vec(const Vec&)> model_projector(const SpaceSpec& space) {
    if (!space.curved()) return [](const Vec& x) { return x; };
    SpaceSpec copy = space;
    return [copy](const Vec& x) { return project_to_model(copy, x); };
}

}  // namespace

// ---------------------------------------------------------------------------
// Curve

double Curve::step() const {
    if (s.size() < 2)
        throw Error(ErrorCode::insufficient_data, "curve has no parameter step");
    if (!uniform())
        throw Error(ErrorCode::invalid_argument, "curve parameters are not uniform");
    return s[1] - s[0];
}

bool Curve::uniform(double rel_tol) const {
    if (s.size() < 2) return false;
    const double h = s[1] - s[0];
    if (!(h > 0.0)) return false;
    for (std::size_t k = 1; k < s.size(); ++k)
        if (std::abs(s[k] - s[k - 1] - h) > rel_tol * h) return false;
    return true;
}

double Curve::total_length() const {
    if (s.empty()) return 0.0;
    return closed ? s.back() - s.front() + step() : s.back() - s.front();
}

void validate_curve(const Curve& curve) {
    validate_spec(curve.space);
    if (curve.samples.size() != curve.s.size())
        throw Error(ErrorCode::dimension_mismatch, "curve sample/parameter count mismatch");
    if (curve.samples.size() < 5)
        throw Error(ErrorCode::insufficient_data, "curve needs at least 5 samples");
    for (std::size_t k = 1; k < curve.s.size(); ++k)
        if (!(curve.s[k] > curve.s[k - 1]))
            throw Error(ErrorCode::invalid_argument, "curve parameters must increase strictly",
                        static_cast<long>(k));
    for (std::size_t k = 0; k < curve.samples.size(); ++k)
        validate_point(curve.space, Point{curve.samples[k]});
}

CurveDerivatives derivatives(const Curve& curve) {
    validate_curve(curve);
    const double h = curve.step();
    CurveDerivatives out;
    out.tangent = detail::fd_derivative(curve.samples, h, curve.closed);
    out.acceleration = detail::fd_second_derivative(curve.samples, h, curve.closed);
    for (std::size_t k = 0; k < out.tangent.size(); ++k)
        out.tangent[k] = project_to_tangent(curve.space, curve.samples[k], out.tangent[k]);
    return out;
}

Curve arc_length_resample(const Curve& curve, int n) {
    validate_curve(curve);
    ArcSampled res =
        resample_core(&curve.space, curve.samples, curve.closed, n, model_projector(curve.space));
    return Curve{curve.space, std::move(res.points), std::move(res.s), curve.closed};
}

// ---------------------------------------------------------------------------
// Fourier loops

Vec FourierLoopSpec::eval(double theta) const {
    Vec out = cos_coeffs.col(0);
    for (int k = 1; k <= modes; ++k)
        out += cos_coeffs.col(k) * std::cos(k * theta) + sin_coeffs.col(k - 1) * std::sin(k * theta);
    return out;
}

Vec FourierLoopSpec::eval_derivative(double theta) const {
    Vec out = Vec::Zero(dim);
    for (int k = 1; k <= modes; ++k)
        out += k * (-cos_coeffs.col(k) * std::sin(k * theta) + sin_coeffs.col(k - 1) * std::cos(k * theta));
    return out;
}

namespace {

FourierLoopSpec draw_loop(int dim, int modes, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    FourierLoopSpec loop;
    loop.dim = dim;
    loop.modes = modes;
    loop.cos_coeffs = Mat::Zero(dim, modes + 1);
    loop.sin_coeffs = Mat::Zero(dim, modes);
    for (int j = 0; j < dim; ++j) {
        loop.cos_coeffs(j, 0) = 0.5 * gauss(rng);
        for (int k = 1; k <= modes; ++k) {
            const double amp = 1.0 / (k * k);
            loop.cos_coeffs(j, k) = amp * gauss(rng);
            loop.sin_coeffs(j, k - 1) = amp * gauss(rng);
        }
    }
    return loop;
}

// Caps the turning rate per unit of image arc length: under this bound the
// unit-speed reparametrization keeps every feature wide enough for the
// downstream finite-difference and transport steps at the default sampling
// densities.
bool bounded_turning(const std::vector<Vec>& velocity) {
    const int n = static_cast<int>(velocity.size());
    const double dtheta = two_pi() / n;
    for (int g = 0; g < n; ++g) {
        const Vec& v0 = velocity[g];
        const Vec& v1 = velocity[(g + 1) % n];
        const double speed = 0.5 * (v0.norm() + v1.norm());
        if (speed < kMinLoopSpeed) return false;
        const double turn = (v1 / v1.norm() - v0 / v0.norm()).norm() / (speed * dtheta);
        if (turn > kMaxLoopCurvature) return false;
    }
    return true;
}

bool regular_on_sphere(const FourierLoopSpec& loop) {
    std::vector<Vec> velocity(kLoopCheckGrid);
    for (int g = 0; g < kLoopCheckGrid; ++g) {
        const double theta = two_pi() * g / kLoopCheckGrid;
        const Vec x = loop.eval(theta);
        const double radius = x.norm();
        if (radius < kMinLoopRadius) return false;
        const Vec d = loop.eval_derivative(theta);
        const Vec unit = x / radius;
        velocity[g] = (d - unit.dot(d) * unit) / radius;
        if (velocity[g].norm() < kMinLoopSpeed) return false;
    }
    return bounded_turning(velocity);
}

bool regular_free(const FourierLoopSpec& loop) {
    std::vector<Vec> velocity(kLoopCheckGrid);
    for (int g = 0; g < kLoopCheckGrid; ++g) {
        const double theta = two_pi() * g / kLoopCheckGrid;
        velocity[g] = loop.eval_derivative(theta);
        if (velocity[g].norm() < kMinLoopSpeed) return false;
    }
    return bounded_turning(velocity);
}

}  // namespace

FourierLoopSpec FourierLoopSpec::random_on_sphere(int dim, std::uint64_t seed, int modes) {
    if (dim < 2)
        throw Error(ErrorCode::invalid_argument, "loops need at least 2 coordinates");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kMaxLoopDraws; ++attempt) {
        FourierLoopSpec loop = draw_loop(dim, modes, rng);
        if (regular_on_sphere(loop)) return loop;
    }
    throw Error(ErrorCode::regularity, "no regular spherical loop found for this seed");
}

FourierLoopSpec FourierLoopSpec::random_free(int dim, std::uint64_t seed, int modes) {
    if (dim < 2)
        throw Error(ErrorCode::invalid_argument, "loops need at least 2 coordinates");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kMaxLoopDraws; ++attempt) {
        FourierLoopSpec loop = draw_loop(dim, modes, rng);
        if (regular_free(loop)) return loop;
    }
    throw Error(ErrorCode::regularity, "no regular free loop found for this seed");
}

FourierLoopSpec FourierLoopSpec::circle(int dim) {
    if (dim < 2)
        throw Error(ErrorCode::invalid_argument, "loops need at least 2 coordinates");
    FourierLoopSpec loop;
    loop.dim = dim;
    loop.modes = 1;
    loop.cos_coeffs = Mat::Zero(dim, 2);
    loop.sin_coeffs = Mat::Zero(dim, 1);
    loop.cos_coeffs(0, 1) = 1.0;
    loop.sin_coeffs(1, 0) = 1.0;
    return loop;
}

// ---------------------------------------------------------------------------
// Gram-Schmidt against the ambient form

std::vector<Vec> orthonormal_complement(const SpaceSpec& space, const std::vector<Vec>& fixed,
                                        int count) {
    const int dim = space.embedding_dim();
    std::vector<Vec> basis;    // unit vectors, |<b,b>| = 1
    std::vector<double> sign;  // <b,b>, -1 for the timelike direction
    auto add = [&](const Vec& w) -> bool {
        Vec v = w;
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t j = 0; j < basis.size(); ++j)
                v -= sign[j] * inner(space, v, basis[j]) * basis[j];
        const double sq = inner(space, v, v);
        if (std::abs(sq) < 1e-12 || v.norm() < 1e-6) return false;
        basis.push_back(v / std::sqrt(std::abs(sq)));
        sign.push_back(sq > 0.0 ? 1.0 : -1.0);
        return true;
    };
    for (const Vec& f : fixed)
        if (!add(f))
            throw Error(ErrorCode::invalid_argument, "fixed directions are linearly dependent");
    const std::size_t skip = fixed.size();
    for (int axis = 0; axis < dim && basis.size() < skip + count; ++axis)
        add(Vec::Unit(dim, axis));
    if (basis.size() < skip + count)
        throw Error(ErrorCode::invalid_argument, "complement basis is rank deficient");

    std::vector<Vec> out(basis.begin() + skip, basis.end());
    std::vector<double> out_sign(sign.begin() + skip, sign.end());
    // List a timelike vector first, future-pointing.
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out_sign[i] < 0.0) {
            if (out[i][0] < 0.0) out[i] = -out[i];
            std::swap(out[i], out[0]);
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

// Unit-speed loop on the unit sphere of R^dim: dense evaluation of the
// normalized Fourier loop followed by arc-length resampling.
ArcSampled unit_speed_sphere_loop(const FourierLoopSpec& loop, int n) {
    const int grid = std::max(4096, 4 * n);
    std::vector<Vec> pts(grid);
    for (int g = 0; g < grid; ++g) {
        Vec x = loop.eval(two_pi() * g / grid);
        const double radius = x.norm();
        if (radius < 1e-8)
            throw Error(ErrorCode::regularity, "loop passes through the origin");
        pts[g] = x / radius;
    }
    return resample_core(nullptr, pts, true, n, [](const Vec& x) { return x / x.norm(); });
}

Curve resample_embedded_closed(const SpaceSpec& space, const std::vector<Vec>& dense, int n) {
    ArcSampled res = resample_core(&space, dense, true, n, model_projector(space));
    Curve curve{space, std::move(res.points), std::move(res.s), true};
    return curve;
}

}  // namespace

Curve generate_geodesic_sphere_curve(const SpaceSpec& space, const Point& p, double z0,
                                     const FourierLoopSpec& loop, int n) {
    validate_point(space, p);
    if (!(z0 > 0.0))
        throw Error(ErrorCode::invalid_argument, "geodesic radius z0 must be positive");
    if (space.kind == SpaceKind::sphere && !(z0 < 0.5 * std::numbers::pi * space.r))
        throw Error(ErrorCode::domain, "geodesic radius must stay below pi r / 2 on the sphere");
    if (loop.dim != space.m + 1)
        throw Error(ErrorCode::dimension_mismatch, "loop dimension must match the tangent space");

    std::vector<Vec> tangent_basis =
        space.curved() ? orthonormal_complement(space, {p.coords}, space.m + 1)
                       : orthonormal_complement(space, {}, space.m + 1);

    ArcSampled dir = unit_speed_sphere_loop(loop, n);

    double scale_p = 1.0, scale_w = z0, c0 = 1.0 / z0;
    if (space.kind == SpaceKind::sphere) {
        const double a = z0 / space.r;
        scale_p = std::cos(a);
        scale_w = space.r * std::sin(a);
        c0 = 1.0 / scale_w;
    } else if (space.kind == SpaceKind::hyperbolic) {
        const double a = z0 / space.r;
        scale_p = std::cosh(a);
        scale_w = space.r * std::sinh(a);
        c0 = 1.0 / scale_w;
    }

    Curve curve;
    curve.space = space;
    curve.closed = true;
    curve.samples.resize(n);
    curve.s.resize(n);
    for (int k = 0; k < n; ++k) {
        const Vec w = embed_coords(dir.points[k], tangent_basis);
        curve.samples[k] = scale_p * p.coords + scale_w * w;
        curve.s[k] = dir.s[k] / c0;
    }
    return curve;
}

Curve generate_geodesic(const SpaceSpec& space, const Point& p, const Vec& v, int n) {
    validate_point(space, p);
    if (n < 8)
        throw Error(ErrorCode::invalid_argument, "geodesic needs at least 8 samples");
    Curve curve;
    curve.space = space;
    curve.samples.resize(n);
    curve.s.resize(n);
    if (space.kind == SpaceKind::sphere) {
        curve.closed = true;
        const double length = two_pi() * space.r;
        for (int k = 0; k < n; ++k) {
            curve.s[k] = length * k / n;
            curve.samples[k] = exp_map(space, p, v, curve.s[k]).coords;
        }
    } else {
        curve.closed = false;
        const double length = std::numbers::pi * (space.curved() ? space.r : 1.0);
        for (int k = 0; k < n; ++k) {
            curve.s[k] = length * k / (n - 1);
            curve.samples[k] = exp_map(space, p, v, curve.s[k] - 0.5 * length).coords;
        }
    }
    return curve;
}

Curve generate_totally_geodesic_curve(const SpaceSpec& space, const Vec& normal,
                                      const FourierLoopSpec& loop, int n) {
    validate_spec(space);
    if (normal.size() != space.embedding_dim())
        throw Error(ErrorCode::dimension_mismatch, "section normal has the wrong dimension");
    if (normal.norm() < 1e-12)
        throw Error(ErrorCode::invalid_argument, "section normal must be nonzero");
    if (space.kind == SpaceKind::hyperbolic && !(inner(space, normal, normal) > 0.0))
        throw Error(ErrorCode::domain,
                    "hyperbolic sections need a spacelike normal to meet the upper sheet");

    // Basis of the hyperplane through the origin orthogonal to the normal
    // under the ambient form; for the hyperboloid it contains one timelike
    // direction, listed first.
    const int span = space.embedding_dim() - 1;
    std::vector<Vec> basis = orthonormal_complement(space, {normal}, span);

    if (space.m == 1) {
        // The hypersurface is one-dimensional: the curve is the geodesic
        // itself.  Pick the deterministic base point and direction in-plane.
        if (space.kind == SpaceKind::euclidean)
            return generate_geodesic(space, Point{Vec::Zero(space.embedding_dim())}, basis[0], n);
        const Point p0{space.r * basis[0]};
        return generate_geodesic(space, p0, basis[1], n);
    }

    const int grid = std::max(4096, 4 * n);
    std::vector<Vec> dense(grid);
    switch (space.kind) {
        case SpaceKind::sphere: {
            if (loop.dim != span)
                throw Error(ErrorCode::dimension_mismatch,
                            "spherical section loops need m + 1 coordinates");
            for (int g = 0; g < grid; ++g) {
                Vec x = loop.eval(two_pi() * g / grid);
                const double radius = x.norm();
                if (radius < 1e-8)
                    throw Error(ErrorCode::regularity, "loop passes through the origin");
                dense[g] = embed_coords(space.r / radius * x, basis);
            }
            break;
        }
        case SpaceKind::hyperbolic: {
            if (loop.dim != space.m)
                throw Error(ErrorCode::dimension_mismatch,
                            "hyperbolic section loops need m coordinates");
            // Spacelike loop coordinates, lifted onto the hyperboloid sheet
            // inside the section plane.  As with the ambient generator, the
            // lift contracts the Lorentz length of radial motion, so the
            // transverse excursion stays moderate to keep the lifted curve
            // resolvable at the default sampling densities.
            for (int g = 0; g < grid; ++g) {
                const Vec y = 0.5 * space.r * loop.eval(two_pi() * g / grid);
                Vec coords(space.m + 1);
                coords[0] = std::sqrt(space.r * space.r + y.squaredNorm());
                coords.tail(space.m) = y;
                dense[g] = embed_coords(coords, basis);
            }
            break;
        }
        case SpaceKind::euclidean: {
            if (loop.dim != space.m)
                throw Error(ErrorCode::dimension_mismatch,
                            "euclidean section loops need m coordinates");
            for (int g = 0; g < grid; ++g)
                dense[g] = embed_coords(loop.eval(two_pi() * g / grid), basis);
            break;
        }
    }
    return resample_embedded_closed(space, dense, n);
}

Curve generate_random_curve(const SpaceSpec& space, const FourierLoopSpec& loop, int n) {
    validate_spec(space);
    const int grid = std::max(4096, 4 * n);
    std::vector<Vec> dense(grid);
    switch (space.kind) {
        case SpaceKind::euclidean: {
            if (loop.dim != space.embedding_dim())
                throw Error(ErrorCode::dimension_mismatch, "loop dimension mismatch");
            for (int g = 0; g < grid; ++g) dense[g] = loop.eval(two_pi() * g / grid);
            break;
        }
        case SpaceKind::sphere: {
            if (loop.dim != space.embedding_dim())
                throw Error(ErrorCode::dimension_mismatch, "loop dimension mismatch");
            for (int g = 0; g < grid; ++g) {
                Vec x = loop.eval(two_pi() * g / grid);
                const double radius = x.norm();
                if (radius < 1e-8)
                    throw Error(ErrorCode::regularity, "loop passes through the origin");
                dense[g] = space.r / radius * x;
            }
            break;
        }
        case SpaceKind::hyperbolic: {
            if (loop.dim != space.m + 1)
                throw Error(ErrorCode::dimension_mismatch, "loop dimension mismatch");
            // The lift y -> (sqrt(r^2+|y|^2), y) contracts the Lorentz length
            // of radial motion far from the axis, which sharpens features of
            // the loop; keeping the transverse excursion moderate keeps the
            // lifted curve resolvable at the default sampling densities.
            for (int g = 0; g < grid; ++g) {
                const Vec y = 0.5 * space.r * loop.eval(two_pi() * g / grid);
                Vec x(space.embedding_dim());
                x[0] = std::sqrt(space.r * space.r + y.squaredNorm());
                x.tail(space.m + 1) = y;
                dense[g] = x;
            }
            break;
        }
    }
    return resample_embedded_closed(space, dense, n);
}

namespace {

Vec gaussian_vector(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> unit;
    Vec v(dim);
    for (int i = 0; i < dim; ++i) v[i] = unit(rng);
    return v;
}

}  // namespace

Point random_model_point(const SpaceSpec& space, std::mt19937_64& rng) {
    validate_spec(space);
    switch (space.kind) {
        case SpaceKind::euclidean:
            return Point{gaussian_vector(space.embedding_dim(), rng)};
        case SpaceKind::sphere: {
            Vec v = gaussian_vector(space.embedding_dim(), rng);
            while (v.norm() < 1e-6) v = gaussian_vector(space.embedding_dim(), rng);
            return Point{space.r * v.normalized()};
        }
        case SpaceKind::hyperbolic: {
            const Vec y = 0.5 * space.r * gaussian_vector(space.m + 1, rng);
            Vec q(space.embedding_dim());
            q[0] = std::sqrt(space.r * space.r + y.squaredNorm());
            q.tail(space.m + 1) = y;
            return Point{q};
        }
    }
    throw Error(ErrorCode::invalid_argument, "unknown space kind");
}

Vec random_unit_tangent(const SpaceSpec& space, const Point& p, std::mt19937_64& rng) {
    validate_point(space, p);
    for (;;) {
        const Vec w = project_to_tangent(space, p.coords, gaussian_vector(space.embedding_dim(), rng));
        const double sq = inner(space, w, w);
        if (sq > 1e-8) return w / std::sqrt(sq);
    }
}

Vec random_section_normal(const SpaceSpec& space, std::mt19937_64& rng) {
    validate_spec(space);
    for (;;) {
        const Vec v = gaussian_vector(space.embedding_dim(), rng);
        if (v.norm() < 1e-6) continue;
        if (space.kind == SpaceKind::hyperbolic && inner(space, v, v) < 0.1 * v.squaredNorm())
            continue;
        return v;
    }
}

FourierLoopSpec sphere_loop_for(const SpaceSpec& space, std::uint64_t seed) {
    return FourierLoopSpec::random_on_sphere(space.m + 1, seed);
}

FourierLoopSpec section_loop_for(const SpaceSpec& space, std::uint64_t seed) {
    if (space.m == 1) return FourierLoopSpec::circle(2);  // the section is a geodesic
    if (space.kind == SpaceKind::sphere)
        return FourierLoopSpec::random_on_sphere(space.m + 1, seed);
    return FourierLoopSpec::random_free(space.m, seed);
}

FourierLoopSpec ambient_loop_for(const SpaceSpec& space, std::uint64_t seed) {
    if (space.kind == SpaceKind::sphere)
        return FourierLoopSpec::random_on_sphere(space.embedding_dim(), seed);
    return FourierLoopSpec::random_free(space.m + 1, seed);
}

}  // namespace geocurve
