#include "geocurve/ambient.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace geocurve {

namespace {

constexpr double kPointTol = 1e-8;    // relative quadric-constraint tolerance
constexpr double kUnitTol = 1e-9;     // relative unit-norm tolerance for exp_map
constexpr double kClampSlack = 1e-12; // inverse-trig domain slack
constexpr double kZeroDir = 1e-13;    // below this the log direction is undefined

void check_dim(const SpaceSpec& space, const Vec& x, const char* what) {
    if (x.size() != space.embedding_dim()) {
        std::ostringstream msg;
        msg << what << ": expected dimension " << space.embedding_dim() << ", got " << x.size();
        throw Error(ErrorCode::dimension_mismatch, msg.str());
    }
}

}  // namespace

std::string to_string(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::euclidean: return "euclidean";
        case SpaceKind::sphere: return "sphere";
        case SpaceKind::hyperbolic: return "hyperbolic";
    }
    return "?";
}

SpaceKind space_kind_from_string(const std::string& name) {
    if (name == "euclidean") return SpaceKind::euclidean;
    if (name == "sphere") return SpaceKind::sphere;
    if (name == "hyperbolic") return SpaceKind::hyperbolic;
    throw Error(ErrorCode::invalid_argument, "unknown space kind '" + name + "'");
}

void validate_spec(const SpaceSpec& space) {
    if (space.m < 1)
        throw Error(ErrorCode::invalid_argument, "space requires m >= 1");
    if (space.curved() && !(space.r > 0.0))
        throw Error(ErrorCode::invalid_argument, "curved space requires radius > 0");
}

double inner(const SpaceSpec& space, const Vec& x, const Vec& y) {
    if (x.size() != y.size())
        throw Error(ErrorCode::dimension_mismatch, "inner: operand dimensions differ");
    check_dim(space, x, "inner");
    double dot = x.dot(y);
    if (space.kind == SpaceKind::hyperbolic)
        dot -= 2.0 * x[0] * y[0];
    return dot;
}

double form_norm(const SpaceSpec& space, const Vec& x) {
    double sq = inner(space, x, x);
    return sq <= 0.0 ? 0.0 : std::sqrt(sq);
}

Vec position_normal(const SpaceSpec& space, const Vec& q) {
    if (!space.curved())
        throw Error(ErrorCode::invalid_argument, "euclidean space has no position normal");
    check_dim(space, q, "position_normal");
    return q / space.r;
}

double gauss_sign(const SpaceSpec& space) {
    switch (space.kind) {
        case SpaceKind::sphere: return 1.0;
        case SpaceKind::hyperbolic: return -1.0;
        default: return 0.0;
    }
}

void validate_point(const SpaceSpec& space, const Point& p) {
    validate_spec(space);
    check_dim(space, p.coords, "point");
    if (!space.curved()) return;
    const double r2 = space.r * space.r;
    const double sq = inner(space, p.coords, p.coords);
    const double want = space.kind == SpaceKind::sphere ? r2 : -r2;
    if (std::abs(sq - want) > kPointTol * r2)
        throw Error(ErrorCode::invalid_argument, "point violates the model constraint");
    if (space.kind == SpaceKind::hyperbolic && !(p.coords[0] > 0.0))
        throw Error(ErrorCode::invalid_argument, "hyperboloid point must lie on the upper sheet");
}

void validate_tangent(const SpaceSpec& space, const Tangent& v) {
    validate_point(space, v.base);
    check_dim(space, v.vec, "tangent");
    if (!space.curved()) return;
    const double pairing = inner(space, v.base.coords, v.vec);
    const double scale = space.r * std::max(1.0, v.vec.norm());
    if (std::abs(pairing) > 1e-6 * scale)
        throw Error(ErrorCode::invalid_argument, "vector is not tangent to the model");
}

Vec project_to_tangent(const SpaceSpec& space, const Vec& p, const Vec& w) {
    check_dim(space, p, "project_to_tangent");
    check_dim(space, w, "project_to_tangent");
    if (!space.curved()) return w;
    // Subtract the component along the position normal; <p,p> = +-r^2.
    const double coeff = inner(space, w, p) / inner(space, p, p);
    return w - coeff * p;
}

Vec project_to_model(const SpaceSpec& space, const Vec& x) {
    check_dim(space, x, "project_to_model");
    switch (space.kind) {
        case SpaceKind::euclidean:
            return x;
        case SpaceKind::sphere: {
            const double n = x.norm();
            if (n < 1e-300)
                throw Error(ErrorCode::domain, "cannot project the origin onto the sphere");
            return x * (space.r / n);
        }
        case SpaceKind::hyperbolic: {
            const double sq = inner(space, x, x);
            if (sq >= -1e-12)
                throw Error(ErrorCode::domain, "cannot project a non-timelike vector onto the hyperboloid");
            Vec y = x * (space.r / std::sqrt(-sq));
            if (y[0] < 0.0)
                throw Error(ErrorCode::domain, "projection lands on the lower hyperboloid sheet");
            return y;
        }
    }
    return x;
}

Point exp_map(const SpaceSpec& space, const Point& p, const Vec& v, double u) {
    validate_point(space, p);
    check_dim(space, v, "exp_map");
    const double vsq = inner(space, v, v);
    if (std::abs(vsq - 1.0) > 2.0 * kUnitTol)
        throw Error(ErrorCode::invalid_argument, "exp_map requires a unit direction");
    if (space.curved()) {
        const double pairing = inner(space, p.coords, v);
        if (std::abs(pairing) > 1e-6 * space.r)
            throw Error(ErrorCode::invalid_argument, "exp_map direction is not tangent at p");
    }
    switch (space.kind) {
        case SpaceKind::euclidean:
            return Point{p.coords + u * v};
        case SpaceKind::sphere: {
            const double a = u / space.r;
            return Point{std::cos(a) * p.coords + space.r * std::sin(a) * v};
        }
        case SpaceKind::hyperbolic: {
            const double a = u / space.r;
            return Point{std::cosh(a) * p.coords + space.r * std::sinh(a) * v};
        }
    }
    return p;
}

std::pair<double, Tangent> log_map(const SpaceSpec& space, const Point& p, const Point& q) {
    validate_point(space, p);
    validate_point(space, q);
    const double r = space.r;
    switch (space.kind) {
        case SpaceKind::euclidean: {
            Vec d = q.coords - p.coords;
            const double u = d.norm();
            if (u <= kZeroDir * std::max(1.0, p.coords.norm()))
                throw Error(ErrorCode::distance_zero, "log_map: points coincide");
            return {u, Tangent{p, d / u}};
        }
        case SpaceKind::sphere: {
            const double c = detail::clamp_to_domain(inner(space, p.coords, q.coords) / (r * r),
                                                     -1.0, 1.0, kClampSlack, "log_map");
            Vec perp = q.coords - c * p.coords;  // tangential part of q at p
            const double n = perp.norm();
            if (n <= kZeroDir * r) {
                if (c < 0.0)
                    throw Error(ErrorCode::antipodal, "log_map: antipodal points have no unique direction");
                throw Error(ErrorCode::distance_zero, "log_map: points coincide");
            }
            return {r * std::acos(c), Tangent{p, perp / n}};
        }
        case SpaceKind::hyperbolic: {
            const double c = detail::clamp_to_domain(-inner(space, p.coords, q.coords) / (r * r),
                                                     1.0, std::numeric_limits<double>::infinity(),
                                                     kClampSlack, "log_map");
            Vec perp = q.coords - c * p.coords;  // <q,p>_1 = -c r^2
            const double n = form_norm(space, perp);
            if (n <= kZeroDir * r)
                throw Error(ErrorCode::distance_zero, "log_map: points coincide");
            return {r * std::acosh(c), Tangent{p, perp / n}};
        }
    }
    throw Error(ErrorCode::invalid_argument, "log_map: bad space");
}

double geodesic_distance(const SpaceSpec& space, const Point& p, const Point& q) {
    validate_point(space, p);
    validate_point(space, q);
    const double r = space.r;
    switch (space.kind) {
        case SpaceKind::euclidean:
            return (q.coords - p.coords).norm();
        case SpaceKind::sphere:
            return r * std::acos(detail::clamp_to_domain(
                           inner(space, p.coords, q.coords) / (r * r), -1.0, 1.0, kClampSlack,
                           "geodesic_distance"));
        case SpaceKind::hyperbolic:
            return r * std::acosh(detail::clamp_to_domain(
                           -inner(space, p.coords, q.coords) / (r * r), 1.0,
                           std::numeric_limits<double>::infinity(), kClampSlack,
                           "geodesic_distance"));
    }
    throw Error(ErrorCode::invalid_argument, "geodesic_distance: bad space");
}

std::vector<Vec> covariant_derivative(const SpaceSpec& space,
                                      const std::vector<Vec>& samples,
                                      const std::vector<Vec>& field,
                                      double h,
                                      bool closed) {
    if (samples.size() != field.size())
        throw Error(ErrorCode::dimension_mismatch, "covariant_derivative: sample/field count mismatch");
    if (samples.size() < 5)
        throw Error(ErrorCode::insufficient_data, "covariant_derivative needs at least 5 samples");
    if (!(h > 0.0))
        throw Error(ErrorCode::invalid_argument, "covariant_derivative: step must be positive");

    std::vector<Vec> tangents = detail::fd_derivative(samples, h, closed);
    std::vector<Vec> deriv = detail::fd_derivative(field, h, closed);
    const double sign = gauss_sign(space);
    const double inv_r2 = space.curved() ? 1.0 / (space.r * space.r) : 0.0;

    std::vector<Vec> out(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
        Vec v = deriv[k];
        if (space.curved())
            v += sign * inv_r2 * inner(space, tangents[k], field[k]) * samples[k];
        out[k] = project_to_tangent(space, samples[k], v);
    }
    return out;
}

namespace detail {

double clamp_to_domain(double x, double lo, double hi, double slack, const char* what) {
    if (x < lo) {
        if (x < lo - slack)
            throw Error(ErrorCode::domain, std::string(what) + ": argument outside inverse-trig domain");
        return lo;
    }
    if (x > hi) {
        if (x > hi + slack)
            throw Error(ErrorCode::domain, std::string(what) + ": argument outside inverse-trig domain");
        return hi;
    }
    return x;
}

namespace {

// Index helper for periodic stencils.
inline long wrap(long k, long n) {
    k %= n;
    return k < 0 ? k + n : k;
}

template <typename T>
T weighted4(const std::vector<T>& f, long a, long b, long c, long d,
            double wa, double wb, double wc, double wd) {
    return wa * f[a] + wb * f[b] + wc * f[c] + wd * f[d];
}

template <typename T>
std::vector<T> fd_derivative_impl(const std::vector<T>& f, double h, bool closed) {
    const long n = static_cast<long>(f.size());
    std::vector<T> out(f.size());
    if (closed) {
        for (long k = 0; k < n; ++k) {
            out[k] = (f[wrap(k - 2, n)] - 8.0 * f[wrap(k - 1, n)] + 8.0 * f[wrap(k + 1, n)] -
                      f[wrap(k + 2, n)]) /
                     (12.0 * h);
        }
        return out;
    }
    for (long k = 2; k + 2 < n; ++k)
        out[k] = (f[k - 2] - 8.0 * f[k - 1] + 8.0 * f[k + 1] - f[k + 2]) / (12.0 * h);
    if (n >= 6) {
        // One-sided and offset 4th-order stencils at open ends.
        out[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) /
                 (12.0 * h);
        out[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / (12.0 * h);
        out[n - 2] =
            (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) /
            (12.0 * h);
        out[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] +
                      3.0 * f[n - 5]) /
                     (12.0 * h);
    } else {
        out[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
        out[1] = (f[2] - f[0]) / (2.0 * h);
        out[n - 2] = (f[n - 1] - f[n - 3]) / (2.0 * h);
        out[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    }
    return out;
}

}  // namespace

std::vector<Vec> fd_derivative(const std::vector<Vec>& f, double h, bool closed) {
    if (f.size() < 5)
        throw Error(ErrorCode::insufficient_data, "fd_derivative needs at least 5 samples");
    return fd_derivative_impl(f, h, closed);
}

std::vector<double> fd_derivative(const std::vector<double>& f, double h, bool closed) {
    if (f.size() < 5)
        throw Error(ErrorCode::insufficient_data, "fd_derivative needs at least 5 samples");
    return fd_derivative_impl(f, h, closed);
}

std::vector<Vec> fd_second_derivative(const std::vector<Vec>& f, double h, bool closed) {
    if (f.size() < 5)
        throw Error(ErrorCode::insufficient_data, "fd_second_derivative needs at least 5 samples");
    const long n = static_cast<long>(f.size());
    const double h2 = h * h;
    std::vector<Vec> out(f.size());
    if (closed) {
        for (long k = 0; k < n; ++k) {
            out[k] = (-f[wrap(k - 2, n)] + 16.0 * f[wrap(k - 1, n)] - 30.0 * f[k] +
                      16.0 * f[wrap(k + 1, n)] - f[wrap(k + 2, n)]) /
                     (12.0 * h2);
        }
        return out;
    }
    for (long k = 2; k + 2 < n; ++k)
        out[k] = (-f[k - 2] + 16.0 * f[k - 1] - 30.0 * f[k] + 16.0 * f[k + 1] - f[k + 2]) /
                 (12.0 * h2);
    if (n >= 6) {
        // One-sided and offset 4th-order stencils at open ends.
        out[0] = (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] -
                  10.0 * f[5]) /
                 (12.0 * h2);
        out[1] = (10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] - 6.0 * f[4] + f[5]) /
                 (12.0 * h2);
        out[n - 2] = (10.0 * f[n - 1] - 15.0 * f[n - 2] - 4.0 * f[n - 3] + 14.0 * f[n - 4] -
                      6.0 * f[n - 5] + f[n - 6]) /
                     (12.0 * h2);
        out[n - 1] = (45.0 * f[n - 1] - 154.0 * f[n - 2] + 214.0 * f[n - 3] - 156.0 * f[n - 4] +
                      61.0 * f[n - 5] - 10.0 * f[n - 6]) /
                     (12.0 * h2);
    } else {
        out[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
        out[1] = (f[0] - 2.0 * f[1] + f[2]) / h2;
        out[n - 2] = (f[n - 3] - 2.0 * f[n - 2] + f[n - 1]) / h2;
        out[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / h2;
    }
    return out;
}

Vec midpoint_value(const std::vector<Vec>& f, long k, bool closed) {
    const long n = static_cast<long>(f.size());
    if (closed) {
        return weighted4(f, wrap(k - 1, n), wrap(k, n), wrap(k + 1, n), wrap(k + 2, n),
                         -1.0 / 16, 9.0 / 16, 9.0 / 16, -1.0 / 16);
    }
    if (k <= 0)
        return weighted4(f, 0L, 1L, 2L, 3L, 0.3125, 0.9375, -0.3125, 0.0625);
    if (k + 2 >= n)
        return weighted4(f, n - 4, n - 3, n - 2, n - 1, 0.0625, -0.3125, 0.9375, 0.3125);
    return weighted4(f, k - 1, k, k + 1, k + 2, -1.0 / 16, 9.0 / 16, 9.0 / 16, -1.0 / 16);
}

std::vector<double> cumulative_integral(const std::vector<double>& f, double h, bool closed) {
    const long n = static_cast<long>(f.size());
    if (n < 4)
        throw Error(ErrorCode::insufficient_data, "cumulative_integral needs at least 4 samples");
    std::vector<double> out(f.size(), 0.0);
    auto at = [&](long k) { return closed ? f[wrap(k, n)] : f[std::clamp(k, 0L, n - 1)]; };
    for (long k = 0; k + 1 < n; ++k) {
        double step;
        if (!closed && k == 0)
            step = h / 24.0 * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] + f[3]);
        else if (!closed && k + 2 >= n)
            step = h / 24.0 * (f[n - 4] - 5.0 * f[n - 3] + 19.0 * f[n - 2] + 9.0 * f[n - 1]);
        else
            step = h / 24.0 * (-at(k - 1) + 13.0 * at(k) + 13.0 * at(k + 1) - at(k + 2));
        out[k + 1] = out[k] + step;
    }
    return out;
}

}  // namespace detail

}  // namespace geocurve
