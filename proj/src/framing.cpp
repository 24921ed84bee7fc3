#include "geocurve/framing.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace geocurve {

namespace {

constexpr double kKappaFloor = 1e-8;    // below this the Frenet normal is undefined
constexpr double kPivotFloor = 1e-8;    // Gram-Schmidt pivot for derivative frames
constexpr double kDriftLimit = 1e-6;    // allowed frame drift per transport step

// Generalized cross product against the euclidean form:
//   <C(v_0 .. v_{d-2}), x>_e = det[v_0; ...; v_{d-2}; x].
Vec cross_euclidean(const std::vector<Vec>& v) {
    const long d = v.front().size();
    Mat minor(d - 1, d - 1);
    Vec out(d);
    for (long j = 0; j < d; ++j) {
        for (long row = 0; row + 1 < d; ++row) {
            long cc = 0;
            for (long col = 0; col < d; ++col) {
                if (col == j) continue;
                minor(row, cc++) = v[row][col];
            }
        }
        const double sign = ((d - 1 + j) % 2 == 0) ? 1.0 : -1.0;
        out[j] = sign * minor.determinant();
    }
    return out;
}

// Same construction against the ambient form of the space: on the
// hyperboloid <C, x>_1 = det[...] requires flipping the timelike component.
Vec cross_form(const SpaceSpec& space, const std::vector<Vec>& v) {
    Vec c = cross_euclidean(v);
    if (space.kind == SpaceKind::hyperbolic) c[0] = -c[0];
    return c;
}

// Covariant acceleration D_t t at every sample.
std::vector<Vec> covariant_acceleration(const Curve& curve, const CurveDerivatives& d) {
    const double sign = gauss_sign(curve.space);
    const double inv_r2 = curve.space.curved() ? 1.0 / (curve.space.r * curve.space.r) : 0.0;
    std::vector<Vec> out(curve.size());
    for (std::size_t k = 0; k < curve.size(); ++k) {
        Vec v = d.acceleration[k];
        if (curve.space.curved())
            v += sign * inv_r2 * inner(curve.space, d.tangent[k], d.tangent[k]) * curve.samples[k];
        out[k] = project_to_tangent(curve.space, curve.samples[k], v);
    }
    return out;
}

std::vector<Vec> unit_tangents(const Curve& curve, const CurveDerivatives& d) {
    std::vector<Vec> out(d.tangent);
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double n = form_norm(curve.space, out[k]);
        if (n < 1e-12)
            throw Error(ErrorCode::regularity, "curve tangent vanishes", static_cast<long>(k));
        out[k] /= n;
    }
    return out;
}

double orientation_det(const SpaceSpec& space, const Vec& q, const Vec& t,
                       const std::vector<Vec>& normals) {
    const long d = space.embedding_dim();
    Mat frame(d, d);
    long col = 0;
    if (space.curved()) frame.col(col++) = position_normal(space, q);
    frame.col(col++) = t;
    for (const Vec& n : normals) frame.col(col++) = n;
    return frame.determinant();
}

}  // namespace

FrenetData frenet_frame_3d(const Curve& curve) {
    validate_curve(curve);
    if (curve.space.m != 2)
        throw Error(ErrorCode::invalid_argument, "frenet_frame_3d needs a 3-dimensional model");
    const CurveDerivatives d = derivatives(curve);
    const std::vector<Vec> t = unit_tangents(curve, d);
    const std::vector<Vec> acc = covariant_acceleration(curve, d);
    const std::size_t count = curve.size();

    FrenetData out;
    out.frames.resize(count);
    out.curvature.resize(count);
    out.torsions.assign(1, std::vector<double>(count));

    std::vector<Vec> binormals(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double kappa = form_norm(curve.space, acc[k]);
        if (kappa < kKappaFloor)
            throw Error(ErrorCode::undefined_normal,
                        "curvature vanishes, Frenet normal undefined", static_cast<long>(k));
        const Vec n = acc[k] / kappa;
        Vec b;
        if (curve.space.curved()) {
            b = cross_form(curve.space,
                           {position_normal(curve.space, curve.samples[k]), t[k], n});
        } else {
            b = cross_form(curve.space, {t[k], n});
        }
        b /= form_norm(curve.space, b);
        out.frames[k] = {t[k], n, b};
        out.curvature[k] = kappa;
        binormals[k] = b;
    }

    // tau = -<D_t b, n>; the Gauss correction vanishes because <t,b> = 0.
    const std::vector<Vec> db =
        covariant_derivative(curve.space, curve.samples, binormals, curve.step(), curve.closed);
    for (std::size_t k = 0; k < count; ++k)
        out.torsions[0][k] = -inner(curve.space, db[k], out.frames[k][1]);
    return out;
}

FrenetData euclidean_frenet_general(const Curve& curve) {
    validate_curve(curve);
    if (curve.space.kind != SpaceKind::euclidean)
        throw Error(ErrorCode::invalid_argument, "general Frenet frames are euclidean only");
    const int m = curve.space.m;
    const double h = curve.step();
    const std::size_t count = curve.size();

    // Derivative stencils alpha', ..., alpha^(m).
    std::vector<std::vector<Vec>> deriv(m);
    deriv[0] = detail::fd_derivative(curve.samples, h, curve.closed);
    if (m >= 2) deriv[1] = detail::fd_second_derivative(curve.samples, h, curve.closed);
    for (int j = 2; j < m; ++j) deriv[j] = detail::fd_derivative(deriv[j - 1], h, curve.closed);

    FrenetData out;
    out.frames.resize(count);
    out.curvature.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<Vec> frame;
        for (int j = 0; j < m; ++j) {
            Vec v = deriv[j][k];
            for (const Vec& e : frame) v -= v.dot(e) * e;
            const double pivot = v.norm();
            if (pivot < kPivotFloor)
                throw Error(ErrorCode::degenerate_derivative,
                            "derivatives are linearly dependent, Frenet frame undefined",
                            static_cast<long>(k));
            frame.push_back(v / pivot);
            if (j == 1) out.curvature[k] = pivot;  // |alpha'' - <alpha'',e_0> e_0|
        }
        Vec last = cross_euclidean(frame);
        frame.push_back(last / last.norm());
        out.frames[k] = std::move(frame);
    }
    if (m == 1) {
        // Signed curvature of a plane curve: <e_0', e_1>.
        std::vector<Vec> e0(count);
        for (std::size_t k = 0; k < count; ++k) e0[k] = out.frames[k][0];
        const std::vector<Vec> de0 = detail::fd_derivative(e0, h, curve.closed);
        for (std::size_t k = 0; k < count; ++k) out.curvature[k] = de0[k].dot(out.frames[k][1]);
    }

    // tau_i = <e_i', e_{i+1}> by finite differences of the frame fields.
    out.torsions.assign(std::max(0, m - 1), std::vector<double>(count));
    for (int i = 1; i < m; ++i) {
        std::vector<Vec> series(count);
        for (std::size_t k = 0; k < count; ++k) series[k] = out.frames[k][i];
        const std::vector<Vec> dseries = detail::fd_derivative(series, h, curve.closed);
        for (std::size_t k = 0; k < count; ++k)
            out.torsions[i - 1][k] = dseries[k].dot(out.frames[k][i + 1]);
    }
    return out;
}

RMData rm_transport(const Curve& curve, const std::optional<std::vector<Vec>>& initial_frame) {
    validate_curve(curve);
    const SpaceSpec& space = curve.space;
    const int m = space.m;
    const double h = curve.step();
    const std::size_t count = curve.size();
    const CurveDerivatives d = derivatives(curve);
    const std::vector<Vec> t = unit_tangents(curve, d);
    const std::vector<Vec> cov_acc = covariant_acceleration(curve, d);

    // Orthonormalize a candidate frame at sample k against the position
    // normal, the tangent, and earlier normals; returns the worst deviation
    // seen before correction.
    auto correct = [&](std::vector<Vec>& frame, std::size_t k) -> double {
        double drift = 0.0;
        std::vector<Vec> fixed;
        std::vector<double> sig;
        if (space.curved()) {
            fixed.push_back(position_normal(space, curve.samples[k]));
            sig.push_back(space.kind == SpaceKind::hyperbolic ? -1.0 : 1.0);
        }
        fixed.push_back(t[k]);
        sig.push_back(1.0);
        for (int i = 0; i < m; ++i) {
            Vec v = frame[i];
            for (std::size_t j = 0; j < fixed.size(); ++j) {
                const double pairing = inner(space, v, fixed[j]);
                drift = std::max(drift, std::abs(pairing));
                v -= sig[j] * pairing * fixed[j];
            }
            const double norm = form_norm(space, v);
            drift = std::max(drift, std::abs(norm - 1.0));
            v /= norm;
            frame[i] = v;
            fixed.push_back(v);
            sig.push_back(1.0);
        }
        return drift;
    };

    std::vector<Vec> frame;
    if (initial_frame) {
        if (static_cast<int>(initial_frame->size()) != m)
            throw Error(ErrorCode::invalid_argument, "initial frame needs m normal vectors");
        frame = *initial_frame;
        std::vector<Vec> probe = frame;
        if (correct(probe, 0) > 1e-8)
            throw Error(ErrorCode::invalid_argument,
                        "initial frame is not orthonormal to the tangent and position normal");
        frame = probe;
    } else {
        std::vector<Vec> fixedv;
        if (space.curved()) fixedv.push_back(curve.samples[0]);
        fixedv.push_back(t[0]);
        frame = orthonormal_complement(space, fixedv, m);
        if (orientation_det(space, curve.samples[0], t[0], frame) < 0.0)
            frame[m - 1] = -frame[m - 1];
    }

    RMData out;
    out.tangent = t;
    out.normals.resize(count);
    out.development.resize(count, m);
    out.normals[0] = frame;

    auto rhs = [&](const Vec& acc_s, const Vec& t_s, const Vec& n) -> Vec {
        return -inner(space, acc_s, n) * t_s;
    };
    for (std::size_t k = 0; k + 1 < count; ++k) {
        const Vec acc_mid = detail::midpoint_value(d.acceleration, static_cast<long>(k), curve.closed);
        const Vec t_mid = detail::midpoint_value(t, static_cast<long>(k), curve.closed);
        std::vector<Vec> next(m);
        for (int i = 0; i < m; ++i) {
            const Vec& n0 = out.normals[k][i];
            const Vec k1 = rhs(d.acceleration[k], t[k], n0);
            const Vec k2 = rhs(acc_mid, t_mid, n0 + 0.5 * h * k1);
            const Vec k3 = rhs(acc_mid, t_mid, n0 + 0.5 * h * k2);
            const Vec k4 = rhs(d.acceleration[k + 1], t[k + 1], n0 + h * k3);
            next[i] = n0 + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        const double drift = correct(next, k + 1);
        if (drift > kDriftLimit)
            throw Error(ErrorCode::numerical_instability,
                        "frame drift exceeds tolerance; resample the curve more densely",
                        static_cast<long>(k + 1));
        out.normals[k + 1] = std::move(next);
    }

    for (std::size_t k = 0; k < count; ++k)
        for (int i = 0; i < m; ++i)
            out.development(static_cast<long>(k), i) = inner(space, cov_acc[k], out.normals[k][i]);
    return out;
}

RMData rm_from_frenet_e3(const Curve& curve, const FrenetData& frenet, double theta0) {
    validate_curve(curve);
    if (curve.space.kind != SpaceKind::euclidean || curve.space.m != 2)
        throw Error(ErrorCode::invalid_argument, "rm_from_frenet_e3 expects a curve in E^3");
    if (frenet.frames.size() != curve.size() || frenet.torsions.empty())
        throw Error(ErrorCode::dimension_mismatch, "Frenet data does not match the curve");

    const std::vector<double> theta_int =
        detail::cumulative_integral(frenet.torsions[0], curve.step(), curve.closed);
    const std::size_t count = curve.size();

    RMData out;
    out.tangent.resize(count);
    out.normals.resize(count);
    out.development.resize(count, 2);
    for (std::size_t k = 0; k < count; ++k) {
        const double theta = theta0 + theta_int[k];
        const double c = std::cos(theta), s = std::sin(theta);
        const Vec& n = frenet.frames[k][1];
        const Vec& b = frenet.frames[k][2];
        out.tangent[k] = frenet.frames[k][0];
        out.normals[k] = {c * n - s * b, s * n + c * b};
        out.development(static_cast<long>(k), 0) = frenet.curvature[k] * c;
        out.development(static_cast<long>(k), 1) = frenet.curvature[k] * s;
    }
    return out;
}

CenterTangentField center_tangent_field(const Curve& curve, const Point& p) {
    validate_curve(curve);
    validate_point(curve.space, p);
    const SpaceSpec& space = curve.space;
    const double r = space.r;
    const std::size_t count = curve.size();

    CenterTangentField out;
    out.field.resize(count);
    out.lambda.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
        const auto [u, v] = log_map(space, p, Point{curve.samples[k]});
        switch (space.kind) {
            case SpaceKind::euclidean:
                out.field[k] = v.vec;
                break;
            case SpaceKind::sphere:
                out.field[k] =
                    -std::sin(u / r) / r * p.coords + std::cos(u / r) * v.vec;
                break;
            case SpaceKind::hyperbolic:
                out.field[k] =
                    std::sinh(u / r) / r * p.coords + std::cosh(u / r) * v.vec;
                break;
        }
    }

    const CurveDerivatives d = derivatives(curve);
    const std::vector<Vec> t = unit_tangents(curve, d);
    const std::vector<Vec> df =
        covariant_derivative(space, curve.samples, out.field, curve.step(), curve.closed);
    for (std::size_t k = 0; k < count; ++k) out.lambda[k] = inner(space, df[k], t[k]);
    return out;
}

}  // namespace geocurve
