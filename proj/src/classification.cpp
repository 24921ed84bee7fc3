#include "geocurve/classification.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace geocurve {

namespace {

constexpr double kTorsionFloor = 1e-6;
constexpr double kConstantDev = 1e-7;  // relative spread below which a development is constant

// Absolute development floor below which a curve counts as a geodesic; the
// development is measured in curvature units, so scale by 1/r when r < 1.
double geodesic_floor(const SpaceSpec& space) {
    return 1e-8 * (space.curved() ? std::max(1.0, 1.0 / space.r) : 1.0);
}

std::vector<double> check_torsion(const std::vector<double>& tau) {
    for (std::size_t k = 0; k < tau.size(); ++k)
        if (std::abs(tau[k]) < kTorsionFloor)
            throw Error(ErrorCode::vanishing_torsion,
                        "torsion vanishes, spherical characterization undefined",
                        static_cast<long>(k));
    return tau;
}

}  // namespace

std::string to_string(SphericalRegime regime) {
    switch (regime) {
        case SphericalRegime::sphere: return "sphere";
        case SphericalRegime::origin_line: return "origin_line";
        case SphericalRegime::hyperbolic_non_sphere: return "hyperbolic_non_sphere";
        case SphericalRegime::indeterminate: return "indeterminate";
    }
    return "?";
}

NormalDevelopment normal_development(const RMData& rm, const std::vector<double>& s) {
    if (static_cast<std::size_t>(rm.development.rows()) != s.size())
        throw Error(ErrorCode::dimension_mismatch, "development/parameter count mismatch");
    return NormalDevelopment{rm.development, s};
}

HyperplaneFit fit_hyperplane(const NormalDevelopment& dev) {
    const long n = dev.samples.rows();
    const long m = dev.samples.cols();
    if (n < 2 || m < 1)
        throw Error(ErrorCode::insufficient_data, "hyperplane fit needs samples");

    HyperplaneFit fit;
    fit.scale = std::sqrt(dev.samples.squaredNorm() / double(n));

    const Vec centroid = dev.samples.colwise().mean().transpose();
    Mat centered = dev.samples.rowwise() - centroid.transpose();
    const Mat moment = centered.transpose() * centered / double(n);
    Eigen::SelfAdjointEigenSolver<Mat> eig(moment);
    const double spread = std::sqrt(std::max(0.0, eig.eigenvalues().maxCoeff()));

    if (spread <= kConstantDev * centroid.norm()) {
        // Numerically constant development: closest-hyperplane convention.
        // An identically zero development (a geodesic) has no preferred
        // direction; any unit covector with c = 0 represents its origin line.
        const double cnorm = centroid.norm();
        if (cnorm > 0.0) {
            fit.a = -centroid / cnorm;
            fit.c = cnorm;
        } else {
            fit.a = Vec::Zero(m);
            fit.a[0] = -1.0;
            fit.c = 0.0;
        }
    } else {
        fit.a = eig.eigenvectors().col(0);
        fit.c = -fit.a.dot(centroid);
        if (fit.c < 0.0) {
            fit.a = -fit.a;
            fit.c = -fit.c;
        }
    }
    double sq = 0.0;
    for (long k = 0; k < n; ++k) {
        const double v = fit.a.dot(dev.samples.row(k)) + fit.c;
        sq += v * v;
    }
    fit.rms_residual = std::sqrt(sq / double(n));
    return fit;
}

SphericalVerdict classify_spherical(const SpaceSpec& space, const HyperplaneFit& fit,
                                    double tol_rel, double tol_origin) {
    validate_spec(space);
    SphericalVerdict verdict;
    verdict.fit = fit;

    const bool residual_ok = fit.rms_residual < tol_rel * std::max(fit.scale, fit.c);
    const bool through_origin =
        fit.c <= tol_origin * fit.scale || fit.scale <= geodesic_floor(space);

    if (through_origin) {
        verdict.regime = SphericalRegime::origin_line;
        return verdict;
    }
    switch (space.kind) {
        case SpaceKind::euclidean:
            verdict.regime = SphericalRegime::sphere;
            verdict.z0 = 1.0 / fit.c;
            break;
        case SpaceKind::sphere:
            verdict.regime = SphericalRegime::sphere;
            // z0 = r arccot(r c), in (0, pi r / 2) since c > 0.
            verdict.z0 = space.r * std::atan(1.0 / (space.r * fit.c));
            break;
        case SpaceKind::hyperbolic: {
            const double x = space.r * fit.c;
            if (x > 1.0 + tol_origin) {
                verdict.regime = SphericalRegime::sphere;
                verdict.z0 = space.r * std::atanh(1.0 / x);
            } else if (x > 1.0 - tol_origin) {
                // Horosphere boundary: never classified as a geodesic sphere.
                verdict.regime = SphericalRegime::indeterminate;
            } else {
                verdict.regime = SphericalRegime::hyperbolic_non_sphere;
            }
            break;
        }
    }
    verdict.is_geodesic_sphere =
        residual_ok && verdict.regime == SphericalRegime::sphere && verdict.z0.has_value();
    return verdict;
}

std::pair<Point, double> recover_center(const Curve& curve, const RMData& rm,
                                        const HyperplaneFit& fit, double z0) {
    validate_curve(curve);
    if (rm.normals.size() != curve.size())
        throw Error(ErrorCode::dimension_mismatch, "frame data does not match the curve");
    if (fit.a.size() != curve.space.m)
        throw Error(ErrorCode::dimension_mismatch, "fit dimension does not match the space");
    const SpaceSpec& space = curve.space;
    const double r = space.r;

    double scale_alpha = 1.0, scale_w = z0;
    if (space.kind == SpaceKind::sphere) {
        scale_alpha = std::cos(z0 / r);
        scale_w = r * std::sin(z0 / r);
    } else if (space.kind == SpaceKind::hyperbolic) {
        scale_alpha = std::cosh(z0 / r);
        scale_w = r * std::sinh(z0 / r);
    }

    std::vector<Vec> candidates(curve.size());
    Vec mean = Vec::Zero(space.embedding_dim());
    for (std::size_t k = 0; k < curve.size(); ++k) {
        Vec w = Vec::Zero(space.embedding_dim());
        for (int i = 0; i < space.m; ++i) w -= fit.a[i] * rm.normals[k][i];
        candidates[k] = scale_alpha * curve.samples[k] + scale_w * w;
        mean += candidates[k];
    }
    mean /= double(curve.size());

    const Point center{space.curved() ? project_to_model(space, mean) : mean};
    double spread = 0.0;
    for (std::size_t k = 0; k < curve.size(); ++k) {
        const Point pk{space.curved() ? project_to_model(space, candidates[k]) : candidates[k]};
        spread = std::max(spread, geodesic_distance(space, center, pk));
    }
    return {center, spread};
}

TotallyGeodesicVerdict classify_totally_geodesic(const Curve& curve, const NormalDevelopment& dev,
                                                 double tol) {
    validate_curve(curve);
    const SpaceSpec& space = curve.space;
    const HyperplaneFit fit = fit_hyperplane(dev);

    TotallyGeodesicVerdict verdict;
    bool development_ok;
    if (fit.scale <= geodesic_floor(space)) {
        // Geodesic: the development is the origin itself.
        verdict.origin_offset = 0.0;
        development_ok = true;
    } else {
        verdict.origin_offset = fit.c / fit.scale;
        development_ok = fit.c < tol * fit.scale;
    }

    const long n = static_cast<long>(curve.size());
    const long d = space.embedding_dim();
    Mat rows(n, d);
    for (long k = 0; k < n; ++k) rows.row(k) = curve.samples[k];
    if (space.kind == SpaceKind::hyperbolic) rows.col(0) *= -1.0;  // Lorentz pairing
    if (space.kind == SpaceKind::euclidean)
        rows = rows.rowwise() - rows.colwise().mean();
    const Mat quad = rows.transpose() * rows / double(n);
    Eigen::SelfAdjointEigenSolver<Mat> eig(quad);

    double rms_norm = 0.0;
    for (long k = 0; k < n; ++k) rms_norm += rows.row(k).squaredNorm();
    rms_norm = std::sqrt(rms_norm / double(n));

    verdict.section.normal = eig.eigenvectors().col(0);
    verdict.section.rms_residual = std::sqrt(std::max(0.0, eig.eigenvalues()[0])) / rms_norm;
    verdict.section.unique =
        std::sqrt(std::max(0.0, eig.eigenvalues()[1])) / rms_norm >= tol;
    verdict.is_totally_geodesic = development_ok && verdict.section.rms_residual < tol;
    return verdict;
}

std::vector<double> frenet_sphere_residual(const Curve& curve, const FrenetData& frenet) {
    validate_curve(curve);
    if (curve.space.m != 2)
        throw Error(ErrorCode::invalid_argument, "spherical characterization needs a 3-dimensional model");
    if (frenet.curvature.size() != curve.size() || frenet.torsions.empty())
        throw Error(ErrorCode::dimension_mismatch, "Frenet data does not match the curve");
    const std::vector<double>& tau = check_torsion(frenet.torsions[0]);
    const double h = curve.step();

    std::vector<double> rho(curve.size());
    for (std::size_t k = 0; k < rho.size(); ++k) rho[k] = 1.0 / frenet.curvature[k];
    const std::vector<double> drho = detail::fd_derivative(rho, h, curve.closed);
    std::vector<double> g(curve.size());
    for (std::size_t k = 0; k < g.size(); ++k) g[k] = drho[k] / tau[k];
    const std::vector<double> dg = detail::fd_derivative(g, h, curve.closed);

    std::vector<double> res(curve.size());
    for (std::size_t k = 0; k < res.size(); ++k) res[k] = dg[k] + tau[k] * rho[k];
    return res;
}

std::vector<double> euclidean_frenet_residual_e4(const Curve& curve, const FrenetData& frenet) {
    validate_curve(curve);
    if (curve.space.kind != SpaceKind::euclidean || curve.space.m != 3)
        throw Error(ErrorCode::invalid_argument, "this characterization needs a curve in E^4");
    if (frenet.curvature.size() != curve.size() || frenet.torsions.size() < 2)
        throw Error(ErrorCode::dimension_mismatch, "Frenet data does not match the curve");
    const std::vector<double>& tau1 = check_torsion(frenet.torsions[0]);
    const std::vector<double>& tau2 = check_torsion(frenet.torsions[1]);
    const double h = curve.step();

    std::vector<double> rho(curve.size());
    for (std::size_t k = 0; k < rho.size(); ++k) rho[k] = 1.0 / frenet.curvature[k];
    const std::vector<double> drho = detail::fd_derivative(rho, h, curve.closed);

    std::vector<double> inner_term(curve.size());
    {
        std::vector<double> a(curve.size());
        for (std::size_t k = 0; k < a.size(); ++k) a[k] = drho[k] / tau1[k];
        const std::vector<double> da = detail::fd_derivative(a, h, curve.closed);
        for (std::size_t k = 0; k < a.size(); ++k)
            inner_term[k] = (da[k] + tau1[k] * rho[k]) / tau2[k];
    }
    const std::vector<double> douter = detail::fd_derivative(inner_term, h, curve.closed);

    std::vector<double> res(curve.size());
    for (std::size_t k = 0; k < res.size(); ++k)
        res[k] = douter[k] + tau2[k] / tau1[k] * drho[k];
    return res;
}

ClassificationReport classify_curve(const Curve& curve, const ClassifyOptions& options) {
    validate_curve(curve);
    Curve work = curve;
    if (!work.uniform()) work = arc_length_resample(work, static_cast<int>(work.size()));

    const RMData rm = rm_transport(work);
    const NormalDevelopment dev = normal_development(rm, work.s);
    const HyperplaneFit fit = fit_hyperplane(dev);

    ClassificationReport report;
    report.tolerances = options;
    report.spherical = classify_spherical(work.space, fit, options.tol_rel, options.tol_origin);
    if (report.spherical.is_geodesic_sphere && report.spherical.z0) {
        auto [center, spread] = recover_center(work, rm, fit, *report.spherical.z0);
        report.spherical.center = center;
        report.spherical.center_spread = spread;
    }
    report.totally_geodesic = classify_totally_geodesic(work, dev, options.tol_origin);
    report.conflict =
        report.spherical.is_geodesic_sphere && report.totally_geodesic.is_totally_geodesic;
    return report;
}

}  // namespace geocurve
