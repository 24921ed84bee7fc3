#pragma once

#include "geocurve/framing.hpp"

#include <optional>
#include <string>
#include <vector>

namespace geocurve {

/// Normal development of an RM frame: the plane curve (kappa_1 .. kappa_m)(s).
struct NormalDevelopment {
    Mat samples;  // one development point per row
    std::vector<double> s;
};

NormalDevelopment normal_development(const RMData& rm, const std::vector<double>& s);

/// Total-least-squares hyperplane <a,x> + c = 0 through the development,
/// normalized to |a| = 1 and c >= 0.  scale is the rms magnitude of the
/// development samples.  A numerically constant development uses the closest
/// hyperplane convention a = -dev/|dev|, c = |dev|.
struct HyperplaneFit {
    Vec a;
    double c = 0.0;
    double rms_residual = 0.0;
    double scale = 0.0;
};

HyperplaneFit fit_hyperplane(const NormalDevelopment& dev);

enum class SphericalRegime { sphere, origin_line, hyperbolic_non_sphere, indeterminate };

std::string to_string(SphericalRegime regime);

/// Verdict of the geodesic-sphere test on a normal development.
///   sphere                c > 0 admits z0: r arccot(r c), r arccoth(r c), 1/c
///   origin_line           c ~ 0, candidate totally geodesic curve
///   hyperbolic_non_sphere r c < 1: equidistant / horosphere development
///   indeterminate         r c at the horosphere boundary within tolerance
struct SphericalVerdict {
    bool is_geodesic_sphere = false;
    SphericalRegime regime = SphericalRegime::origin_line;
    std::optional<double> z0;
    std::optional<Point> center;
    double center_spread = 0.0;
    HyperplaneFit fit;
};

SphericalVerdict classify_spherical(const SpaceSpec& space, const HyperplaneFit& fit,
                                    double tol_rel, double tol_origin);

/// Constant point P recovered from a spherical development, together with the
/// spread max_s dist(P, P(s)) certifying it:
///   P(s) = cos(z0/r) alpha(s) + r sin(z0/r) w(s),   w = -sum a_i n_i,
/// with cosh/sinh on the hyperboloid and alpha + (1/c) w in euclidean space.
std::pair<Point, double> recover_center(const Curve& curve, const RMData& rm,
                                        const HyperplaneFit& fit, double z0);

/// Least-squares hyperplane section of the embedding samples under the
/// ambient form (affine with free offset in euclidean space).  `unique` is
/// false when a second independent normal fits as well, as for geodesics.
struct HyperplaneSection {
    Vec normal;
    double rms_residual = 0.0;  // relative to the rms sample magnitude
    bool unique = true;
};

/// Verdict of the totally-geodesic test: the development must pass through
/// the origin (|c| < tol * scale) and the embedding samples must lie on a
/// hyperplane section (residual < tol).
struct TotallyGeodesicVerdict {
    bool is_totally_geodesic = false;
    double origin_offset = 0.0;  // |c| relative to the development scale
    HyperplaneSection section;
};

TotallyGeodesicVerdict classify_totally_geodesic(const Curve& curve, const NormalDevelopment& dev,
                                                 double tol);

/// Pointwise residual of the Frenet characterization of spherical curves in a
/// 3-dimensional model (identical in E^3, S^3(r), H^3(r)):
///   d/ds[(1/tau) d/ds(1/kappa)] + tau/kappa.
/// Throws vanishing_torsion where |tau| < 1e-6.
std::vector<double> frenet_sphere_residual(const Curve& curve, const FrenetData& frenet);

/// Same discrimination for curves in E^4:
///   d/ds{(1/tau_2) (d/ds[(1/tau_1) d/ds(1/kappa)] + tau_1/kappa)}
///     + (tau_2/tau_1) d/ds(1/kappa).
std::vector<double> euclidean_frenet_residual_e4(const Curve& curve, const FrenetData& frenet);

/// Tolerances of the classification pipeline; residual is relative to the
/// development scale, origin to the through-origin offset test.
struct ClassifyOptions {
    double tol_rel = 1e-5;
    double tol_origin = 1e-6;
};

/// Full report: RM transport, development fit, geodesic-sphere verdict with
/// recovered radius and center, totally-geodesic verdict, conflict flag.
struct ClassificationReport {
    SphericalVerdict spherical;
    TotallyGeodesicVerdict totally_geodesic;
    ClassifyOptions tolerances;
    bool conflict = false;
};

ClassificationReport classify_curve(const Curve& curve, const ClassifyOptions& options = {});

}  // namespace geocurve
