#pragma once

#include "geocurve/curve.hpp"

#include <optional>
#include <vector>

namespace geocurve {

/// Frenet apparatus sampled along a curve.  frames[k] lists the frame vectors
/// at sample k: {t, n, b} for the 3-dimensional variant, {e_0 ... e_m} for
/// the general euclidean one.  curvature[k] is kappa (= tau_0), torsions[i]
/// holds the series of tau_{i+1}, so torsions[0] is the classical torsion.
struct FrenetData {
    std::vector<std::vector<Vec>> frames;
    std::vector<double> curvature;
    std::vector<std::vector<double>> torsions;
};

/// Rotation minimizing frame {t, n_1 ... n_m} along a curve together with its
/// normal development: development(k, i) = kappa_{i+1}(s_k) = <D_t t, n_i>.
struct RMData {
    std::vector<Vec> tangent;
    std::vector<std::vector<Vec>> normals;
    Mat development;
};

/// Frenet frame of a curve in a 3-dimensional model (m = 2): t = alpha',
/// kappa = |D_t t|, n = D_t t / kappa, binormal completing the frame with
/// positive determinant against the outward position normal, and the torsion
/// tau = -<D_t b, n>.  Throws undefined_normal where kappa < 1e-8.
FrenetData frenet_frame_3d(const Curve& curve);

/// General Frenet frame of a euclidean curve in E^{m+1} from Gram-Schmidt on
/// the derivative stencils; the last vector completes the positive
/// orientation.  Throws degenerate_derivative when a pivot falls below 1e-8.
FrenetData euclidean_frenet_general(const Curve& curve);

/// Rotation minimizing transport along the curve: integrates
///   n' = -<acc, n> t
/// in the embedding with classical 4th-order steps at the sampling step,
/// re-orthonormalizing each frame against the position normal and t.  The
/// initial frame defaults to Gram-Schmidt of the earliest usable coordinate
/// axes, flipped to positive orientation.  Records the normal development.
RMData rm_transport(const Curve& curve,
                    const std::optional<std::vector<Vec>>& initial_frame = std::nullopt);

/// RM data derived from a 3-dimensional euclidean Frenet frame through the
/// angle theta(s) = theta0 + integral of tau:
///   n_1 = cos(theta) n - sin(theta) b,  n_2 = sin(theta) n + cos(theta) b,
///   kappa_1 = kappa cos(theta),          kappa_2 = kappa sin(theta).
RMData rm_from_frenet_e3(const Curve& curve, const FrenetData& frenet, double theta0 = 0.0);

/// Unit tangent field, at each curve sample, of the geodesic from p to the
/// sample (pointing away from p), plus lambda(s) = <D_t field, t>.  For a
/// curve at constant geodesic distance z0 from p this field is rotation
/// minimizing with lambda = cot(z0/r)/r (coth for the hyperboloid, 1/z0 in
/// euclidean space).
struct CenterTangentField {
    std::vector<Vec> field;
    std::vector<double> lambda;
};
CenterTangentField center_tangent_field(const Curve& curve, const Point& p);

}  // namespace geocurve
