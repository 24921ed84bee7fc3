#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace geocurve {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Error categories surfaced by the library.  The CLI maps these onto its
/// exit-code contract, tests match on them directly.
enum class ErrorCode {
    dimension_mismatch,
    invalid_argument,
    domain,
    distance_zero,
    antipodal,
    regularity,
    insufficient_data,
    undefined_normal,
    vanishing_torsion,
    degenerate_derivative,
    numerical_instability,
    parse,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what, long sample = -1)
        : std::runtime_error(what), code_(code), sample_(sample) {}

    ErrorCode code() const { return code_; }
    /// Sample index the failure was detected at, or -1 when not tied to one.
    long sample() const { return sample_; }

  private:
    ErrorCode code_;
    long sample_;
};

enum class SpaceKind { euclidean, sphere, hyperbolic };

/// Model of a complete simply connected space of constant curvature:
///   euclidean   E^{m+1}                      (embedding dimension m+1)
///   sphere      S^{m+1}(r)  in E^{m+2}       (embedding dimension m+2)
///   hyperbolic  H^{m+1}(r)  in E_1^{m+2}     (embedding dimension m+2)
/// m is the codimension-1 count of rotation minimizing normal fields along a
/// curve, i.e. the manifold dimension is m+1.
struct SpaceSpec {
    SpaceKind kind = SpaceKind::euclidean;
    int m = 2;
    double r = 1.0;

    int manifold_dim() const { return m + 1; }
    int embedding_dim() const { return kind == SpaceKind::euclidean ? m + 1 : m + 2; }
    bool curved() const { return kind != SpaceKind::euclidean; }
};

/// Point on the model, stored in embedding coordinates.
struct Point {
    Vec coords;
};

/// Tangent vector at a base point, stored in embedding coordinates.
struct Tangent {
    Point base;
    Vec vec;
};

std::string to_string(SpaceKind kind);
SpaceKind space_kind_from_string(const std::string& name);

/// Throws unless the space spec itself is well formed (m >= 1, r > 0).
void validate_spec(const SpaceSpec& space);

/// Throws unless p satisfies the model constraint: |q| = r on the sphere,
/// <q,q>_1 = -r^2 with q[0] > 0 on the hyperboloid.  Euclidean points only
/// need the right dimension.
void validate_point(const SpaceSpec& space, const Point& p);

/// Throws unless v is based on a valid point and tangent to the model there.
void validate_tangent(const SpaceSpec& space, const Tangent& v);

}  // namespace geocurve
