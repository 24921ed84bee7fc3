#pragma once

#include "geocurve/ambient.hpp"
#include "geocurve/types.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace geocurve {

/// Arc-length-sampled curve in the embedding of its model.  After resampling
/// the parameter values are uniform: s_k = k h, with total length N h for
/// closed curves and s_{N-1} for open ones.
struct Curve {
    SpaceSpec space;
    std::vector<Vec> samples;
    std::vector<double> s;
    bool closed = false;

    std::size_t size() const { return samples.size(); }
    /// Uniform step; throws unless the parameter grid is uniform.
    double step() const;
    bool uniform(double rel_tol = 1e-9) const;
    double total_length() const;
};

/// Throws unless the curve satisfies its invariants: matching sizes, >= 5
/// samples, strictly increasing s, samples on the model quadric.
void validate_curve(const Curve& curve);

/// First and second arc-length derivatives of the samples: 4th-order centered
/// stencils (periodic when closed), one-sided fourth-order at open ends.
/// tangents are projected to the tangent space of the model.
struct CurveDerivatives {
    std::vector<Vec> tangent;
    std::vector<Vec> acceleration;
};
CurveDerivatives derivatives(const Curve& curve);

/// Resample the curve uniformly by arc length at n points.  The curve is
/// interpolated with a cubic spline (periodic when closed), the cumulative
/// length table is built by composite Simpson on the spline speed over a
/// refined grid, and the resampled points are re-projected onto the model.
Curve arc_length_resample(const Curve& curve, int n);

/// Truncated Fourier loop in R^dim used to seed the curve generators:
///   coord_j(theta) = cos_coeffs(j,0) + sum_k cos_coeffs(j,k) cos(k theta)
///                                    + sin_coeffs(j,k-1) sin(k theta).
struct FourierLoopSpec {
    int dim = 2;
    int modes = 4;
    Mat cos_coeffs;  // dim x (modes+1), column 0 is the constant term
    Mat sin_coeffs;  // dim x modes

    Vec eval(double theta) const;
    Vec eval_derivative(double theta) const;

    /// Deterministic random loop whose pointwise normalization to the unit
    /// sphere is regular (min speed > 1e-3); draws coefficient sets from the
    /// seeded generator until one passes.
    static FourierLoopSpec random_on_sphere(int dim, std::uint64_t seed, int modes = 4);
    /// Deterministic random loop that is regular as a free loop in R^dim.
    static FourierLoopSpec random_free(int dim, std::uint64_t seed, int modes = 4);
    /// Unit circle in the first two coordinates.
    static FourierLoopSpec circle(int dim);
};

/// Closed curve at constant geodesic distance z0 from p: the loop is
/// normalized onto the unit sphere of T_p, reparametrized to unit speed, and
/// pushed through exp_map, so the result is arc-length parametrized by
/// construction.  On the sphere z0 must stay below pi r / 2.
Curve generate_geodesic_sphere_curve(const SpaceSpec& space, const Point& p, double z0,
                                     const FourierLoopSpec& loop, int n);

/// Curve inside the totally geodesic hypersurface orthogonal to `normal`
/// (ambient form pairing).  The normal must be spacelike for the hyperboloid.
/// For m = 1 the hypersurface is itself a geodesic and the result is that
/// geodesic; otherwise a random loop inside the hypersurface is used.
Curve generate_totally_geodesic_curve(const SpaceSpec& space, const Vec& normal,
                                      const FourierLoopSpec& loop, int n);

/// Unit-speed geodesic through p with initial direction v: the full great
/// circle on the sphere, an open segment of length pi r (or pi) otherwise.
Curve generate_geodesic(const SpaceSpec& space, const Point& p, const Vec& v, int n);

/// Generic closed curve of the model with no imposed structure, used as the
/// negative control in classification tests.
Curve generate_random_curve(const SpaceSpec& space, const FourierLoopSpec& loop, int n);

/// Gram-Schmidt basis of the orthogonal complement of `fixed` (ambient form),
/// built from the earliest coordinate axes with deterministic tie-breaking.
/// Each returned vector is unit; on the hyperboloid a timelike basis vector
/// is normalized to square -1 and listed first.
std::vector<Vec> orthonormal_complement(const SpaceSpec& space, const std::vector<Vec>& fixed,
                                        int count);

/// Deterministic random draws feeding the generators: a point of the model,
/// a form-unit tangent vector at p, and a hypersurface-section normal
/// (spacelike with margin on the hyperboloid).
Point random_model_point(const SpaceSpec& space, std::mt19937_64& rng);
Vec random_unit_tangent(const SpaceSpec& space, const Point& p, std::mt19937_64& rng);
Vec random_section_normal(const SpaceSpec& space, std::mt19937_64& rng);

/// Loop conventions expected by the generators: the geodesic-sphere generator
/// wants a loop on the unit sphere of the (m+1)-dimensional tangent space,
/// the section generator a loop matching the hypersurface model, and the
/// random-curve generator a free ambient loop.
FourierLoopSpec sphere_loop_for(const SpaceSpec& space, std::uint64_t seed);
FourierLoopSpec section_loop_for(const SpaceSpec& space, std::uint64_t seed);
FourierLoopSpec ambient_loop_for(const SpaceSpec& space, std::uint64_t seed);

}  // namespace geocurve
