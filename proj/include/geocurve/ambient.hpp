#pragma once

#include "geocurve/types.hpp"

#include <utility>
#include <vector>

namespace geocurve {

/// Ambient bilinear form of the model: the Euclidean dot product, except for
/// the hyperboloid model where it is the Lorentz form
///   <x,y>_1 = -x_0 y_0 + x_1 y_1 + ... .
double inner(const SpaceSpec& space, const Vec& x, const Vec& y);

/// Norm induced by the ambient form.  Only meaningful on vectors with
/// non-negative square (tangent vectors of the hyperboloid are spacelike).
double form_norm(const SpaceSpec& space, const Vec& x);

/// Outward unit position normal q/r of the quadric at q (timelike on the
/// hyperboloid).  Throws for euclidean spaces, which have no position normal.
Vec position_normal(const SpaceSpec& space, const Vec& q);

/// Sign of the tangential correction in the Gauss formula,
///   covariant = embedding derivative + sign * (1/r^2) <t,X> q,
/// +1 on the sphere, -1 on the hyperboloid, 0 in euclidean space.
double gauss_sign(const SpaceSpec& space);

/// Orthogonal projection of an embedding vector onto the tangent space at p,
/// taken with respect to the ambient form.  Identity for euclidean spaces.
Vec project_to_tangent(const SpaceSpec& space, const Vec& p, const Vec& w);

/// Nearest point of the model quadric: radial rescale onto the sphere or the
/// upper hyperboloid sheet.  Identity for euclidean spaces.
Vec project_to_model(const SpaceSpec& space, const Vec& x);

/// Geodesic exp: the point at arc length u along the unit-speed geodesic
/// leaving p with velocity v,
///   sphere      cos(u/r) p + r sin(u/r) v
///   hyperbolic  cosh(u/r) p + r sinh(u/r) v
///   euclidean   p + u v.
/// v must be unit with respect to the ambient form (relative 1e-9).
Point exp_map(const SpaceSpec& space, const Point& p, const Vec& v, double u);

/// Inverse of exp_map: distance u and unit initial velocity v of the
/// minimizing geodesic from p to q.  Throws distance_zero when q coincides
/// with p and antipodal when the direction is not unique on the sphere.
std::pair<double, Tangent> log_map(const SpaceSpec& space, const Point& p, const Point& q);

/// Length of the minimizing geodesic between two points of the model.
/// Inverse trigonometric arguments are clamped when within 1e-12 of the
/// domain boundary; drift beyond that is a domain error.
double geodesic_distance(const SpaceSpec& space, const Point& p, const Point& q);

/// Intrinsic covariant derivative of a tangent field sampled along a curve:
/// finite-difference derivative in the embedding plus the Gauss correction
/// sign * (1/r^2) <t,X> q, projected back to the tangent space.  `samples`
/// and `field` run over the curve samples; h is the (uniform) arc-length
/// step.  Periodic stencils when closed.
std::vector<Vec> covariant_derivative(const SpaceSpec& space,
                                      const std::vector<Vec>& samples,
                                      const std::vector<Vec>& field,
                                      double h,
                                      bool closed);

namespace detail {

/// Inverse-trig clamp shared by log_map / geodesic_distance: values within
/// `slack` of [lo, hi] are clamped, anything further out is a domain error.
double clamp_to_domain(double x, double lo, double hi, double slack, const char* what);

/// 4th-order finite difference derivative of a sampled vector sequence with
/// uniform step h; periodic stencils when closed, one-sided fourth-order
/// stencils at the ends of open sequences.
std::vector<Vec> fd_derivative(const std::vector<Vec>& f, double h, bool closed);
std::vector<double> fd_derivative(const std::vector<double>& f, double h, bool closed);

/// 4th-order second-derivative stencils under the same conventions.
std::vector<Vec> fd_second_derivative(const std::vector<Vec>& f, double h, bool closed);

/// Midpoint value between samples k and k+1 by 4-point interpolation
/// (periodic or clamped stencils), used by the frame transport integrator.
Vec midpoint_value(const std::vector<Vec>& f, long k, bool closed);

/// Cumulative integral of a sampled function with uniform step h via a
/// 4th-order composite quadrature (Simpson class); entry k holds the
/// integral from sample 0 to sample k.
std::vector<double> cumulative_integral(const std::vector<double>& f, double h, bool closed);

}  // namespace detail

}  // namespace geocurve
