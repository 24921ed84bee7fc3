#pragma once

#include "geocurve/classification.hpp"
#include "geocurve/curve.hpp"
#include "geocurve/framing.hpp"
#include "geocurve/types.hpp"

#include <optional>
#include <string>

namespace geocurve::io {

/// Shortest fixed-width float serialization that round-trips doubles exactly
/// (17 significant digits).
std::string format_double(double x);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// Curve schema:
///   {"space": {"kind": "sphere|hyperbolic|euclidean", "m": int, "radius": float},
///    "closed": bool,
///    "samples": [[float, ...], ...],
///    "arclength": [float, ...]}        (optional on read, always written)
std::string curve_to_json(const Curve& curve);

/// Parses and validates the curve schema.  Malformed documents throw
/// ErrorCode::parse.  A duplicate endpoint (first/last within 1e-9) marks the
/// curve closed and is dropped.  Without "arclength" the parameter falls back
/// to the cumulative chordal length, leaving resampling to the caller.
Curve curve_from_json(const std::string& text);

/// One row per sample, columns s, x0..x{d-1}.
std::string curve_to_csv(const Curve& curve);

/// Frame dump with a column-manifest header: s, tangent and RM normal
/// coordinates, the development columns kappa_1..kappa_m, and when Frenet
/// data is present the principal normal / binormal coordinates with kappa
/// and tau.
std::string frames_to_csv(const Curve& curve, const RMData& rm, const FrenetData* frenet);

std::string frames_to_json(const Curve& curve, const RMData& rm, const FrenetData* frenet);

/// {"spherical": {"is", "z0", "center", "residual", "regime"},
///  "totally_geodesic": {"is", "normal", "residual", "origin_offset"},
///  "tolerances": {"residual", "origin"}, "conflict"}
std::string report_to_json(const ClassificationReport& report);

}  // namespace geocurve::io
