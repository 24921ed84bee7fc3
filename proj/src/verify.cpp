#include "geocurve/verify.hpp"

#include "geocurve/ambient.hpp"
#include "geocurve/classification.hpp"
#include "geocurve/curve.hpp"
#include "geocurve/framing.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <tuple>

namespace geocurve::verify {

namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ull;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebull;
    x ^= x >> 31;
    return x;
}

double rms(const std::vector<double>& values) {
    double sq = 0.0;
    for (double v : values) sq += v * v;
    return std::sqrt(sq / double(values.size()));
}

/// RMS over the differentiation-safe interior: on open arcs the one-sided
/// end stencils of the nested derivative chain contaminate a boundary layer
/// a few samples deep, which says nothing about the characterization itself.
double arc_rms(const std::vector<double>& values, bool closed) {
    const std::size_t trim = closed ? 0 : std::min<std::size_t>(12, values.size() / 10);
    double sq = 0.0;
    std::size_t count = 0;
    for (std::size_t k = trim; k + trim < values.size(); ++k) {
        sq += values[k] * values[k];
        ++count;
    }
    return std::sqrt(sq / double(count));
}

/// Open sub-curve of `len` samples starting at k0 (wrapping when closed).
Curve sub_curve(const Curve& curve, std::size_t k0, std::size_t len) {
    Curve out;
    out.space = curve.space;
    out.closed = false;
    const double h = curve.step();
    out.samples.reserve(len);
    out.s.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        out.samples.push_back(curve.samples[(k0 + i) % curve.size()]);
        out.s.push_back(double(i) * h);
    }
    return out;
}

/// Longest contiguous run of `good` indices, wrapping around for closed
/// curves; returns {start, length} with length capped at the sample count.
std::pair<std::size_t, std::size_t> longest_run(const std::vector<bool>& good, bool closed) {
    const std::size_t n = good.size();
    std::size_t best_start = 0, best_len = 0, start = 0, len = 0;
    const std::size_t span = closed ? 2 * n : n;
    for (std::size_t i = 0; i < span; ++i) {
        if (good[i % n]) {
            if (len == 0) start = i;
            ++len;
            if (len > best_len) {
                best_len = len;
                best_start = start;
            }
        } else {
            len = 0;
        }
    }
    return {best_start % n, std::min(best_len, n)};
}

struct SphereCase {
    SpaceSpec space;
    Point center;
    double z0 = 0.0;
    Curve curve;
};

std::vector<SphereCase> make_sphere_cases(const VerifyOptions& opt) {
    std::vector<std::tuple<SpaceKind, int, double, double>> grid;
    for (SpaceKind kind : {SpaceKind::sphere, SpaceKind::hyperbolic})
        for (int m : {1, 2, 3})
            for (double r : {0.5, 1.0, 2.0})
                for (double zf : {0.3, 0.7}) grid.emplace_back(kind, m, r, zf);

    std::vector<SphereCase> cases;
    for (int i = 0; i < 50; ++i) {
        const auto [kind, m, r, zf] = grid[i % grid.size()];
        const SpaceSpec space{kind, m, r};
        std::mt19937_64 rng(mix(opt.seed, 200 + i));
        const Point p = random_model_point(space, rng);
        const FourierLoopSpec loop = sphere_loop_for(space, rng());
        const double z0 = zf * r;
        cases.push_back({space, p, z0,
                         generate_geodesic_sphere_curve(space, p, z0, loop, opt.n)});
    }
    return cases;
}

void check_exp_log(const VerifyOptions& opt, CheckResult& out) {
    const SpaceSpec spaces[] = {{SpaceKind::sphere, 1, 1.0},
                                {SpaceKind::sphere, 2, 2.0},
                                {SpaceKind::hyperbolic, 1, 1.0},
                                {SpaceKind::hyperbolic, 2, 0.5}};
    double worst_ratio = 0.0;
    long pairs = 0;
    for (std::size_t c = 0; c < 4; ++c) {
        const SpaceSpec& space = spaces[c];
        std::mt19937_64 rng(mix(opt.seed, 100 + c));
        const double bound = 1e-10 * std::max(1.0, space.r);
        for (int i = 0; i < 1000; ++i) {
            const Point p = random_model_point(space, rng);
            for (;;) {
                const Point q = random_model_point(space, rng);
                try {
                    const auto [u, dir] = log_map(space, p, q);
                    const Point back = exp_map(space, p, dir.vec, u);
                    worst_ratio =
                        std::max(worst_ratio, (back.coords - q.coords).norm() / bound);
                    break;
                } catch (const Error&) {
                    // coincident or antipodal draw; take a fresh q
                }
            }
            ++pairs;
        }
    }
    out.pass = worst_ratio < 1.0;
    out.details = std::to_string(pairs) + " pairs; worst error " + num(worst_ratio) +
                  "x of the 1e-10 max(1,r) bound";
}

void check_sphere_pipeline(const VerifyOptions& opt, const std::vector<SphereCase>& cases,
                           CheckResult& out) {
    double worst_fit = 0.0, worst_z0 = 0.0, worst_center = 0.0;
    int verdicts = 0;
    for (const SphereCase& sc : cases) {
        const RMData rm = rm_transport(sc.curve);
        const NormalDevelopment dev = normal_development(rm, sc.curve.s);
        const HyperplaneFit fit = fit_hyperplane(dev);
        const SphericalVerdict verdict =
            classify_spherical(sc.space, fit, opt.tol_residual, opt.tol_origin);
        worst_fit = std::max(
            worst_fit, fit.rms_residual / (opt.tol_residual * std::max(fit.scale, fit.c)));
        if (!verdict.is_geodesic_sphere || !verdict.z0) continue;
        ++verdicts;
        worst_z0 = std::max(worst_z0, std::abs(*verdict.z0 - sc.z0) / (1e-4 * sc.space.r));
        const auto [center, spread] = recover_center(sc.curve, rm, fit, *verdict.z0);
        worst_center = std::max(
            worst_center,
            geodesic_distance(sc.space, center, sc.center) / (1e-4 * sc.space.r));
        (void)spread;
    }
    out.pass = verdicts == int(cases.size()) && worst_fit < 1.0 && worst_z0 < 1.0 &&
               worst_center < 1.0;
    out.details = std::to_string(verdicts) + "/" + std::to_string(cases.size()) +
                  " classified; worst of bound: fit " + num(worst_fit) + "x, z0 " +
                  num(worst_z0) + "x, center " + num(worst_center) + "x";
}

void check_sections(const VerifyOptions& opt, CheckResult& out) {
    const double radii[] = {0.5, 1.0, 2.0};
    double worst_offset = 0.0, worst_angle = 0.0;
    int passed = 0, total = 0;
    const SpaceKind kinds[] = {SpaceKind::euclidean, SpaceKind::sphere, SpaceKind::hyperbolic};
    for (std::size_t kk = 0; kk < 3; ++kk) {
        for (int i = 0; i < 20; ++i) {
            const int m = 1 + i % 3;
            const double r = kinds[kk] == SpaceKind::euclidean ? 1.0 : radii[i % 3];
            const SpaceSpec space{kinds[kk], m, r};
            std::mt19937_64 rng(mix(opt.seed, 300 + 20 * kk + i));
            const Vec normal = random_section_normal(space, rng);
            const Curve curve = generate_totally_geodesic_curve(space, normal,
                                                                section_loop_for(space, rng()), opt.n);
            const RMData rm = rm_transport(curve);
            const TotallyGeodesicVerdict verdict = classify_totally_geodesic(
                curve, normal_development(rm, curve.s), opt.tol_origin);
            ++total;
            if (verdict.is_totally_geodesic) ++passed;
            worst_offset = std::max(worst_offset, verdict.origin_offset / opt.tol_origin);
            const double cosang =
                std::min(1.0, std::abs(verdict.section.normal.dot(normal.normalized())));
            worst_angle = std::max(worst_angle, std::acos(cosang) / 1e-4);
        }
    }

    double min_control = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 20; ++i) {
        const SpaceKind kind = kinds[i % 3];
        const int m = 1 + i % 3;
        const double r = kind == SpaceKind::euclidean ? 1.0 : radii[(i / 3) % 3];
        const SpaceSpec space{kind, m, r};
        std::mt19937_64 rng(mix(opt.seed, 400 + i));
        const Point p = random_model_point(space, rng);
        const Curve curve =
            generate_geodesic_sphere_curve(space, p, 0.3 * r, sphere_loop_for(space, rng()), opt.n);
        const HyperplaneFit fit =
            fit_hyperplane(normal_development(rm_transport(curve), curve.s));
        min_control = std::min(min_control, fit.c / fit.scale);
    }

    out.pass = passed == total && worst_offset < 1.0 && worst_angle < 1.0 && min_control > 0.1;
    out.details = std::to_string(passed) + "/" + std::to_string(total) +
                  " sections; worst offset " + num(worst_offset) + "x, normal angle " +
                  num(worst_angle) + "x of bounds; control min c/scale " + num(min_control);
}

void check_center_field(const VerifyOptions& opt, const std::vector<SphereCase>& cases,
                        CheckResult& out) {
    (void)opt;
    double worst_off = 0.0, worst_lambda = 0.0;
    for (const SphereCase& sc : cases) {
        const CenterTangentField ctf = center_tangent_field(sc.curve, sc.center);
        const std::vector<Vec> deriv = covariant_derivative(
            sc.space, sc.curve.samples, ctf.field, sc.curve.step(), sc.curve.closed);
        const CurveDerivatives der = derivatives(sc.curve);
        const double ratio = sc.z0 / sc.space.r;
        const double expected = (sc.space.kind == SpaceKind::sphere
                                     ? std::cos(ratio) / std::sin(ratio)
                                     : std::cosh(ratio) / std::sinh(ratio)) /
                                sc.space.r;
        for (std::size_t k = 0; k < sc.curve.size(); ++k) {
            const Vec t = der.tangent[k] / form_norm(sc.space, der.tangent[k]);
            const double lam = inner(sc.space, deriv[k], t);
            worst_off = std::max(worst_off, (deriv[k] - lam * t).norm() / 1e-6);
            worst_lambda = std::max(
                worst_lambda, std::abs(ctf.lambda[k] - expected) / std::abs(expected) / 1e-4);
        }
    }
    out.pass = worst_off < 1.0 && worst_lambda < 1.0;
    out.details = std::to_string(cases.size()) + " curves; worst off-tangent derivative " +
                  num(worst_off) + "x, lambda error " + num(worst_lambda) + "x of bounds";
}

/// Generated curve (spherical or control) restricted to an arc on which the
/// named torsion components stay inside the band (floor, cap) in magnitude;
/// empty when no long enough arc exists for this seed.  The cap matters as
/// much as the floor: torsion spikes several times the sampling bandwidth
/// cannot feed a finite-difference ODE residual meaningfully.
struct TorsionArc {
    Curve curve;
    FrenetData frenet;
    bool found = false;
};

constexpr double kArcTorsionCap = 5.0;

TorsionArc torsion_arc(const Curve& curve, int torsion_count, double floor,
                       std::size_t min_run) {
    TorsionArc out;
    FrenetData frenet;
    try {
        frenet = curve.space.kind == SpaceKind::euclidean && curve.space.m == 3
                     ? euclidean_frenet_general(curve)
                     : frenet_frame_3d(curve);
    } catch (const Error&) {
        return out;
    }
    std::vector<bool> good(curve.size(), true);
    for (int j = 0; j < torsion_count; ++j)
        for (std::size_t k = 0; k < curve.size(); ++k) {
            const double mag = std::abs(frenet.torsions[j][k]);
            if (mag <= floor || mag >= kArcTorsionCap) good[k] = false;
        }
    const auto [start, len] = longest_run(good, curve.closed);
    if (len < min_run) return out;

    if (len == curve.size() && curve.closed) {
        out.curve = curve;
        out.frenet = frenet;
        out.found = true;
        return out;
    }
    out.curve = sub_curve(curve, start, len);
    try {
        out.frenet = out.curve.space.kind == SpaceKind::euclidean && out.curve.space.m == 3
                         ? euclidean_frenet_general(out.curve)
                         : frenet_frame_3d(out.curve);
    } catch (const Error&) {
        return out;
    }
    for (int j = 0; j < torsion_count; ++j)
        for (std::size_t k = 0; k < out.curve.size(); ++k) {
            const double mag = std::abs(out.frenet.torsions[j][k]);
            if (mag <= 0.8 * floor || mag >= 1.25 * kArcTorsionCap) return out;
        }
    out.found = true;
    return out;
}

TorsionArc find_torsion_arc(const VerifyOptions& opt, const SpaceSpec& space, bool spherical,
                            int torsion_count, std::uint64_t salt) {
    const std::size_t min_run = std::max<std::size_t>(200, std::size_t(opt.n) / 4);
    for (int attempt = 0; attempt < 60; ++attempt) {
        std::mt19937_64 rng(mix(opt.seed, salt + attempt));
        Curve curve;
        if (spherical) {
            const Point p = random_model_point(space, rng);
            const double z0 = space.kind == SpaceKind::euclidean ? 1.3 : 0.6 * space.r;
            curve = generate_geodesic_sphere_curve(space, p, z0, sphere_loop_for(space, rng()),
                                                   opt.n);
        } else {
            curve = generate_random_curve(space, ambient_loop_for(space, rng()), opt.n);
        }
        TorsionArc arc = torsion_arc(curve, torsion_count, 0.05, min_run);
        if (arc.found) return arc;
    }
    return {};
}

void check_frenet_ode(const VerifyOptions& opt, CheckResult& out) {
    const SpaceSpec spaces3[] = {{SpaceKind::sphere, 2, 1.0},
                                 {SpaceKind::hyperbolic, 2, 1.0},
                                 {SpaceKind::euclidean, 2, 1.0}};
    double worst_spherical3 = 0.0;
    double min_control3 = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < 3; ++c) {
        const TorsionArc sph = find_torsion_arc(opt, spaces3[c], true, 1, 500 + 100 * c);
        const TorsionArc ctrl = find_torsion_arc(opt, spaces3[c], false, 1, 550 + 100 * c);
        if (!sph.found || !ctrl.found) {
            out.pass = false;
            out.details = "no curve with torsion bounded away from zero for space " +
                          to_string(spaces3[c].kind);
            return;
        }
        worst_spherical3 = std::max(
            worst_spherical3,
            arc_rms(frenet_sphere_residual(sph.curve, sph.frenet), sph.curve.closed));
        min_control3 = std::min(
            min_control3,
            arc_rms(frenet_sphere_residual(ctrl.curve, ctrl.frenet), ctrl.curve.closed));
    }

    const SpaceSpec e4{SpaceKind::euclidean, 3, 1.0};
    const TorsionArc sph4 = find_torsion_arc(opt, e4, true, 2, 900);
    const TorsionArc ctrl4 = find_torsion_arc(opt, e4, false, 2, 950);
    if (!sph4.found || !ctrl4.found) {
        out.pass = false;
        out.details = "no E4 curve with torsions bounded away from zero";
        return;
    }
    const double rms4_sph =
        arc_rms(euclidean_frenet_residual_e4(sph4.curve, sph4.frenet), sph4.curve.closed);
    const double rms4_ctrl =
        arc_rms(euclidean_frenet_residual_e4(ctrl4.curve, ctrl4.frenet), ctrl4.curve.closed);

    out.pass = worst_spherical3 < 1e-3 && min_control3 > 1e-1 && rms4_sph < 1e-2 &&
               rms4_ctrl > 1e-1;
    out.details = "3D spherical RMS " + num(worst_spherical3) + " (< 0.001), control " +
                  num(min_control3) + " (> 0.1); 4D spherical " + num(rms4_sph) +
                  " (< 0.01), control " + num(rms4_ctrl) + " (> 0.1)";
}

void check_rm_frenet(const VerifyOptions& opt, CheckResult& out) {
    const SpaceSpec e3{SpaceKind::euclidean, 2, 1.0};
    double worst_pyth = 0.0, worst_theta = 0.0, worst_dev = 0.0;
    int built = 0;
    for (int i = 0; i < 40 && built < 5; ++i) {
        std::mt19937_64 rng(mix(opt.seed, 600 + i));
        const Curve curve = generate_random_curve(e3, ambient_loop_for(e3, rng()), opt.n);
        FrenetData frenet;
        try {
            frenet = frenet_frame_3d(curve);
        } catch (const Error&) {
            continue;
        }
        if (*std::min_element(frenet.curvature.begin(), frenet.curvature.end()) < 0.05)
            continue;
        double tau_max = 0.0;
        for (double v : frenet.torsions[0]) tau_max = std::max(tau_max, std::abs(v));
        if (tau_max > 8.0) continue;  // unresolvable torsion spike at this density
        ++built;

        const RMData conv = rm_from_frenet_e3(curve, frenet, 0.0);
        for (std::size_t k = 0; k < curve.size(); ++k) {
            const double kappa2 = frenet.curvature[k] * frenet.curvature[k];
            const double sum = conv.development(long(k), 0) * conv.development(long(k), 0) +
                               conv.development(long(k), 1) * conv.development(long(k), 1);
            worst_pyth = std::max(
                worst_pyth, std::abs(sum - kappa2) / std::max(1.0, kappa2) / 1e-12);
        }

        const double h = curve.step();
        std::vector<double> theta =
            detail::cumulative_integral(frenet.torsions[0], h, curve.closed);
        const std::vector<double> dtheta = detail::fd_derivative(theta, h, false);
        std::vector<double> gap(curve.size());
        for (std::size_t k = 0; k < curve.size(); ++k)
            gap[k] = dtheta[k] - frenet.torsions[0][k];
        worst_theta = std::max(worst_theta, rms(gap) / 1e-5);

        const RMData trans = rm_transport(curve);
        double cs = 0.0, sn = 0.0;
        for (long k = 0; k < long(curve.size()); ++k) {
            const double a0 = trans.development(k, 0), a1 = trans.development(k, 1);
            const double b0 = conv.development(k, 0), b1 = conv.development(k, 1);
            cs += a0 * b0 + a1 * b1;
            sn += a0 * b1 - a1 * b0;
        }
        const double phi = std::atan2(sn, cs);
        double sq = 0.0;
        for (long k = 0; k < long(curve.size()); ++k) {
            const double a0 = trans.development(k, 0), a1 = trans.development(k, 1);
            const double b0 = conv.development(k, 0), b1 = conv.development(k, 1);
            const double r0 = std::cos(phi) * a0 - std::sin(phi) * a1 - b0;
            const double r1 = std::sin(phi) * a0 + std::cos(phi) * a1 - b1;
            sq += r0 * r0 + r1 * r1;
        }
        worst_dev = std::max(worst_dev, std::sqrt(sq / double(curve.size())) / 1e-5);
    }
    out.pass = built == 5 && worst_pyth < 1.0 && worst_theta < 1.0 && worst_dev < 1.0;
    out.details = std::to_string(built) + " curves; worst of bound: kappa identity " +
                  num(worst_pyth) + "x, theta'-tau " + num(worst_theta) +
                  "x, development gap " + num(worst_dev) + "x";
}

void check_gauss(const VerifyOptions& opt, CheckResult& out) {
    const double radii[] = {0.5, 1.0, 2.0};
    double worst_normal = 0.0;
    for (SpaceKind kind : {SpaceKind::sphere, SpaceKind::hyperbolic}) {
        for (int i = 0; i < 10; ++i) {
            const int m = 1 + i % 3;
            const double r = radii[i % 3];
            const SpaceSpec space{kind, m, r};
            std::mt19937_64 rng(mix(opt.seed, 700 + (kind == SpaceKind::sphere ? 0 : 10) + i));
            const Curve curve = generate_random_curve(space, ambient_loop_for(space, rng()), opt.n);
            const CurveDerivatives der = derivatives(curve);
            for (std::size_t k = 0; k < curve.size(); ++k) {
                const Vec& q = curve.samples[k];
                const double tt = inner(space, der.tangent[k], der.tangent[k]);
                const Vec expected = -gauss_sign(space) * (tt / (r * r)) * q;
                const double coeff =
                    inner(space, der.acceleration[k], q) / inner(space, q, q);
                worst_normal = std::max(worst_normal, (coeff * q - expected).norm() / 1e-6);
            }
        }
    }

    double worst_geodesic = 0.0;
    const SpaceKind kinds[] = {SpaceKind::euclidean, SpaceKind::sphere, SpaceKind::hyperbolic};
    for (std::size_t kk = 0; kk < 3; ++kk) {
        const SpaceSpec space{kinds[kk], 2, 1.0};
        std::mt19937_64 rng(mix(opt.seed, 750 + kk));
        const Point p = random_model_point(space, rng);
        const Vec v = random_unit_tangent(space, p, rng);
        const Curve curve = generate_geodesic(space, p, v, opt.n);
        const CurveDerivatives der = derivatives(curve);
        const std::size_t lo = curve.closed ? 0 : 2;
        const std::size_t hi = curve.closed ? curve.size() : curve.size() - 2;
        for (std::size_t k = lo; k < hi; ++k) {
            const Vec& q = curve.samples[k];
            Vec cov = der.acceleration[k];
            if (space.curved()) {
                const double tt = inner(space, der.tangent[k], der.tangent[k]);
                cov += gauss_sign(space) * (tt / (space.r * space.r)) * q;
                cov = project_to_tangent(space, q, cov);
            }
            worst_geodesic = std::max(worst_geodesic, cov.norm() / 1e-6);
        }
    }
    out.pass = worst_normal < 1.0 && worst_geodesic < 1.0;
    out.details = "worst of bound: normal component " + num(worst_normal) +
                  "x, geodesic covariant acceleration " + num(worst_geodesic) + "x";
}

void check_large_radius(const VerifyOptions& opt, CheckResult& out) {
    out.pass = true;
    out.details.clear();
    for (SpaceKind kind : {SpaceKind::sphere, SpaceKind::hyperbolic}) {
        double prev = std::numeric_limits<double>::infinity();
        std::string trail;
        for (double r : {10.0, 100.0}) {
            const SpaceSpec space{kind, 2, r};
            std::mt19937_64 rng(mix(opt.seed, 800 + (kind == SpaceKind::sphere ? 0 : 1)));
            const Point p = random_model_point(space, rng);
            const Curve curve =
                generate_geodesic_sphere_curve(space, p, 1.0, sphere_loop_for(space, rng()), opt.n);
            const HyperplaneFit fit =
                fit_hyperplane(normal_development(rm_transport(curve), curve.s));
            const double z_flat = 1.0 / fit.c;
            const double z_curved = kind == SpaceKind::sphere
                                        ? r * std::atan(1.0 / (r * fit.c))
                                        : r * std::atanh(1.0 / (r * fit.c));
            const double rel = std::abs(z_curved - z_flat) / z_flat;
            if (rel >= 1e-2 || rel >= prev) out.pass = false;
            prev = rel;
            trail += (trail.empty() ? "" : " -> ") + num(rel);
        }
        if (!out.details.empty()) out.details += "; ";
        out.details += to_string(kind) + " gap " + trail;
    }
    out.details += " (each < 0.01 and decreasing)";
}

template <class Body>
CheckResult timed(const char* name, double budget, Body&& body) {
    CheckResult res;
    res.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(res);
    } catch (const std::exception& e) {
        res.pass = false;
        res.details = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget > 0.0 && res.seconds > budget && res.pass) {
        res.pass = false;
        res.details += "; exceeded the time budget";
    }
    return res;
}

}  // namespace

std::vector<CheckResult> run_all_checks(const VerifyOptions& options) {
    std::vector<CheckResult> results;
    std::vector<SphereCase> cases;

    results.push_back(timed("exp/log round trip", 1.0,
                            [&](CheckResult& r) { check_exp_log(options, r); }));
    results.push_back(
        timed("geodesic-sphere development fit & center recovery", 30.0, [&](CheckResult& r) {
            cases = make_sphere_cases(options);
            check_sphere_pipeline(options, cases, r);
        }));
    results.push_back(timed("totally-geodesic sections", 0.0,
                            [&](CheckResult& r) { check_sections(options, r); }));
    results.push_back(timed("center-tangent RM field", 0.0, [&](CheckResult& r) {
        if (cases.empty()) cases = make_sphere_cases(options);
        check_center_field(options, cases, r);
    }));
    results.push_back(timed("Frenet sphere ODE discrimination (3D + 4D)", 0.0,
                            [&](CheckResult& r) { check_frenet_ode(options, r); }));
    results.push_back(timed("RM vs Frenet consistency (E3)", 0.0,
                            [&](CheckResult& r) { check_rm_frenet(options, r); }));
    results.push_back(timed("Gauss formula decomposition", 0.0,
                            [&](CheckResult& r) { check_gauss(options, r); }));
    results.push_back(timed("large-radius Euclidean limit", 0.0,
                            [&](CheckResult& r) { check_large_radius(options, r); }));
    return results;
}

}  // namespace geocurve::verify
