#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geocurve/classification.hpp"

#include <cmath>
#include <random>

using namespace geocurve;

namespace {

const double kPi = std::acos(-1.0);

Vec make_vec(std::initializer_list<double> values) {
    Vec v(static_cast<long>(values.size()));
    long i = 0;
    for (double x : values) v[i++] = x;
    return v;
}

NormalDevelopment dev_from_rows(const std::vector<Vec>& rows) {
    NormalDevelopment dev;
    dev.samples.resize(static_cast<long>(rows.size()), rows.front().size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        dev.samples.row(static_cast<long>(k)) = rows[k].transpose();
        dev.s.push_back(static_cast<double>(k));
    }
    return dev;
}

Curve make_helix(double a, double b, double length, int n) {
    const double c = std::sqrt(a * a + b * b);
    Curve curve;
    curve.space = SpaceSpec{SpaceKind::euclidean, 2, 1.0};
    for (int k = 0; k < n; ++k) {
        const double s = length * k / (n - 1);
        curve.samples.push_back(
            make_vec({a * std::cos(s / c), a * std::sin(s / c), b * s / c}));
        curve.s.push_back(s);
    }
    return curve;
}

HyperplaneFit plain_fit(double c) {
    HyperplaneFit fit;
    fit.a = make_vec({1, 0});
    fit.c = c;
    fit.rms_residual = 0.0;
    fit.scale = 1.0;
    return fit;
}

}  // namespace

TEST_CASE("hyperplane fit oracles") {
    // two points (1,0) and (0,1): line x + y = 1, so a = -(1,1)/sqrt(2)
    const NormalDevelopment two = dev_from_rows(
        {make_vec({1, 0}), make_vec({0, 1}), make_vec({0.5, 0.5}), make_vec({0.25, 0.75})});
    const HyperplaneFit fit = fit_hyperplane(two);
    const double inv = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(fit.a[0] + inv) < 1e-12);
    CHECK(std::abs(fit.a[1] + inv) < 1e-12);
    CHECK(fit.c == doctest::Approx(inv));
    CHECK(fit.rms_residual < 1e-12);

    // constant one-dimensional development at 2
    const NormalDevelopment constant =
        dev_from_rows({make_vec({2}), make_vec({2}), make_vec({2})});
    const HyperplaneFit cfit = fit_hyperplane(constant);
    CHECK(cfit.a[0] == doctest::Approx(-1.0));
    CHECK(cfit.c == doctest::Approx(2.0));
    CHECK(cfit.rms_residual < 1e-12);
    CHECK(cfit.scale == doctest::Approx(2.0));

    // noisy data keeps c >= 0
    std::mt19937_64 rng(5);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Vec> rows;
    for (int k = 0; k < 200; ++k) {
        const double t = 0.03 * k;
        rows.push_back(make_vec({std::cos(t) + 1e-3 * gauss(rng),
                                 std::sin(t) + 1e-3 * gauss(rng)}));
    }
    const HyperplaneFit noisy = fit_hyperplane(dev_from_rows(rows));
    CHECK(noisy.c >= 0.0);
}

TEST_CASE("spherical regimes by space and offset") {
    const SpaceSpec sphere{SpaceKind::sphere, 1, 1.0};
    const SphericalVerdict on_sphere = classify_spherical(sphere, plain_fit(1.0), 1e-5, 1e-6);
    CHECK(on_sphere.is_geodesic_sphere);
    CHECK(on_sphere.regime == SphericalRegime::sphere);
    REQUIRE(on_sphere.z0.has_value());
    CHECK(*on_sphere.z0 == doctest::Approx(kPi / 4));

    const SpaceSpec hyper{SpaceKind::hyperbolic, 1, 1.0};
    const SphericalVerdict hyper_sphere = classify_spherical(hyper, plain_fit(2.0), 1e-5, 1e-6);
    CHECK(hyper_sphere.is_geodesic_sphere);
    CHECK(hyper_sphere.regime == SphericalRegime::sphere);
    REQUIRE(hyper_sphere.z0.has_value());
    CHECK(*hyper_sphere.z0 == doctest::Approx(std::atanh(0.5)));

    const SphericalVerdict equidistant = classify_spherical(hyper, plain_fit(0.5), 1e-5, 1e-6);
    CHECK_FALSE(equidistant.is_geodesic_sphere);
    CHECK(equidistant.regime == SphericalRegime::hyperbolic_non_sphere);
    CHECK_FALSE(equidistant.z0.has_value());

    const SphericalVerdict boundary =
        classify_spherical(hyper, plain_fit(1.0 + 1e-9), 1e-5, 1e-6);
    CHECK_FALSE(boundary.is_geodesic_sphere);
    CHECK(boundary.regime == SphericalRegime::indeterminate);

    const SphericalVerdict through_origin =
        classify_spherical(sphere, plain_fit(1e-9), 1e-5, 1e-6);
    CHECK_FALSE(through_origin.is_geodesic_sphere);
    CHECK(through_origin.regime == SphericalRegime::origin_line);

    const SpaceSpec euclid{SpaceKind::euclidean, 1, 1.0};
    const SphericalVerdict flat = classify_spherical(euclid, plain_fit(0.25), 1e-5, 1e-6);
    CHECK(flat.is_geodesic_sphere);
    REQUIRE(flat.z0.has_value());
    CHECK(*flat.z0 == doctest::Approx(4.0));

    HyperplaneFit rough = plain_fit(1.0);
    rough.rms_residual = 0.1;
    const SphericalVerdict noisy = classify_spherical(sphere, rough, 1e-5, 1e-6);
    CHECK_FALSE(noisy.is_geodesic_sphere);
}

TEST_CASE("full pipeline on a plane circle") {
    const double R = 2.0;
    const int n = 800;
    Curve curve;
    curve.space = SpaceSpec{SpaceKind::euclidean, 1, 1.0};
    curve.closed = true;
    for (int k = 0; k < n; ++k) {
        const double s = 2 * kPi * R * k / n;
        curve.samples.push_back(
            make_vec({3.0 + R * std::cos(s / R), -1.0 + R * std::sin(s / R)}));
        curve.s.push_back(s);
    }
    const ClassificationReport report = classify_curve(curve);
    CHECK(report.spherical.is_geodesic_sphere);
    REQUIRE(report.spherical.z0.has_value());
    CHECK(std::abs(*report.spherical.z0 - R) < 1e-6);
    REQUIRE(report.spherical.center.has_value());
    CHECK((report.spherical.center->coords - make_vec({3.0, -1.0})).norm() < 1e-6);
    CHECK(report.spherical.center_spread < 1e-6);
    // a plane curve in E^2 spans the whole model, so no proper section exists
    CHECK_FALSE(report.totally_geodesic.is_totally_geodesic);
    CHECK_FALSE(report.conflict);
}

TEST_CASE("equators are totally geodesic, not spherical") {
    const SpaceSpec sphere{SpaceKind::sphere, 2, 1.0};
    std::mt19937_64 rng(13);
    const Vec normal = random_section_normal(sphere, rng);
    const Curve curve =
        generate_totally_geodesic_curve(sphere, normal, section_loop_for(sphere, 29), 1500);
    const ClassificationReport report = classify_curve(curve);
    CHECK(report.totally_geodesic.is_totally_geodesic);
    CHECK(report.totally_geodesic.origin_offset < 1e-6);
    const Vec fitted = report.totally_geodesic.section.normal;
    const Vec expected = normal / normal.norm();
    CHECK(std::min((fitted - expected).norm(), (fitted + expected).norm()) < 1e-4);
    CHECK_FALSE(report.spherical.is_geodesic_sphere);
    CHECK_FALSE(report.conflict);
}

TEST_CASE("hyperbolic sections recover their normal") {
    const SpaceSpec hyper{SpaceKind::hyperbolic, 2, 1.5};
    std::mt19937_64 rng(17);
    const Vec normal = random_section_normal(hyper, rng);
    const Curve curve =
        generate_totally_geodesic_curve(hyper, normal, section_loop_for(hyper, 37), 1500);
    const ClassificationReport report = classify_curve(curve);
    CHECK(report.totally_geodesic.is_totally_geodesic);
    const Vec fitted = report.totally_geodesic.section.normal;
    const Vec expected = normal / normal.norm();
    CHECK(std::min((fitted - expected).norm(), (fitted + expected).norm()) < 1e-4);
    CHECK_FALSE(report.spherical.is_geodesic_sphere);
}

TEST_CASE("geodesics are flagged as non-unique sections") {
    const SpaceSpec sphere{SpaceKind::sphere, 2, 1.0};
    std::mt19937_64 rng(19);
    const Point p = random_model_point(sphere, rng);
    const Vec v = random_unit_tangent(sphere, p, rng);
    const Curve curve = generate_geodesic(sphere, p, v, 1200);
    const ClassificationReport report = classify_curve(curve);
    CHECK(report.totally_geodesic.is_totally_geodesic);
    CHECK_FALSE(report.totally_geodesic.section.unique);
    CHECK(report.spherical.regime == SphericalRegime::origin_line);
}

TEST_CASE("random curves fail both tests") {
    const SpaceSpec spaces[] = {{SpaceKind::sphere, 2, 1.0},
                                {SpaceKind::hyperbolic, 2, 1.0},
                                {SpaceKind::euclidean, 2, 1.0}};
    for (const SpaceSpec& space : spaces) {
        const Curve curve = generate_random_curve(space, ambient_loop_for(space, 41), 1200);
        const ClassificationReport report = classify_curve(curve);
        CHECK_FALSE(report.spherical.is_geodesic_sphere);
        CHECK_FALSE(report.totally_geodesic.is_totally_geodesic);
        CHECK_FALSE(report.conflict);
    }
}

TEST_CASE("classification is gauge invariant") {
    const SpaceSpec sphere{SpaceKind::sphere, 2, 1.0};
    std::mt19937_64 rng(23);
    const Point p = random_model_point(sphere, rng);
    const Curve curve =
        generate_geodesic_sphere_curve(sphere, p, 0.5, sphere_loop_for(sphere, 43), 1200);
    const RMData base = rm_transport(curve);
    const double phi = 1.1;
    std::vector<Vec> rotated = {
        std::cos(phi) * base.normals[0][0] + std::sin(phi) * base.normals[0][1],
        -std::sin(phi) * base.normals[0][0] + std::cos(phi) * base.normals[0][1]};
    const RMData turned = rm_transport(curve, rotated);

    const HyperplaneFit fit_a = fit_hyperplane(normal_development(base, curve.s));
    const HyperplaneFit fit_b = fit_hyperplane(normal_development(turned, curve.s));
    CHECK(std::abs(fit_a.c - fit_b.c) < 1e-8);
    CHECK(std::abs(fit_a.rms_residual - fit_b.rms_residual) < 1e-8);

    const SphericalVerdict va = classify_spherical(sphere, fit_a, 1e-5, 1e-6);
    const SphericalVerdict vb = classify_spherical(sphere, fit_b, 1e-5, 1e-6);
    REQUIRE(va.z0.has_value());
    REQUIRE(vb.z0.has_value());
    CHECK(std::abs(*va.z0 - *vb.z0) < 1e-8);
    CHECK(std::abs(*va.z0 - 0.5) < 1e-5);

    const auto [ca, spread_a] = recover_center(curve, base, fit_a, *va.z0);
    const auto [cb, spread_b] = recover_center(curve, turned, fit_b, *vb.z0);
    CHECK((ca.coords - cb.coords).norm() < 1e-8);
    CHECK((ca.coords - p.coords).norm() < 1e-5);
    CHECK(spread_a < 1e-6);
}

TEST_CASE("recovered centers match the generator across spaces") {
    struct Case {
        SpaceSpec space;
        double z0;
    };
    const Case cases[] = {{{SpaceKind::sphere, 1, 1.0}, 0.4},
                          {{SpaceKind::sphere, 3, 2.0}, 1.1},
                          {{SpaceKind::hyperbolic, 2, 1.0}, 0.7},
                          {{SpaceKind::euclidean, 2, 1.0}, 1.3}};
    for (const Case& c : cases) {
        std::mt19937_64 rng(51);
        const Point p = random_model_point(c.space, rng);
        const Curve curve = generate_geodesic_sphere_curve(
            c.space, p, c.z0, sphere_loop_for(c.space, 53), 1500);
        const ClassificationReport report = classify_curve(curve);
        CHECK(report.spherical.is_geodesic_sphere);
        REQUIRE(report.spherical.z0.has_value());
        CHECK(std::abs(*report.spherical.z0 - c.z0) < 1e-5 * std::max(1.0, c.space.r));
        REQUIRE(report.spherical.center.has_value());
        CHECK(geodesic_distance(c.space, *report.spherical.center, p) <
              1e-4 * std::max(1.0, c.space.r));
        CHECK(report.spherical.center_spread < 1e-4 * std::max(1.0, c.space.r));
    }
}

TEST_CASE("helix frenet residual is the reciprocal radius term") {
    // kappa = tau = 1/2: rho = 2 is constant, so the residual is tau rho = 1
    const Curve helix = make_helix(1.0, 1.0, 4 * kPi * std::sqrt(2.0), 1200);
    const FrenetData frenet = frenet_frame_3d(helix);
    const std::vector<double> residual = frenet_sphere_residual(helix, frenet);
    for (std::size_t k = 4; k + 4 < residual.size(); ++k)
        CHECK(std::abs(residual[k] - 1.0) < 1e-4);
}

TEST_CASE("spherical curves in three dimensional models satisfy the frenet ode") {
    // A closed spherical curve integrates its torsion to zero, so the ODE is
    // checked on the longest open arc where the torsion stays well away from
    // zero.
    const SpaceSpec spaces[] = {{SpaceKind::sphere, 2, 1.0},
                                {SpaceKind::hyperbolic, 2, 1.0},
                                {SpaceKind::euclidean, 2, 1.0}};
    const std::uint64_t seeds[] = {61, 89, 101};
    for (int i = 0; i < 3; ++i) {
        const SpaceSpec& space = spaces[i];
        std::mt19937_64 rng(seeds[i]);
        const Point p = random_model_point(space, rng);
        const double z0 = space.kind == SpaceKind::sphere ? 0.6 : 1.2;
        const Curve curve = generate_geodesic_sphere_curve(
            space, p, z0, sphere_loop_for(space, seeds[i] + 1), 4000);
        const FrenetData frenet = frenet_frame_3d(curve);

        const std::size_t n = curve.size();
        std::size_t best_start = 0, best_len = 0, run_start = 0, run_len = 0;
        for (std::size_t k = 0; k < 2 * n; ++k) {
            if (std::abs(frenet.torsions[0][k % n]) > 0.02) {
                if (run_len == 0) run_start = k;
                if (++run_len >= n) break;
            } else {
                run_len = 0;
            }
            if (run_len > best_len) {
                best_len = run_len;
                best_start = run_start;
            }
        }
        REQUIRE(best_len >= 200);

        Curve arc;
        arc.space = space;
        arc.closed = false;
        const double h = curve.step();
        for (std::size_t j = 0; j < best_len; ++j) {
            arc.samples.push_back(curve.samples[(best_start + j) % n]);
            arc.s.push_back(static_cast<double>(j) * h);
        }
        const FrenetData arc_frenet = frenet_frame_3d(arc);
        const std::vector<double> residual = frenet_sphere_residual(arc, arc_frenet);
        double rms = 0.0;
        std::size_t count = 0;
        for (std::size_t k = 4; k + 4 < residual.size(); ++k) {
            rms += residual[k] * residual[k];
            ++count;
        }
        rms = std::sqrt(rms / static_cast<double>(count));
        CHECK(rms < 1e-3);
    }
}

TEST_CASE("vanishing torsion is reported with its sample") {
    // plane circle in E^3 has tau = 0 everywhere
    const int n = 600;
    Curve curve;
    curve.space = SpaceSpec{SpaceKind::euclidean, 2, 1.0};
    curve.closed = true;
    for (int k = 0; k < n; ++k) {
        const double s = 2 * kPi * k / n;
        curve.samples.push_back(make_vec({std::cos(s), std::sin(s), 0.0}));
        curve.s.push_back(s);
    }
    const FrenetData frenet = frenet_frame_3d(curve);
    try {
        frenet_sphere_residual(curve, frenet);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::vanishing_torsion);
        CHECK(e.sample() >= 0);
    }
}

namespace {

Curve doubled_frequency_curve(int n) {
    // alpha(t) = (0.8 cos t, 0.8 sin t, 0.3 cos 2t, 0.3 sin 2t) is unit speed
    // (0.64 + 4 * 0.09 = 1) and lies on the sphere of radius sqrt(0.73).  All
    // of kappa, tau_1, tau_2 are constant, so the residual is analytically 0.
    Curve curve;
    curve.space = SpaceSpec{SpaceKind::euclidean, 3, 1.0};
    curve.closed = true;
    for (int k = 0; k < n; ++k) {
        const double t = 2 * kPi * k / n;
        curve.samples.push_back(make_vec({0.8 * std::cos(t), 0.8 * std::sin(t),
                                          0.3 * std::cos(2 * t), 0.3 * std::sin(2 * t)}));
        curve.s.push_back(t);
    }
    return curve;
}

double e4_residual_rms(const Curve& curve) {
    const FrenetData frenet = euclidean_frenet_general(curve);
    REQUIRE(frenet.torsions.size() == 2);
    const std::vector<double> residual = euclidean_frenet_residual_e4(curve, frenet);
    double rms = 0.0;
    for (double x : residual) rms += x * x;
    return std::sqrt(rms / static_cast<double>(residual.size()));
}

}  // namespace

TEST_CASE("doubled frequency curve in e4 is spherical") {
    // The residual stacks five difference operators (two to reach the frame,
    // one per nested d/ds), so double-precision roundoff grows like 1/h^5 and
    // dominates at high sample counts: the practical floor is ~3e-7 at n=500
    // and ~1e-2 at n=4000.  A moderate density shows the analytic zero; the
    // dense variant must still sit well below the non-spherical 1e-1 scale.
    CHECK(e4_residual_rms(doubled_frequency_curve(400)) < 1e-6);
    CHECK(e4_residual_rms(doubled_frequency_curve(4000)) < 5e-2);

    const ClassificationReport report = classify_curve(doubled_frequency_curve(4000));
    CHECK(report.spherical.is_geodesic_sphere);
    REQUIRE(report.spherical.z0.has_value());
    CHECK(std::abs(*report.spherical.z0 - std::sqrt(0.73)) < 1e-6);
    REQUIRE(report.spherical.center.has_value());
    CHECK(report.spherical.center->coords.norm() < 1e-6);
    CHECK_FALSE(report.totally_geodesic.is_totally_geodesic);
}

TEST_CASE("e4 residual requires a euclidean four dimensional curve") {
    const Curve helix = make_helix(1.0, 1.0, 20.0, 600);
    const FrenetData frenet = frenet_frame_3d(helix);
    CHECK_THROWS_AS(euclidean_frenet_residual_e4(helix, frenet), Error);
}

TEST_CASE("classify rejects defective input") {
    Curve tiny;
    tiny.space = SpaceSpec{SpaceKind::euclidean, 1, 1.0};
    for (int k = 0; k < 4; ++k) {
        tiny.samples.push_back(make_vec({double(k), 0.0}));
        tiny.s.push_back(double(k));
    }
    CHECK_THROWS_AS(classify_curve(tiny), Error);
}
