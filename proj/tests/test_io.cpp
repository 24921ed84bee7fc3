#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "geocurve/io.hpp"

#include <json.hpp>

#include <cmath>
#include <string>

using namespace geocurve;
using nlohmann::json;

namespace {

const double kPi = std::acos(-1.0);

Vec make_vec(std::initializer_list<double> values) {
    Vec v(static_cast<long>(values.size()));
    long i = 0;
    for (double x : values) v[i++] = x;
    return v;
}

Curve circle_curve(int n, bool closed) {
    Curve curve;
    curve.space = SpaceSpec{SpaceKind::sphere, 1, 1.0};
    curve.closed = closed;
    const double span = closed ? 2 * kPi : kPi;
    const int denom = closed ? n : n - 1;
    for (int k = 0; k < n; ++k) {
        const double s = span * k / denom;
        curve.samples.push_back(make_vec({std::cos(s), std::sin(s), 0.0}));
        curve.s.push_back(s);
    }
    return curve;
}

}  // namespace

TEST_CASE("doubles survive the serializer") {
    const double values[] = {0.0,   1.0,          -1.0, kPi, 1.0 / 3.0, 1e-300,
                             1e300, 0.1 + 0.2 - 0.3};
    for (double x : values) {
        const std::string text = io::format_double(x);
        CHECK(std::stod(text) == x);
    }
}

TEST_CASE("curve json round trip is bit exact") {
    const Curve curve = circle_curve(64, true);
    const std::string text = io::curve_to_json(curve);
    const Curve back = io::curve_from_json(text);
    CHECK(back.space.kind == curve.space.kind);
    CHECK(back.space.m == curve.space.m);
    CHECK(back.space.r == curve.space.r);
    CHECK(back.closed == curve.closed);
    REQUIRE(back.size() == curve.size());
    for (std::size_t k = 0; k < curve.size(); ++k) {
        CHECK((back.samples[k] - curve.samples[k]).norm() == 0.0);
        CHECK(back.s[k] == curve.s[k]);
    }
    CHECK(io::curve_to_json(back) == text);
}

TEST_CASE("curve json carries the documented schema") {
    const Curve curve = circle_curve(16, false);
    const json doc = json::parse(io::curve_to_json(curve));
    CHECK(doc.at("space").at("kind") == "sphere");
    CHECK(doc.at("space").at("m") == 1);
    CHECK(doc.at("space").at("radius") == 1.0);
    CHECK(doc.at("closed") == false);
    REQUIRE(doc.at("samples").is_array());
    CHECK(doc.at("samples").size() == 16);
    CHECK(doc.at("samples").at(0).size() == 3);
    CHECK(doc.at("arclength").size() == 16);
}

TEST_CASE("duplicate endpoints close the curve") {
    Curve curve = circle_curve(64, true);
    json doc = json::parse(io::curve_to_json(curve));
    doc["closed"] = false;
    auto first = doc["samples"].at(0);
    doc["samples"].push_back(first);
    doc["arclength"].push_back(2 * kPi);
    const Curve back = io::curve_from_json(doc.dump());
    CHECK(back.closed);
    CHECK(back.size() == 64);
}

TEST_CASE("missing arclength falls back to chord length") {
    json doc = json::parse(io::curve_to_json(circle_curve(32, false)));
    doc.erase("arclength");
    const Curve back = io::curve_from_json(doc.dump());
    REQUIRE(back.size() == 32);
    CHECK(back.s.front() == 0.0);
    for (std::size_t k = 1; k < back.size(); ++k) {
        CHECK(back.s[k] > back.s[k - 1]);
        const double chord = (back.samples[k] - back.samples[k - 1]).norm();
        CHECK(back.s[k] - back.s[k - 1] == doctest::Approx(chord));
    }
}

TEST_CASE("malformed curve documents throw parse errors") {
    const std::string cases[] = {
        "",
        "{",
        "[1,2,3]",
        R"({"closed": false, "samples": [[1,0,0]]})",
        R"({"space": {"kind": "torus", "m": 1, "radius": 1.0}, "closed": false, "samples": []})",
        R"({"space": {"kind": "sphere", "m": 0, "radius": 1.0}, "closed": false, "samples": []})",
        R"({"space": {"kind": "sphere", "m": 1, "radius": -2.0}, "closed": false, "samples": []})",
        R"({"space": {"kind": "sphere", "m": 1.5, "radius": 1.0}, "closed": false, "samples": []})",
        R"({"space": {"kind": "sphere", "m": 1, "radius": 1.0}, "closed": false,
            "samples": [[1,0,0],[0,1,0]]})",
        R"({"space": {"kind": "sphere", "m": 1, "radius": 1.0}, "closed": "no",
            "samples": [[1,0,0],[0,1,0],[ -1,0,0],[0,-1,0],[0,0,1]]})",
        R"({"space": {"kind": "sphere", "m": 1, "radius": 1.0}, "closed": false,
            "samples": [[1,0],[0,1],[-1,0],[0,-1],[0.6,0.8]]})",
        R"({"space": {"kind": "sphere", "m": 1, "radius": 1.0}, "closed": false,
            "samples": [[1,0,0],[0,1,0],[-1,0,0],[0,-1,0],[0,0,2]]})",
        R"({"space": {"kind": "sphere", "m": 1, "radius": 1.0}, "closed": false,
            "samples": [[1,0,0],[0,1,0],[-1,0,0],[0,-1,0],[0,0,1]],
            "arclength": [0, 1, 2]})",
        R"({"space": {"kind": "sphere", "m": 1, "radius": 1.0}, "closed": false,
            "samples": [[1,0,0],[0,1,0],[-1,0,0],[0,-1,0],[0,0,1]],
            "arclength": [0, 1, 0.5, 2, 3]})",
    };
    for (const std::string& text : cases) {
        try {
            io::curve_from_json(text);
            CAPTURE(text);
            CHECK(false);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::parse);
        }
    }
}

TEST_CASE("curve csv layout") {
    const Curve curve = circle_curve(8, false);
    const std::string text = io::curve_to_csv(curve);
    CHECK(text.rfind("s,x0,x1,x2\n", 0) == 0);
    std::size_t rows = 0;
    for (char ch : text)
        if (ch == '\n') ++rows;
    CHECK(rows == 9);
}

TEST_CASE("frames csv carries a manifest header") {
    const Curve curve = circle_curve(128, true);
    const RMData rm = rm_transport(curve);
    const std::string text = io::frames_to_csv(curve, rm, nullptr);
    CHECK(text.rfind("s,t_0", 0) == 0);
    const std::string header = text.substr(0, text.find('\n'));
    CHECK(header.find("n1_0") != std::string::npos);
    CHECK(header.find("kappa_1") != std::string::npos);
    CHECK(header.find("kappa,tau") == std::string::npos);

    const SpaceSpec e3{SpaceKind::euclidean, 2, 1.0};
    Curve helix;
    helix.space = e3;
    const double c = std::sqrt(2.0);
    for (int k = 0; k < 256; ++k) {
        const double s = 12.0 * k / 255;
        helix.samples.push_back(
            make_vec({std::cos(s / c), std::sin(s / c), s / c}));
        helix.s.push_back(s);
    }
    const RMData hrm = rm_transport(helix);
    const FrenetData frenet = frenet_frame_3d(helix);
    const std::string with_frenet = io::frames_to_csv(helix, hrm, &frenet);
    const std::string fr_header = with_frenet.substr(0, with_frenet.find('\n'));
    CHECK(fr_header.find("kappa,tau") != std::string::npos);
    CHECK(fr_header.find(",n_0") != std::string::npos);
    CHECK(fr_header.find(",b_0") != std::string::npos);
}

TEST_CASE("frames json structure") {
    const Curve curve = circle_curve(128, true);
    const RMData rm = rm_transport(curve);
    const json doc = json::parse(io::frames_to_json(curve, rm, nullptr));
    CHECK(doc.at("space").at("kind") == "sphere");
    CHECK(doc.at("closed") == true);
    CHECK(doc.at("s").size() == 128);
    CHECK(doc.at("tangent").size() == 128);
    REQUIRE(doc.at("normals").is_array());
    CHECK(doc.at("normals").size() == 1);
    CHECK(doc.at("normals").at(0).size() == 128);
    CHECK(doc.at("development").size() == 128);
    CHECK(doc.at("frenet").is_null());
}

TEST_CASE("report json uses the fixed field names") {
    const Curve curve = circle_curve(512, true);
    const ClassificationReport report = classify_curve(curve);
    const json doc = json::parse(io::report_to_json(report));
    REQUIRE(doc.contains("spherical"));
    REQUIRE(doc.contains("totally_geodesic"));
    REQUIRE(doc.contains("tolerances"));
    REQUIRE(doc.contains("conflict"));
    const json& sph = doc.at("spherical");
    CHECK(sph.contains("is"));
    CHECK(sph.contains("z0"));
    CHECK(sph.contains("center"));
    CHECK(sph.contains("residual"));
    CHECK(sph.contains("regime"));
    const json& tg = doc.at("totally_geodesic");
    CHECK(tg.contains("is"));
    CHECK(tg.contains("normal"));
    CHECK(tg.contains("residual"));
    CHECK(tg.contains("origin_offset"));
    CHECK(doc.at("tolerances").contains("residual"));
    CHECK(doc.at("tolerances").contains("origin"));

    // a great circle is a geodesic: spherical classification reports the
    // origin-line regime and no radius
    CHECK(sph.at("is") == false);
    CHECK(sph.at("regime") == "origin_line");
    CHECK(sph.at("z0").is_null());
    CHECK(tg.at("is") == true);
}

TEST_CASE("file io round trips") {
    const std::string path = "io_test_scratch.txt";
    io::write_file(path, "line one\nline two\n");
    CHECK(io::read_file(path) == "line one\nline two\n");
    CHECK_THROWS_AS(io::read_file("does_not_exist_anywhere.json"), Error);
    std::remove(path.c_str());
}
