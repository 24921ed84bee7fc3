#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

using nlohmann::json;

namespace {

std::string g_binary;
const char* kDir = "cli_scratch";

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

/// Runs the CLI under test with the given arguments, capturing both streams.
RunResult run(const std::string& args, const std::string& env = "") {
    const std::filesystem::path out = std::filesystem::path(kDir) / "stdout.txt";
    const std::filesystem::path err = std::filesystem::path(kDir) / "stderr.txt";
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += "\"" + g_binary + "\" " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult result;
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out);
    result.err = slurp(err);
    return result;
}

std::string path_in_dir(const std::string& name) {
    return (std::filesystem::path(kDir) / name).string();
}

}  // namespace

TEST_CASE("generate and classify round trip") {
    const std::string curve = path_in_dir("sphere_curve.json");
    const RunResult gen = run(
        "generate --space sphere --m 2 --radius 1 --kind geodesic-sphere --z0 0.6 "
        "--n 1200 --seed 7 --out " + curve);
    REQUIRE(gen.code == 0);
    const json truth = json::parse(gen.out);
    CHECK(truth.at("kind") == "geodesic-sphere");
    CHECK(truth.at("z0") == 0.6);
    CHECK(truth.at("samples") == 1200);

    const RunResult cls = run("classify --in " + curve);
    REQUIRE(cls.code == 0);
    const json report = json::parse(cls.out);
    CHECK(report.at("spherical").at("is") == true);
    CHECK(std::abs(report.at("spherical").at("z0").get<double>() - 0.6) < 1e-4);
    CHECK(report.at("totally_geodesic").at("is") == false);
    CHECK(report.at("conflict") == false);

    const json center = report.at("spherical").at("center");
    const json expected = truth.at("center");
    double gap = 0.0;
    for (std::size_t i = 0; i < center.size(); ++i) {
        const double d = center.at(i).get<double>() - expected.at(i).get<double>();
        gap += d * d;
    }
    CHECK(std::sqrt(gap) < 1e-4);
}

TEST_CASE("generation is deterministic in the seed") {
    const std::string a = path_in_dir("det_a.json");
    const std::string b = path_in_dir("det_b.json");
    const std::string c = path_in_dir("det_c.json");
    const RunResult ra = run("generate --space hyperbolic --m 1 --seed 11 --n 600 --out " + a);
    const RunResult rb = run("generate --space hyperbolic --m 1 --seed 11 --n 600 --out " + b);
    const RunResult rc = run("generate --space hyperbolic --m 1 --seed 12 --n 600 --out " + c);
    REQUIRE(ra.code == 0);
    REQUIRE(rb.code == 0);
    REQUIRE(rc.code == 0);
    CHECK(ra.out == rb.out);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a) != slurp(c));
}

TEST_CASE("the seed environment variable is honored") {
    const std::string a = path_in_dir("env_a.json");
    const std::string b = path_in_dir("env_b.json");
    const RunResult ra = run("generate --space sphere --m 1 --seed 19 --n 600 --out " + a);
    const RunResult rb =
        run("generate --space sphere --m 1 --n 600 --out " + b, "GEOCURVE_SEED=19");
    REQUIRE(ra.code == 0);
    REQUIRE(rb.code == 0);
    CHECK(slurp(a) == slurp(b));
}

TEST_CASE("malformed input exits with code 2") {
    const std::string bad = path_in_dir("bad.json");
    spit(bad, "{\"space\": ");
    CHECK(run("classify --in " + bad).code == 2);
    CHECK(run("frames --in " + bad).code == 2);
    CHECK(run("classify --in " + path_in_dir("missing.json")).code == 2);

    const std::string wrong = path_in_dir("wrong.json");
    spit(wrong, R"({"space": {"kind": "sphere", "m": 1, "radius": 1.0}, "closed": false,
                    "samples": [[1,0,0],[0,2,0],[-1,0,0],[0,-1,0],[0,0,1]]})");
    CHECK(run("classify --in " + wrong).code == 2);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("polish").code == 2);
    CHECK(run("generate").code == 2);
    CHECK(run("generate --space torus --out " + path_in_dir("x.json")).code == 2);
    CHECK(run("classify").code == 2);
    CHECK(run("--help").code == 0);
}

TEST_CASE("frames fall back to rm data on geodesics") {
    const std::string curve = path_in_dir("geodesic.json");
    REQUIRE(run("generate --space sphere --m 2 --kind geodesic --seed 3 --n 900 --out " +
                curve).code == 0);
    const RunResult frames = run("frames --in " + curve);
    CHECK(frames.code == 0);
    CHECK(frames.err.find("warning") != std::string::npos);
    const json doc = json::parse(frames.out);
    CHECK(doc.at("frenet").is_null());
    CHECK(doc.at("normals").size() == 2);

    const RunResult csv = run("frames --format csv --in " + curve);
    CHECK(csv.code == 0);
    const std::string header = csv.out.substr(0, csv.out.find('\n'));
    CHECK(header.find("kappa,tau") == std::string::npos);
    CHECK(header.find("kappa_2") != std::string::npos);
}

TEST_CASE("unresolvable sampling exits with code 3") {
    const double pi = std::acos(-1.0);
    std::string doc = R"({"space": {"kind": "euclidean", "m": 1, "radius": 1.0},
  "closed": true, "samples": [)";
    std::string arcs = "[";
    for (int k = 0; k < 8; ++k) {
        const double theta = 2 * pi * k / 8;
        if (k) {
            doc += ", ";
            arcs += ", ";
        }
        char buf[80];
        std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", std::cos(theta), std::sin(theta));
        doc += buf;
        std::snprintf(buf, sizeof buf, "%.17g", 2 * pi * k / 8);
        arcs += buf;
    }
    doc += "], \"arclength\": " + arcs + "]}";
    const std::string path = path_in_dir("octagon.json");
    spit(path, doc);
    CHECK(run("classify --in " + path).code == 3);
}

TEST_CASE("verify output is byte deterministic") {
    const RunResult a = run("verify --seed 7 --n 400");
    const RunResult b = run("verify --seed 7 --n 400");
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
    std::istringstream lines(a.out);
    std::string line;
    int checks = 0;
    bool saw_summary = false;
    while (std::getline(lines, line)) {
        if (line == "all checks passed" || line == "some checks FAILED") {
            saw_summary = true;
            break;
        }
        CHECK((line.rfind("PASS", 0) == 0 || line.rfind("FAIL", 0) == 0));
        ++checks;
    }
    CHECK(checks == 8);
    CHECK(saw_summary);
}

TEST_CASE("unattainable tolerances fail verification") {
    const RunResult r = run("verify --seed 7 --n 400 --tol-residual 1e-12");
    CHECK(r.code == 1);
    CHECK(r.out.find("some checks FAILED") != std::string::npos);
}

int main(int argc, char** argv) {
    if (argc > 1 && argv[1][0] != '-') {
        g_binary = argv[1];
        --argc;
        for (int i = 1; i < argc; ++i) argv[i] = argv[i + 1];
    }
    if (g_binary.empty()) {
        std::fprintf(stderr, "usage: test_cli <path-to-geocurve-binary> [doctest args]\n");
        return 1;
    }
    std::filesystem::create_directories(kDir);
    doctest::Context context(argc, argv);
    const int rc = context.run();
    std::error_code ec;
    std::filesystem::remove_all(kDir, ec);
    return rc;
}
