#include "geocurve/classification.hpp"
#include "geocurve/curve.hpp"
#include "geocurve/framing.hpp"
#include "geocurve/io.hpp"
#include "geocurve/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>

namespace {

using namespace geocurve;

struct Options {
    std::string space = "sphere";
    int m = 2;
    double radius = 1.0;
    int n = 2000;
    std::uint64_t seed = 7;
    double z0 = 0.0;
    bool z0_set = false;
    std::string kind = "geodesic-sphere";
    double tol_residual = 1e-5;
    double tol_origin = 1e-6;
    std::string format = "json";
    std::string in_path;
    std::string out_path;
};

std::string vec_json(const Vec& v) {
    std::string out = "[";
    for (long i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += io::format_double(v[i]);
    }
    return out + "]";
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out_path.empty())
        std::fputs(text.c_str(), stdout);
    else
        io::write_file(opt.out_path, text);
}

int cmd_generate(const Options& opt) {
    SpaceSpec space;
    space.kind = space_kind_from_string(opt.space);
    space.m = opt.m;
    space.r = opt.radius;
    validate_spec(space);

    std::mt19937_64 rng(opt.seed);
    Curve curve;
    std::string truth;
    if (opt.kind == "geodesic-sphere") {
        const Point p = random_model_point(space, rng);
        const double z0 = opt.z0_set ? opt.z0 : 0.5 * space.r;
        curve = generate_geodesic_sphere_curve(space, p, z0, sphere_loop_for(space, rng()), opt.n);
        truth = "{\"kind\": \"geodesic-sphere\", \"center\": " + vec_json(p.coords) +
                ", \"z0\": " + io::format_double(z0);
    } else if (opt.kind == "totally-geodesic") {
        const Vec normal = random_section_normal(space, rng);
        curve = generate_totally_geodesic_curve(space, normal, section_loop_for(space, rng()),
                                                opt.n);
        truth = "{\"kind\": \"totally-geodesic\", \"normal\": " + vec_json(normal.normalized());
    } else if (opt.kind == "geodesic") {
        const Point p = random_model_point(space, rng);
        const Vec v = random_unit_tangent(space, p, rng);
        curve = generate_geodesic(space, p, v, opt.n);
        truth = "{\"kind\": \"geodesic\", \"point\": " + vec_json(p.coords) +
                ", \"direction\": " + vec_json(v);
    } else {
        curve = generate_random_curve(space, ambient_loop_for(space, rng()), opt.n);
        truth = "{\"kind\": \"random\"";
    }
    truth += ", \"length\": " + io::format_double(curve.total_length()) +
             ", \"samples\": " + std::to_string(int(curve.size())) + "}\n";

    io::write_file(opt.out_path, opt.format == "csv" ? io::curve_to_csv(curve)
                                                     : io::curve_to_json(curve));
    std::fputs(truth.c_str(), stdout);
    return 0;
}

Curve load_curve(const Options& opt) {
    Curve curve = io::curve_from_json(io::read_file(opt.in_path));
    if (!curve.uniform()) curve = arc_length_resample(curve, opt.n);
    return curve;
}

int cmd_frames(const Options& opt) {
    const Curve curve = load_curve(opt);
    const RMData rm = rm_transport(curve);
    std::optional<FrenetData> frenet;
    if (curve.space.manifold_dim() == 3) {
        try {
            frenet = frenet_frame_3d(curve);
        } catch (const Error& e) {
            std::cerr << "warning: Frenet frame unavailable (" << e.what()
                      << "); writing RM data only\n";
        }
    }
    const FrenetData* fr = frenet ? &*frenet : nullptr;
    emit(opt, opt.format == "csv" ? io::frames_to_csv(curve, rm, fr)
                                  : io::frames_to_json(curve, rm, fr));
    return 0;
}

int cmd_classify(const Options& opt) {
    const Curve curve = load_curve(opt);
    ClassifyOptions copt;
    copt.tol_rel = opt.tol_residual;
    copt.tol_origin = opt.tol_origin;
    const ClassificationReport report = classify_curve(curve, copt);
    emit(opt, io::report_to_json(report));
    return 0;
}

int cmd_verify(const Options& opt) {
    verify::VerifyOptions vopt;
    vopt.seed = opt.seed;
    vopt.tol_residual = opt.tol_residual;
    vopt.tol_origin = opt.tol_origin;
    vopt.n = opt.n;
    const std::vector<verify::CheckResult> results = verify::run_all_checks(vopt);
    bool all = true;
    double total = 0.0;
    for (const verify::CheckResult& r : results) {
        all = all && r.pass;
        total += r.seconds;
        std::printf("%s  %s: %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.details.c_str());
        std::fprintf(stderr, "%-52s %.2fs\n", r.name.c_str(), r.seconds);
    }
    std::printf("%s\n", all ? "all checks passed" : "some checks FAILED");
    std::fprintf(stderr, "total %.2fs\n", total);
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    CLI::App app{"Rotation-minimizing and Frenet framing of curves in spheres, hyperbolic "
                 "spaces, and euclidean spaces, with geodesic-sphere and totally-geodesic "
                 "classification"};
    app.require_subcommand(1);

    const std::vector<std::string> kinds = {"geodesic-sphere", "totally-geodesic", "geodesic",
                                            "random"};

    CLI::App* generate = app.add_subcommand("generate", "generate a sample curve file");
    generate->add_option("--space", opt.space, "model: euclidean|sphere|hyperbolic")
        ->check(CLI::IsMember({"euclidean", "sphere", "hyperbolic"}));
    generate->add_option("--m", opt.m, "hypersurface dimension m (manifold dimension m+1)")
        ->check(CLI::PositiveNumber);
    generate->add_option("--radius", opt.radius, "model radius r")->check(CLI::PositiveNumber);
    generate->add_option("--n", opt.n, "sample count")->check(CLI::Range(5, 10000000));
    generate->add_option("--seed", opt.seed, "random seed")->envname("GEOCURVE_SEED");
    generate->add_option("--z0", opt.z0, "geodesic-sphere radius (default r/2)")
        ->check(CLI::PositiveNumber);
    generate->add_option("--kind", opt.kind, "curve family")->check(CLI::IsMember(kinds));
    generate->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    generate->add_option("--out", opt.out_path, "output path")->required();

    CLI::App* frames = app.add_subcommand("frames", "RM (and 3D Frenet) frames of a curve");
    frames->add_option("--in", opt.in_path, "curve JSON path")->required();
    frames->add_option("--out", opt.out_path, "output path (stdout when omitted)");
    frames->add_option("--n", opt.n, "resample count for non-uniform input")
        ->check(CLI::Range(5, 10000000));
    frames->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* classify = app.add_subcommand("classify", "classification report for a curve");
    classify->add_option("--in", opt.in_path, "curve JSON path")->required();
    classify->add_option("--out", opt.out_path, "output path (stdout when omitted)");
    classify->add_option("--n", opt.n, "resample count for non-uniform input")
        ->check(CLI::Range(5, 10000000));
    classify->add_option("--tol-residual", opt.tol_residual, "relative residual tolerance")
        ->check(CLI::PositiveNumber);
    classify->add_option("--tol-origin", opt.tol_origin, "through-origin tolerance")
        ->check(CLI::PositiveNumber);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the acceptance checks");
    verify_cmd->add_option("--seed", opt.seed, "random seed")->envname("GEOCURVE_SEED");
    verify_cmd->add_option("--n", opt.n, "sample count per curve")
        ->check(CLI::Range(64, 10000000));
    verify_cmd->add_option("--tol-residual", opt.tol_residual, "relative residual tolerance")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--tol-origin", opt.tol_origin, "through-origin tolerance")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (generate->parsed()) {
            opt.z0_set = generate->count("--z0") > 0;
            return cmd_generate(opt);
        }
        if (frames->parsed()) return cmd_frames(opt);
        if (classify->parsed()) return cmd_classify(opt);
        return cmd_verify(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.code() == ErrorCode::parse) return 2;
        if (e.code() == ErrorCode::numerical_instability) return 3;
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
