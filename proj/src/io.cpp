#include "geocurve/io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace geocurve::io {

namespace {

using nlohmann::json;

constexpr double kEndpointTol = 1e-9;

void append_vector(std::string& out, const Vec& v) {
    out += '[';
    for (long i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_double(v[i]);
    }
    out += ']';
}

void append_series(std::string& out, const std::vector<double>& v) {
    out += '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_double(v[i]);
    }
    out += ']';
}

void append_vector_list(std::string& out, const std::vector<Vec>& rows,
                        const std::string& indent) {
    out += "[\n";
    for (std::size_t k = 0; k < rows.size(); ++k) {
        out += indent;
        append_vector(out, rows[k]);
        if (k + 1 < rows.size()) out += ',';
        out += '\n';
    }
    out += indent.substr(2);
    out += ']';
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::parse, e.what());
    }
}

const json& require(const json& node, const char* key) {
    auto it = node.find(key);
    if (it == node.end())
        throw Error(ErrorCode::parse, std::string("missing field \"") + key + '"');
    return *it;
}

double require_number(const json& node, const char* key) {
    const json& v = require(node, key);
    if (!v.is_number())
        throw Error(ErrorCode::parse, std::string("field \"") + key + "\" must be a number");
    return v.get<double>();
}

Vec parse_coords(const json& node, long expected, const char* what) {
    if (!node.is_array())
        throw Error(ErrorCode::parse, std::string(what) + " must be an array");
    Vec out(node.size());
    long i = 0;
    for (const json& v : node) {
        if (!v.is_number())
            throw Error(ErrorCode::parse, std::string(what) + " entries must be numbers");
        out[i++] = v.get<double>();
    }
    if (expected >= 0 && out.size() != expected)
        throw Error(ErrorCode::parse, std::string(what) + " has the wrong dimension");
    return out;
}

void emit_frame_row(std::string& out, const std::vector<Vec>& vectors) {
    for (const Vec& v : vectors)
        for (long i = 0; i < v.size(); ++i) {
            out += ',';
            out += format_double(v[i]);
        }
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::parse, "cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string curve_to_json(const Curve& curve) {
    std::string out;
    out += "{\n";
    out += "  \"space\": {\"kind\": \"" + to_string(curve.space.kind) + "\", \"m\": " +
           std::to_string(curve.space.m) + ", \"radius\": " + format_double(curve.space.r) +
           "},\n";
    out += std::string("  \"closed\": ") + (curve.closed ? "true" : "false") + ",\n";
    out += "  \"samples\": [\n";
    for (std::size_t k = 0; k < curve.samples.size(); ++k) {
        out += "    ";
        append_vector(out, curve.samples[k]);
        if (k + 1 < curve.samples.size()) out += ',';
        out += '\n';
    }
    out += "  ],\n";
    out += "  \"arclength\": ";
    append_series(out, curve.s);
    out += "\n}\n";
    return out;
}

Curve curve_from_json(const std::string& text) {
    const json doc = parse_document(text);
    if (!doc.is_object()) throw Error(ErrorCode::parse, "curve document must be an object");

    const json& jspace = require(doc, "space");
    if (!jspace.is_object()) throw Error(ErrorCode::parse, "\"space\" must be an object");
    const json& jkind = require(jspace, "kind");
    if (!jkind.is_string()) throw Error(ErrorCode::parse, "\"kind\" must be a string");

    Curve curve;
    try {
        curve.space.kind = space_kind_from_string(jkind.get<std::string>());
    } catch (const Error&) {
        throw Error(ErrorCode::parse, "unknown space kind: " + jkind.get<std::string>());
    }
    const double m = require_number(jspace, "m");
    if (m < 1 || m != std::floor(m))
        throw Error(ErrorCode::parse, "\"m\" must be a positive integer");
    curve.space.m = static_cast<int>(m);
    curve.space.r = require_number(jspace, "radius");
    try {
        validate_spec(curve.space);
    } catch (const Error& e) {
        throw Error(ErrorCode::parse, e.what());
    }

    const json& jclosed = require(doc, "closed");
    if (!jclosed.is_boolean()) throw Error(ErrorCode::parse, "\"closed\" must be a boolean");
    curve.closed = jclosed.get<bool>();

    const json& jsamples = require(doc, "samples");
    if (!jsamples.is_array() || jsamples.empty())
        throw Error(ErrorCode::parse, "\"samples\" must be a non-empty array");
    const long d = curve.space.embedding_dim();
    for (const json& row : jsamples)
        curve.samples.push_back(parse_coords(row, d, "sample"));

    if (auto it = doc.find("arclength"); it != doc.end()) {
        const Vec s = parse_coords(*it, static_cast<long>(curve.samples.size()), "arclength");
        curve.s.assign(s.data(), s.data() + s.size());
    } else {
        curve.s.resize(curve.samples.size(), 0.0);
        for (std::size_t k = 1; k < curve.samples.size(); ++k)
            curve.s[k] = curve.s[k - 1] + (curve.samples[k] - curve.samples[k - 1]).norm();
    }

    if (curve.samples.size() >= 2 &&
        (curve.samples.front() - curve.samples.back()).norm() <= kEndpointTol) {
        curve.closed = true;
        curve.samples.pop_back();
        curve.s.pop_back();
    }
    try {
        validate_curve(curve);
    } catch (const Error& e) {
        throw Error(ErrorCode::parse, e.what());
    }
    return curve;
}

std::string curve_to_csv(const Curve& curve) {
    std::string out = "s";
    for (long i = 0; i < curve.space.embedding_dim(); ++i)
        out += ",x" + std::to_string(i);
    out += '\n';
    for (std::size_t k = 0; k < curve.samples.size(); ++k) {
        out += format_double(curve.s[k]);
        for (long i = 0; i < curve.samples[k].size(); ++i) {
            out += ',';
            out += format_double(curve.samples[k][i]);
        }
        out += '\n';
    }
    return out;
}

std::string frames_to_csv(const Curve& curve, const RMData& rm, const FrenetData* frenet) {
    const long d = curve.space.embedding_dim();
    const int m = curve.space.m;
    std::string out = "s";
    for (long i = 0; i < d; ++i) out += ",t_" + std::to_string(i);
    for (int j = 1; j <= m; ++j)
        for (long i = 0; i < d; ++i)
            out += ",n" + std::to_string(j) + "_" + std::to_string(i);
    for (int j = 1; j <= m; ++j) out += ",kappa_" + std::to_string(j);
    if (frenet) {
        for (long i = 0; i < d; ++i) out += ",n_" + std::to_string(i);
        for (long i = 0; i < d; ++i) out += ",b_" + std::to_string(i);
        out += ",kappa,tau";
    }
    out += '\n';

    for (std::size_t k = 0; k < curve.size(); ++k) {
        out += format_double(curve.s[k]);
        emit_frame_row(out, {rm.tangent[k]});
        emit_frame_row(out, rm.normals[k]);
        for (int j = 0; j < m; ++j) {
            out += ',';
            out += format_double(rm.development(static_cast<long>(k), j));
        }
        if (frenet) {
            emit_frame_row(out, {frenet->frames[k][1], frenet->frames[k][2]});
            out += ',';
            out += format_double(frenet->curvature[k]);
            out += ',';
            out += format_double(frenet->torsions[0][k]);
        }
        out += '\n';
    }
    return out;
}

std::string frames_to_json(const Curve& curve, const RMData& rm, const FrenetData* frenet) {
    const int m = curve.space.m;
    std::string out;
    out += "{\n";
    out += "  \"space\": {\"kind\": \"" + to_string(curve.space.kind) + "\", \"m\": " +
           std::to_string(m) + ", \"radius\": " + format_double(curve.space.r) + "},\n";
    out += std::string("  \"closed\": ") + (curve.closed ? "true" : "false") + ",\n";
    out += "  \"s\": ";
    append_series(out, curve.s);
    out += ",\n  \"tangent\": ";
    append_vector_list(out, rm.tangent, "    ");
    out += ",\n  \"normals\": [\n";
    for (int j = 0; j < m; ++j) {
        std::vector<Vec> column(curve.size());
        for (std::size_t k = 0; k < curve.size(); ++k) column[k] = rm.normals[k][j];
        out += "    ";
        append_vector_list(out, column, "      ");
        if (j + 1 < m) out += ',';
        out += '\n';
    }
    out += "  ],\n";
    out += "  \"development\": [\n";
    for (std::size_t k = 0; k < curve.size(); ++k) {
        out += "    ";
        append_vector(out, rm.development.row(static_cast<long>(k)).transpose());
        if (k + 1 < curve.size()) out += ',';
        out += '\n';
    }
    out += "  ],\n";
    if (frenet) {
        std::vector<Vec> normal(curve.size()), binormal(curve.size());
        for (std::size_t k = 0; k < curve.size(); ++k) {
            normal[k] = frenet->frames[k][1];
            binormal[k] = frenet->frames[k][2];
        }
        out += "  \"frenet\": {\n";
        out += "    \"normal\": ";
        append_vector_list(out, normal, "      ");
        out += ",\n    \"binormal\": ";
        append_vector_list(out, binormal, "      ");
        out += ",\n    \"curvature\": ";
        append_series(out, frenet->curvature);
        out += ",\n    \"torsion\": ";
        append_series(out, frenet->torsions[0]);
        out += "\n  }\n";
    } else {
        out += "  \"frenet\": null\n";
    }
    out += "}\n";
    return out;
}

std::string report_to_json(const ClassificationReport& report) {
    const SphericalVerdict& sph = report.spherical;
    std::string out;
    out += "{\n";
    out += std::string("  \"spherical\": {\"is\": ") +
           (sph.is_geodesic_sphere ? "true" : "false");
    out += ", \"z0\": " + (sph.z0 ? format_double(*sph.z0) : std::string("null"));
    out += ", \"center\": ";
    if (sph.center)
        append_vector(out, sph.center->coords);
    else
        out += "null";
    out += ", \"residual\": " + format_double(sph.fit.rms_residual);
    out += ", \"regime\": \"" + to_string(sph.regime) + "\"},\n";

    const TotallyGeodesicVerdict& tg = report.totally_geodesic;
    out += std::string("  \"totally_geodesic\": {\"is\": ") +
           (tg.is_totally_geodesic ? "true" : "false");
    out += ", \"normal\": ";
    append_vector(out, tg.section.normal);
    out += ", \"residual\": " + format_double(tg.section.rms_residual);
    out += ", \"origin_offset\": " + format_double(tg.origin_offset) + "},\n";

    out += "  \"tolerances\": {\"residual\": " + format_double(report.tolerances.tol_rel) +
           ", \"origin\": " + format_double(report.tolerances.tol_origin) + "},\n";
    out += std::string("  \"conflict\": ") + (report.conflict ? "true" : "false") + "\n";
    out += "}\n";
    return out;
}

}  // namespace geocurve::io
