#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "shapespline/oracle.hpp"
#include "shapespline/verify.hpp"

namespace shapespline::cli {

using nlohmann::json;

namespace {

Vec3 parse_vec(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 3) {
        throw InputError(what + " must be an array of three numbers");
    }
    for (const auto& c : j) {
        if (!c.is_number()) {
            throw InputError(what + " must be an array of three numbers");
        }
    }
    Vec3 v{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
    if (!is_finite(v)) {
        throw InputError(what + " has a non-finite component");
    }
    return v;
}

std::vector<Vec3> parse_vec_list(const json& j, const std::string& what) {
    if (!j.is_array()) {
        throw InputError(what + " must be an array");
    }
    std::vector<Vec3> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(parse_vec(j[i], what + "[" + std::to_string(i) + "]"));
    }
    return out;
}

json vec_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

json verdict_json(const CriterionVerdict& v) {
    json d = json::object();
    for (const auto& [k, x] : v.diagnostics) {
        d[k] = x;
    }
    return {{"criterion", to_string(v.criterion)},
            {"applicable", v.applicable},
            {"passed", v.passed ? json(*v.passed) : json(nullptr)},
            {"diagnostics", d}};
}

void emit(const std::string& text, const Options& opts, std::ostream& out) {
    if (opts.out) {
        std::ofstream f(*opts.out, std::ios::binary);
        if (!f) {
            throw InputError("cannot open " + *opts.out + " for writing");
        }
        f << text;
        if (!f) {
            throw InputError("failed writing " + *opts.out);
        }
    } else {
        out << text;
    }
}

template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const json::exception& e) {
        err << "error: invalid input: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
    }
    return InputFailure;
}

} // namespace

InputDocument parse_input(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw InputError("input must be a JSON object");
    }
    static const std::set<std::string> known{"version", "points", "tangents", "knots", "config"};
    for (const auto& [k, _] : j.items()) {
        if (!known.contains(k)) {
            throw InputError("unknown key '" + k + "'");
        }
    }
    if (!j.contains("version") || !j["version"].is_number_integer() || j["version"].get<int>() != 1) {
        throw InputError("input must declare \"version\": 1");
    }
    if (!j.contains("points")) {
        throw InputError("input needs a \"points\" array");
    }
    InputDocument doc;
    doc.points = parse_vec_list(j["points"], "points");
    if (doc.points.size() < 2) {
        throw InputError("at least two points are required");
    }
    if (j.contains("tangents")) {
        doc.tangents = parse_vec_list(j["tangents"], "tangents");
        if (doc.tangents->size() != doc.points.size()) {
            throw InputError("tangents must have one entry per point");
        }
    }
    if (j.contains("knots")) {
        const auto& k = j["knots"];
        if (!k.is_array() || k.size() != doc.points.size()) {
            throw InputError("knots must be an array with one entry per point");
        }
        std::vector<double> knots;
        for (const auto& x : k) {
            if (!x.is_number()) {
                throw InputError("knots must be numbers");
            }
            knots.push_back(x.get<double>());
        }
        doc.knots = std::move(knots);
    }
    if (j.contains("config")) {
        static const std::set<std::string> keys{"eps0",    "eps1",    "eps_zero",   "tension",
                                                "parameterization", "samples", "directions", "eta_fraction"};
        if (!j["config"].is_object()) {
            throw InputError("config must be an object");
        }
        for (const auto& [k, v] : j["config"].items()) {
            if (!keys.contains(k)) {
                throw InputError("unknown config key '" + k + "'");
            }
            if (k == "parameterization" ? !v.is_string() : !v.is_number()) {
                throw InputError("config key '" + k + "' has the wrong type");
            }
        }
        doc.config = j["config"];
    }
    return doc;
}

InputDocument read_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) {
            throw InputError("cannot read " + path);
        }
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    return parse_input(text);
}

namespace {

Parameterization parse_param(const std::string& s) {
    if (s == "uniform") {
        return Parameterization::Uniform;
    }
    if (s == "chord") {
        return Parameterization::ChordLength;
    }
    throw InputError("parameterization must be 'uniform' or 'chord'");
}

} // namespace

SplineConfig resolve_config(const InputDocument& doc, const Options& opts) {
    SplineConfig cfg;
    const json& c = doc.config;
    auto num = [&](const char* key, double& target, const std::optional<double>& flag) {
        if (c.contains(key)) {
            target = c[key].get<double>();
        }
        if (flag) {
            target = *flag;
        }
    };
    num("eps0", cfg.tolerances.eps0, opts.eps0);
    num("eps1", cfg.tolerances.eps1, opts.eps1);
    num("eps_zero", cfg.tolerances.eps_zero, opts.eps_zero);
    num("eta_fraction", cfg.tolerances.eta_fraction, opts.eta);
    num("tension", cfg.tension, opts.tension);
    if (c.contains("samples")) {
        cfg.samples = c["samples"].get<int>();
    }
    if (opts.samples) {
        cfg.samples = *opts.samples;
    }
    if (c.contains("directions")) {
        cfg.directions = c["directions"].get<int>();
    }
    if (opts.directions) {
        cfg.directions = *opts.directions;
    }
    if (c.contains("parameterization")) {
        cfg.parameterization = parse_param(c["parameterization"].get<std::string>());
    }
    if (opts.param) {
        cfg.parameterization = parse_param(*opts.param);
    }
    if (opts.tangents) {
        if (*opts.tangents == "catmull-rom") {
            cfg.tangent_mode = TangentMode::CatmullRom;
        } else if (*opts.tangents == "provided") {
            cfg.tangent_mode = TangentMode::Provided;
        } else {
            throw InputError("tangents must be 'catmull-rom' or 'provided'");
        }
    } else {
        cfg.tangent_mode = doc.tangents ? TangentMode::Provided : TangentMode::CatmullRom;
    }
    if (cfg.tangent_mode == TangentMode::Provided && !doc.tangents) {
        throw InputError("provided tangent mode needs a \"tangents\" array in the input");
    }
    cfg.validate();
    return cfg;
}

Spline build(const InputDocument& doc, const SplineConfig& cfg) {
    DataPolygon poly(doc.points, cfg.tolerances.eps_zero);
    return build_spline(poly, cfg, doc.tangents, doc.knots);
}

json report_json(const SplineReport& rep, const SplineConfig& cfg) {
    json j;
    j["version"] = 1;
    j["config"] = {{"eps0", cfg.tolerances.eps0},
                   {"eps1", cfg.tolerances.eps1},
                   {"eps_zero", cfg.tolerances.eps_zero},
                   {"eta_fraction", cfg.tolerances.eta_fraction},
                   {"tension", cfg.tension},
                   {"parameterization", to_string(cfg.parameterization)},
                   {"tangents", to_string(cfg.tangent_mode)},
                   {"samples", cfg.samples},
                   {"directions", cfg.directions}};
    j["vertices"] = json::array();
    for (const auto& v : rep.vertices) {
        j["vertices"].push_back({{"index", v.index},
                                 {"flags", v.flags.names()},
                                 {"N", v.N ? vec_json(*v.N) : json(nullptr)},
                                 {"delta", v.delta ? json(*v.delta) : json(nullptr)}});
    }
    j["segments"] = json::array();
    for (const auto& s : rep.segments) {
        json verdicts = json::array();
        for (const auto& v : s.verdicts) {
            verdicts.push_back(verdict_json(v));
        }
        j["segments"].push_back({{"index", s.index}, {"flags", s.flags.names()}, {"verdicts", verdicts}});
    }
    j["joints"] = json::array();
    for (const auto& jr : rep.joints) {
        j["joints"].push_back({{"index", jr.index},
                               {"adjacency", verdict_json(jr.adjacency)},
                               {"torsion_compat", verdict_json(jr.torsion_compat)},
                               {"collinearity_extended", verdict_json(jr.collinearity_extended)}});
    }
    j["summary"] = {{"segments", rep.segments.size()},
                    {"joints", rep.joints.size()},
                    {"applicable", rep.summary.applicable},
                    {"passed", rep.summary.passed},
                    {"failed", rep.summary.failed},
                    {"all_passed", rep.summary.all_passed()}};
    return j;
}

json measures_json(const DataPolygon& poly, const Tolerances& tol) {
    json j;
    j["version"] = 1;
    j["points"] = json::array();
    for (const auto& p : poly.points()) {
        j["points"].push_back(vec_json(p));
    }
    j["chords"] = json::array();
    for (int k = 1; k <= poly.segments(); ++k) {
        j["chords"].push_back({{"index", k}, {"L", vec_json(poly.chord(k))}});
    }
    j["binormals"] = json::array();
    j["vertices"] = json::array();
    for (int v = 1; v < poly.segments(); ++v) {
        j["binormals"].push_back({{"index", v}, {"N", vec_json(poly.binormal(v))}});
        j["vertices"].push_back({{"index", v}, {"flags", classify_vertex(poly, v, tol.eps_zero).names()}});
    }
    j["torsions"] = json::array();
    for (int k = 2; k < poly.segments(); ++k) {
        j["torsions"].push_back({{"index", k}, {"delta", poly.torsion(k)}});
    }
    j["segments"] = json::array();
    for (int k = 1; k <= poly.segments(); ++k) {
        json seg = {{"index", k}, {"flags", classify_segment(poly, k, tol.eps_zero).names()}};
        if (poly.has_binormal(k - 1) && poly.has_binormal(k)) {
            seg["N_prev_dot_N_cur"] = dot(poly.binormal(k - 1), poly.binormal(k));
        }
        j["segments"].push_back(seg);
    }
    return j;
}

std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int cmd_check(const std::string& input, const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto doc = read_input(input);
        const auto cfg = resolve_config(doc, opts);
        const auto spline = build(doc, cfg);
        const auto rep = analyze(spline, cfg);
        json j = report_json(rep, cfg);
        bool ok = rep.summary.all_passed();
        if (opts.verify) {
            const auto seed = seed_from_env();
            const auto ver = verify_spline(spline, rep, cfg, seed);
            json dis = json::array();
            for (const auto& d : ver.disagreements) {
                dis.push_back({{"scope", d.scope}, {"index", d.index}, {"check", d.check}, {"detail", d.detail}});
            }
            j["verification"] = {{"seed", seed}, {"checks", ver.checks}, {"disagreements", dis}};
            ok = ok && ver.ok();
        }
        emit(j.dump(2) + "\n", opts, out);
        return ok ? Pass : CriteriaFail;
    });
}

int cmd_measures(const std::string& input, const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto doc = read_input(input);
        const auto cfg = resolve_config(doc, opts);
        const DataPolygon poly(doc.points, cfg.tolerances.eps_zero);
        emit(measures_json(poly, cfg.tolerances).dump(2) + "\n", opts, out);
        return Pass;
    });
}

int cmd_sample(const std::string& input, const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto doc = read_input(input);
        const auto cfg = resolve_config(doc, opts);
        const auto spline = build(doc, cfg);
        const auto rows = sample_spline(spline, opts.per_segment);
        std::string csv = "segment_index,t,x,y,z,wx,wy,wz,tau_num\n";
        for (const auto& r : rows) {
            csv += std::to_string(r.segment);
            for (double v : {r.t, r.position.x, r.position.y, r.position.z, r.omega.x, r.omega.y, r.omega.z,
                             r.tau_num}) {
                csv += ',';
                csv += format17(v);
            }
            csv += '\n';
        }
        emit(csv, opts, out);
        return Pass;
    });
}

int cmd_inflection(const std::string& input, const Options& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto doc = read_input(input);
        const auto cfg = resolve_config(doc, opts);
        const auto spline = build(doc, cfg);
        const auto& poly = spline.polygon();
        json counts = json::array();
        for (const auto& seg : spline.segments()) {
            const oracle::PowerCubic pc(seg.bezier(), seg.h());
            counts.push_back(oracle::projected_inflection_count(pc, cfg.directions, cfg.samples,
                                                               cfg.tolerances.eps_zero));
        }
        json j = {{"arc_count", spatial_arc_inflection_count(poly, cfg.directions, cfg.tolerances.eps_zero)},
                  {"per_segment_curve_counts", counts},
                  {"directions", cfg.directions}};
        emit(j.dump(2) + "\n", opts, out);
        return Pass;
    });
}

} // namespace shapespline::cli
