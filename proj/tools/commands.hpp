#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "shapespline/spline.hpp"

namespace shapespline::cli {

enum ExitCode : int { Pass = 0, CriteriaFail = 1, InputFailure = 2 };

/// Flags given on the command line; unset values fall back to the input
/// document's config block, then to library defaults.
struct Options {
    std::optional<double> eps0;
    std::optional<double> eps1;
    std::optional<double> eps_zero;
    std::optional<double> tension;
    std::optional<double> eta;
    std::optional<std::string> param;
    std::optional<std::string> tangents;
    std::optional<int> samples;
    std::optional<int> directions;
    bool verify{false};
    std::optional<std::string> out;
    int per_segment{32};
};

struct InputDocument {
    std::vector<Vec3> points;
    std::optional<std::vector<Vec3>> tangents;
    std::optional<std::vector<double>> knots;
    nlohmann::json config = nlohmann::json::object();
};

/// Parses and schema-checks an input document; throws InputError.
[[nodiscard]] InputDocument parse_input(const std::string& text);
[[nodiscard]] InputDocument read_input(const std::string& path);

/// Effective configuration: defaults, then the document, then flags.
[[nodiscard]] SplineConfig resolve_config(const InputDocument& doc, const Options& opts);

[[nodiscard]] Spline build(const InputDocument& doc, const SplineConfig& cfg);

[[nodiscard]] nlohmann::json report_json(const SplineReport& rep, const SplineConfig& cfg);
[[nodiscard]] nlohmann::json measures_json(const DataPolygon& poly, const Tolerances& tol);

int cmd_check(const std::string& input, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_measures(const std::string& input, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_sample(const std::string& input, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_inflection(const std::string& input, const Options& opts, std::ostream& out, std::ostream& err);

/// %.17g formatting used for CSV output.
[[nodiscard]] std::string format17(double v);

} // namespace shapespline::cli
