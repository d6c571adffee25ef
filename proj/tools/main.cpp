#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace shapespline::cli;

    CLI::App app{"Shape-preservation checks for cubic interpolating splines"};
    app.require_subcommand(1);

    Options opts;
    double eps0 = 0.05;
    double eps1 = 0.05;
    double eps_zero = 1e-9;
    double tension = 0.5;
    double eta = 1.0;
    int samples = 512;
    int directions = 2048;
    std::string param = "chord";
    std::string tangents;
    std::string out;
    std::string input;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", input, "Input JSON document ('-' for stdin)")->required();
        sub->add_option("--eps-collinear", eps0, "Collinearity sine bound")->capture_default_str();
        sub->add_option("--eps-coplanar", eps1, "Coplanarity sine bound")->capture_default_str();
        sub->add_option("--eps-zero", eps_zero, "Relative zero threshold")->capture_default_str();
        sub->add_option("--tension", tension, "Catmull-Rom tangent scale")->capture_default_str();
        sub->add_option("--param", param, "Knot spacing")
            ->check(CLI::IsMember({"uniform", "chord"}))
            ->capture_default_str();
        sub->add_option("--samples", samples, "Samples per segment for sampled checks")->capture_default_str();
        sub->add_option("--directions", directions, "Sphere directions for inflection counts")
            ->capture_default_str();
        sub->add_option("--eta", eta, "Window fraction around collinear vertices")->capture_default_str();
        sub->add_option("--tangents", tangents, "Tangent source (default: provided if the input has tangents)")
            ->check(CLI::IsMember({"catmull-rom", "provided"}));
        sub->add_flag("--verify", opts.verify, "Cross-check closed forms against the sampling oracle");
        sub->add_option("--out", out, "Write output to this path instead of stdout");
    };

    auto* check = app.add_subcommand("check", "Build the spline and report every criterion");
    auto* measures = app.add_subcommand("measures", "Chords, binormals, discrete torsions and data flags");
    auto* sample = app.add_subcommand("sample", "Export samples of position, curvature vector and torsion");
    auto* inflection = app.add_subcommand("inflection", "Inflection counts of the data polygon and segments");
    for (auto* sub : {check, measures, sample, inflection}) {
        add_common(sub);
    }
    sample->add_option("--per-segment", opts.per_segment, "Samples per segment")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : InputFailure;
    }

    auto given = [](CLI::App* sub, const char* name) { return sub->count(name) > 0; };
    CLI::App* sub = app.get_subcommands().front();
    if (given(sub, "--eps-collinear")) opts.eps0 = eps0;
    if (given(sub, "--eps-coplanar")) opts.eps1 = eps1;
    if (given(sub, "--eps-zero")) opts.eps_zero = eps_zero;
    if (given(sub, "--tension")) opts.tension = tension;
    if (given(sub, "--eta")) opts.eta = eta;
    if (given(sub, "--samples")) opts.samples = samples;
    if (given(sub, "--directions")) opts.directions = directions;
    if (given(sub, "--param")) opts.param = param;
    if (given(sub, "--tangents")) opts.tangents = tangents;
    if (given(sub, "--out")) opts.out = out;

    if (sub == check) return cmd_check(input, opts, std::cout, std::cerr);
    if (sub == measures) return cmd_measures(input, opts, std::cout, std::cerr);
    if (sub == sample) return cmd_sample(input, opts, std::cout, std::cerr);
    return cmd_inflection(input, opts, std::cout, std::cerr);
}
