// Command-line front end: analyze a plane curve, check the complete
// intersection identity, or run a corpus of curve files.

#include <iostream>

#include "CLI11.hpp"
#include "logchern/cli.hpp"

namespace {

constexpr const char* kVersion = "logchern 0.1.0";

}  // namespace

int main(int argc, char** argv) {
    using namespace logchern::cli;

    CLI::App app{"Exact verifier for c_SM(1_U) = c(Der(-log D)) cap [X] on plane curves"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    RunConfig analyze;
    bool analyze_json = false;
    auto* a = app.add_subcommand("analyze", "Verify the formula for one curve F(x,y,z) = 0");
    auto* poly_opt = a->add_option("--poly", analyze.poly, "Homogeneous polynomial in x, y, z");
    auto* file_opt = a->add_option("--file", analyze.input_path, "File holding the polynomial")
                         ->check(CLI::ExistingFile);
    poly_opt->excludes(file_opt);
    a->add_flag("--json", analyze_json, "Emit the JSON report");
    a->add_option("--seed", analyze.rng_seed, "Seed for the coordinate-change search")
        ->capture_default_str();
    a->add_option("--max-jet-order", analyze.max_jet_order, "Jet order cap (default 2(d-1)^2 + 4)")
        ->check(CLI::PositiveNumber);
    a->add_option("--retries", analyze.chart_retry_budget, "Coordinate-change attempts")
        ->capture_default_str()
        ->check(CLI::Range(1U, 100000U));
    a->add_option("-o,--output", analyze.output_path, "Write the report to this file");

    CodimConfig codim;
    bool codim_json = false;
    auto* c = app.add_subcommand("codim", "Check [X] - s(Y,X)^ = c(O_Y) cap [X] for a complete intersection");
    c->add_option("-n", codim.ambient_dim, "Ambient projective dimension")->required();
    c->add_option("-d", codim.degrees, "Comma-separated hypersurface degrees")
        ->required()
        ->delimiter(',');
    c->add_flag("--json", codim_json, "Emit JSON");

    BatchConfig batch;
    bool batch_json = false;
    auto* b = app.add_subcommand("batch", "Verify every curve file given; exit code is the worst result");
    b->add_option("files", batch.input_paths, "Curve files")->required();
    b->add_flag("--json", batch_json, "Emit a JSON array of reports");
    b->add_option("--seed", batch.rng_seed, "Seed for the coordinate-change search");
    b->add_option("--max-jet-order", batch.max_jet_order, "Jet order cap")->check(CLI::PositiveNumber);
    b->add_option("--retries", batch.chart_retry_budget, "Coordinate-change attempts")
        ->check(CLI::Range(1U, 100000U));
    b->add_option("-o,--output", batch.output_path, "Write the output to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }

    if (*a) {
        analyze.output_format = analyze_json ? OutputFormat::Json : OutputFormat::Text;
        return run_analyze(analyze, std::cout, std::cerr);
    }
    if (*c) {
        codim.output_format = codim_json ? OutputFormat::Json : OutputFormat::Text;
        return run_codim(codim, std::cout, std::cerr);
    }
    batch.output_format = batch_json ? OutputFormat::Json : OutputFormat::Text;
    return run_batch(batch, std::cout, std::cerr);
}
