#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "logchern/cli.hpp"
#include "logchern/parser.hpp"
#include "logchern/report.hpp"

using namespace logchern;
using namespace logchern::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run analyze(const std::string& poly, OutputFormat format = OutputFormat::Text, std::uint64_t seed = 0) {
    RunConfig cfg;
    cfg.poly = poly;
    cfg.output_format = format;
    cfg.rng_seed = seed;
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_analyze(cfg, out, err);
    return {code, out.str(), err.str()};
}

Run codim(std::size_t n, std::vector<unsigned> degrees) {
    CodimConfig cfg;
    cfg.ambient_dim = n;
    cfg.degrees = std::move(degrees);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_codim(cfg, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("logchern_test_" + name);
}

}  // namespace

TEST_SUITE("analyze") {
    TEST_CASE("exit codes") {
        const Run nodal = analyze("y^2*z - x^3 - x^2*z");
        CHECK(nodal.code == 0);
        CHECK(nodal.out.find("mu=1 tau=1") != std::string::npos);
        CHECK(nodal.out.find("1 + 2H^2") != std::string::npos);

        const Run quintic = analyze("x^5 + x^2*y^2*z + y^5");
        CHECK(quintic.code == 1);
        CHECK(quintic.out.find("difference       -H^2") != std::string::npos);

        const Run line2 = analyze("x^2");
        CHECK(line2.code == 2);
        CHECK(line2.err.find("non-reduced or non-isolated singularities") != std::string::npos);
    }

    TEST_CASE("distinct diagnostics") {
        const Run parse = analyze("x^2 + * y");
        CHECK(parse.code == 2);
        CHECK(parse.err.find("parse error") != std::string::npos);
        const Run homog = analyze("x^2 + y*z + z");
        CHECK(homog.code == 2);
        CHECK(homog.err.find("homogeneous") != std::string::npos);
        const Run unknown = analyze("x*w");
        CHECK(unknown.code == 2);
        CHECK(unknown.err.find("parse error") != std::string::npos);
        CHECK(parse.err != homog.err);
        CHECK(homog.err != analyze("x^2").err);

        RunConfig none;
        std::ostringstream out;
        std::ostringstream err;
        CHECK(run_analyze(none, out, err) == 2);
        RunConfig bad_retries;
        bad_retries.poly = "x*y*z";
        bad_retries.chart_retry_budget = 0;
        CHECK(run_analyze(bad_retries, out, err) == 2);
    }

    TEST_CASE("file input with comments and output file") {
        const auto in = scratch("cusp.txt");
        const auto out_path = scratch("cusp.json");
        {
            std::ofstream f(in);
            f << "# cuspidal cubic\n  y^2*z\n - x^3\n";
        }
        RunConfig cfg;
        cfg.input_path = in.string();
        cfg.output_format = OutputFormat::Json;
        cfg.output_path = out_path.string();
        std::ostringstream out;
        std::ostringstream err;
        CHECK(run_analyze(cfg, out, err) == 0);
        CHECK(out.str().empty());
        std::ifstream back(out_path);
        const auto j = nlohmann::json::parse(back);
        CHECK(j.at("mu_total") == 2);
        CHECK(j.at("csm_complement") == nlohmann::json::array({"1", "0", "1"}));
        std::filesystem::remove(in);
        std::filesystem::remove(out_path);

        cfg.input_path = scratch("missing.txt").string();
        cfg.output_path.reset();
        CHECK(run_analyze(cfg, out, err) == 2);
    }
}

TEST_SUITE("json report") {
    TEST_CASE("stable keys in order") {
        const Run r = analyze("y^2*z - x^3 - x^2*z", OutputFormat::Json);
        const auto j = nlohmann::ordered_json::parse(r.out);
        std::vector<std::string> keys;
        for (const auto& item : j.items()) keys.push_back(item.key());
        const std::vector<std::string> expected{
            "polynomial", "degree", "chart_transform", "singular_points", "all_points_rational",
            "mu_total", "tau_total", "csm_curve", "csm_complement", "chern_log_derivations",
            "segre_side", "chern_side", "formula_holds", "difference", "euler_curve", "euler_complement"};
        CHECK(keys == expected);
        CHECK(j["chern_log_derivations"] == nlohmann::ordered_json::array({"1", "0", "2"}));
        CHECK(j["singular_points"][0]["point"] == nlohmann::ordered_json::array({"0", "0"}));
    }

    TEST_CASE("round trip") {
        for (const char* text : {"y^2*z - x^3 - x^2*z", "x^5 + x^2*y^2*z + y^5", "x*y*z", "y*(x^2 - 2*z^2)",
                                 "x^2 - y*z"}) {
            const CurveReport report = verify_theorem(validate_divisor(parse_poly(text, xyz_vars())));
            const std::string dumped = report_to_json(report).dump();
            const CurveReport back = report_from_json(nlohmann::json::parse(dumped));
            CHECK(back == report);
            CHECK(report_to_json(back).dump() == dumped);
        }
    }

    TEST_CASE("same seed gives identical bytes") {
        for (std::uint64_t seed : {0ULL, 7ULL}) {
            const Run a = analyze("x^2*z^3 + y^5", OutputFormat::Json, seed);
            const Run b = analyze("x^2*z^3 + y^5", OutputFormat::Json, seed);
            CHECK(a.out == b.out);
        }
    }
}

TEST_SUITE("codim command") {
    TEST_CASE("exit codes") {
        CHECK(codim(2, {2, 3}).code == 0);
        const Run c3 = codim(3, {1, 1, 1});
        CHECK(c3.code == 1);
        CHECK(c3.out.find("mismatch         H^3") != std::string::npos);
        CHECK(codim(3, {1, 1, 1, 1}).code == 2);
        CHECK(codim(2, {0}).code == 2);
    }
}

TEST_SUITE("batch") {
    TEST_CASE("ordered output and worst exit code") {
        const auto a = scratch("a.txt");
        const auto b = scratch("b.txt");
        std::ofstream(a) << "x^2 - y*z\n";
        std::ofstream(b) << "x^5 + x^2*y^2*z + y^5\n";
        BatchConfig cfg;
        cfg.input_paths = {b.string(), a.string()};
        std::ostringstream out;
        std::ostringstream err;
        CHECK(run_batch(cfg, out, err) == 1);
        const std::string text = out.str();
        CHECK(text.find(b.string()) < text.find(a.string()));

        cfg.input_paths.push_back(scratch("nothing.txt").string());
        std::ostringstream out2;
        CHECK(run_batch(cfg, out2, err) == 2);
        std::filesystem::remove(a);
        std::filesystem::remove(b);
    }
}
