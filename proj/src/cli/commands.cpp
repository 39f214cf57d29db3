#include "logchern/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>

#include "logchern/charclass.hpp"
#include "logchern/codim.hpp"
#include "logchern/errors.hpp"
#include "logchern/parser.hpp"
#include "logchern/report.hpp"

namespace logchern::cli {

namespace {

struct Outcome {
    int code = kInputError;
    std::optional<CurveReport> report;
    std::string diagnostic;
};

std::string describe(const ValidationError& e) {
    switch (e.kind) {
        case ValidationError::Kind::NotHomogeneous: return std::string("invalid curve: ") + e.what();
        case ValidationError::Kind::Degenerate: return std::string("invalid curve: ") + e.what();
        case ValidationError::Kind::NonIsolated: return e.what();
        case ValidationError::Kind::ChartRetriesExhausted: return std::string("chart search failed: ") + e.what();
    }
    return e.what();
}

Outcome verify_text(const std::string& text, unsigned retries, std::uint64_t seed,
                    std::optional<unsigned> max_jet_order) {
    Outcome o;
    try {
        const MultiPoly f = parse_poly(text, xyz_vars());
        const DivisorInput divisor = validate_divisor(f, ChartOptions{seed, retries});
        o.report = verify_theorem(divisor, VerifyOptions{max_jet_order});
        o.code = o.report->formula_holds ? kHolds : kFails;
    } catch (const ParseError& e) {
        o.diagnostic = std::string("parse error: ") + e.what();
    } catch (const ValidationError& e) {
        o.diagnostic = describe(e);
    } catch (const StabilizationError& e) {
        o.diagnostic = std::string("jet computation failed: ") + e.what();
    } catch (const Error& e) {
        o.diagnostic = e.what();
    } catch (const std::invalid_argument& e) {
        o.diagnostic = e.what();
    }
    return o;
}

/// Writes to the output file if one was given, otherwise to `out`.
void emit(const std::optional<std::string>& path, std::ostream& out, const std::string& text) {
    if (!path) {
        out << text;
        return;
    }
    std::ofstream file(*path, std::ios::binary);
    if (!file) throw Error("cannot open output file '" + *path + "'");
    file << text;
}

}  // namespace

std::string read_polynomial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read input file '" + path + "'");
    std::string line;
    std::string joined;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        joined += line;
        joined += ' ';
    }
    return joined;
}

int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::string text;
    try {
        if (config.poly && config.input_path) throw Error("give either --poly or --file, not both");
        if (config.poly) text = *config.poly;
        else if (config.input_path) text = read_polynomial_file(*config.input_path);
        else throw Error("no input: pass --poly or --file");
        if (config.chart_retry_budget < 1) throw Error("--retries must be at least 1");
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    const Outcome o = verify_text(text, config.chart_retry_budget, config.rng_seed, config.max_jet_order);
    if (!o.report) {
        err << "error: " << o.diagnostic << "\n";
        return kInputError;
    }
    std::ostringstream os;
    if (config.output_format == OutputFormat::Json) os << report_to_json(*o.report).dump(2) << "\n";
    else write_report_text(os, *o.report);
    try {
        emit(config.output_path, out, os.str());
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return o.code;
}

int run_codim(const CodimConfig& config, std::ostream& out, std::ostream& err) {
    const CIData y{config.ambient_dim, config.degrees};
    IdentityCheck check{ChowClass(0), ChowClass(0), false, ChowClass(0)};
    try {
        check = identity_check(y);
    } catch (const UnsupportedCodimension& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    if (config.output_format == OutputFormat::Json) out << identity_to_json(y, check).dump(2) << "\n";
    else write_identity_text(out, y, check);
    return check.holds ? kHolds : kFails;
}

int run_batch(const BatchConfig& config, std::ostream& out, std::ostream& err) {
    std::vector<std::future<Outcome>> jobs;
    jobs.reserve(config.input_paths.size());
    for (const auto& path : config.input_paths) {
        jobs.push_back(std::async(std::launch::async, [&config, path] {
            std::string text;
            try {
                text = read_polynomial_file(path);
            } catch (const Error& e) {
                Outcome o;
                o.diagnostic = e.what();
                return o;
            }
            return verify_text(text, config.chart_retry_budget, config.rng_seed, config.max_jet_order);
        }));
    }

    int worst = kHolds;
    std::ostringstream os;
    nlohmann::ordered_json all = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        const Outcome o = jobs[k].get();
        worst = std::max(worst, o.code);
        const std::string& path = config.input_paths[k];
        if (config.output_format == OutputFormat::Json) {
            nlohmann::ordered_json entry;
            entry["input"] = path;
            if (o.report) entry["report"] = report_to_json(*o.report);
            else entry["error"] = o.diagnostic;
            all.push_back(entry);
        } else if (o.report) {
            os << path << ": " << (o.report->formula_holds ? "holds" : "FAILS")
               << "  mu_total=" << o.report->locus.mu_total << " tau_total=" << o.report->locus.tau_total
               << "  difference=" << o.report->difference.to_string() << "\n";
        } else {
            os << path << ": error: " << o.diagnostic << "\n";
        }
        if (!o.report) err << path << ": error: " << o.diagnostic << "\n";
    }
    if (config.output_format == OutputFormat::Json) os << all.dump(2) << "\n";
    try {
        emit(config.output_path, out, os.str());
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return worst;
}

}  // namespace logchern::cli
