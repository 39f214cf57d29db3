#include "logchern/report.hpp"

#include "logchern/errors.hpp"
#include "logchern/parser.hpp"

namespace logchern {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json rats_to_json(const std::vector<Rat>& values) {
    ordered_json out = ordered_json::array();
    for (const auto& v : values) out.push_back(v.to_string());
    return out;
}

std::vector<Rat> rats_from_json(const json& j) {
    std::vector<Rat> out;
    for (const auto& v : j) out.push_back(Rat::from_string(v.get<std::string>()));
    return out;
}

std::string verdict(bool holds) { return holds ? "holds" : "FAILS"; }

}  // namespace

ordered_json chow_to_json(const ChowClass& c) { return rats_to_json(c.coeffs()); }

ChowClass chow_from_json(const json& j) {
    auto coeffs = rats_from_json(j);
    if (coeffs.empty()) throw Error("empty Chow class array");
    const std::size_t n = coeffs.size() - 1;
    return ChowClass(n, std::move(coeffs));
}

ordered_json report_to_json(const CurveReport& r) {
    ordered_json j;
    j["polynomial"] = r.divisor.equation.to_string(xyz_vars());
    j["degree"] = r.divisor.degree;
    ordered_json chart = ordered_json::array();
    for (const auto& row : r.divisor.chart_transform) chart.push_back(rats_to_json(row));
    j["chart_transform"] = chart;
    ordered_json points = ordered_json::array();
    for (const auto& p : r.locus.points) {
        ordered_json e;
        e["point"] = rats_to_json(p.point.coords);
        e["mu"] = p.mu;
        e["tau"] = p.tau;
        e["quasi_homogeneous"] = p.quasi_homogeneous;
        points.push_back(e);
    }
    j["singular_points"] = points;
    j["all_points_rational"] = r.locus.all_points_rational;
    j["mu_total"] = r.locus.mu_total;
    j["tau_total"] = r.locus.tau_total;
    j["csm_curve"] = chow_to_json(r.csm_curve);
    j["csm_complement"] = chow_to_json(r.csm_complement);
    j["chern_log_derivations"] = chow_to_json(r.chern_logder);
    j["segre_side"] = chow_to_json(r.segre_side);
    j["chern_side"] = chow_to_json(r.chern_side);
    j["formula_holds"] = r.formula_holds;
    j["difference"] = chow_to_json(r.difference);
    j["euler_curve"] = r.euler_curve;
    j["euler_complement"] = r.euler_complement;
    return j;
}

CurveReport report_from_json(const json& j) {
    CurveReport r;
    r.divisor.equation = parse_poly(j.at("polynomial").get<std::string>(), xyz_vars());
    r.divisor.degree = j.at("degree").get<unsigned>();
    for (const auto& row : j.at("chart_transform")) r.divisor.chart_transform.push_back(rats_from_json(row));
    r.divisor.chart_equation = substitute_linear(r.divisor.equation, r.divisor.chart_transform);

    for (const auto& e : j.at("singular_points")) {
        SingularPointData p;
        p.point.coords = rats_from_json(e.at("point"));
        p.mu = e.at("mu").get<std::size_t>();
        p.tau = e.at("tau").get<std::size_t>();
        p.quasi_homogeneous = e.at("quasi_homogeneous").get<bool>();
        r.locus.points.push_back(std::move(p));
    }
    r.locus.all_points_rational = j.at("all_points_rational").get<bool>();
    r.locus.mu_total = j.at("mu_total").get<std::size_t>();
    r.locus.tau_total = j.at("tau_total").get<std::size_t>();

    r.csm_curve = chow_from_json(j.at("csm_curve"));
    r.csm_complement = chow_from_json(j.at("csm_complement"));
    r.chern_logder = chow_from_json(j.at("chern_log_derivations"));
    r.segre_side = chow_from_json(j.at("segre_side"));
    r.chern_side = chow_from_json(j.at("chern_side"));
    r.formula_holds = j.at("formula_holds").get<bool>();
    r.identity_holds = r.segre_side == r.chern_side;
    r.difference = chow_from_json(j.at("difference"));
    r.euler_curve = j.at("euler_curve").get<long>();
    r.euler_complement = j.at("euler_complement").get<long>();
    if (r.locus.all_points_rational) {
        bool all_equal = true;
        for (const auto& p : r.locus.points) all_equal = all_equal && p.quasi_homogeneous;
        r.pointwise_quasi_homogeneous = all_equal;
    }
    return r;
}

void write_report_text(std::ostream& os, const CurveReport& r) {
    os << "curve            " << r.divisor.equation.to_string(xyz_vars()) << "  (degree "
       << r.divisor.degree << ")\n";
    if (!(r.divisor.chart_transform == identity_matrix(3))) {
        os << "chart transform ";
        for (const auto& row : r.divisor.chart_transform) {
            os << " [";
            for (std::size_t k = 0; k < row.size(); ++k) os << (k ? " " : "") << row[k];
            os << ']';
        }
        os << "\n";
    }
    os << "singular points  " << r.locus.points.size()
       << (r.locus.all_points_rational ? " (all rational)" : " rational, others irrational") << "\n";
    for (const auto& p : r.locus.points) {
        os << "  (" << p.point.coords[0] << ", " << p.point.coords[1] << ")  mu=" << p.mu
           << " tau=" << p.tau << (p.quasi_homogeneous ? "  quasi-homogeneous" : "  not quasi-homogeneous")
           << "\n";
    }
    os << "mu_total         " << r.locus.mu_total << "\n";
    os << "tau_total        " << r.locus.tau_total << "\n";
    os << "c_SM(1_D)        " << r.csm_curve.to_string() << "\n";
    os << "c_SM(1_U)        " << r.csm_complement.to_string() << "\n";
    os << "c(Der(-log D))   " << r.chern_logder.to_string() << "\n";
    os << "[X] - s(J_D)^    " << r.segre_side.to_string() << "\n";
    os << "c(O_J_D)         " << r.chern_side.to_string() << "\n";
    os << "difference       " << r.difference.to_string() << "\n";
    os << "euler            chi(D)=" << r.euler_curve << " chi(U)=" << r.euler_complement << "\n";
    os << "formula          " << verdict(r.formula_holds) << "\n";
}

ordered_json identity_to_json(const CIData& y, const IdentityCheck& check) {
    ordered_json j;
    j["ambient_dim"] = y.ambient_dim;
    j["degrees"] = y.degrees;
    j["codim"] = y.codim();
    j["lhs"] = chow_to_json(check.lhs);
    j["rhs"] = chow_to_json(check.rhs);
    j["holds"] = check.holds;
    j["mismatch"] = chow_to_json(check.mismatch);
    return j;
}

void write_identity_text(std::ostream& os, const CIData& y, const IdentityCheck& check) {
    os << "ambient          P^" << y.ambient_dim << "\n";
    os << "degrees         ";
    for (unsigned d : y.degrees) os << ' ' << d;
    os << "  (codimension " << y.codim() << ")\n";
    os << "[X] - s(Y,X)^    " << check.lhs.to_string() << "\n";
    os << "c(O_Y) cap [X]   " << check.rhs.to_string() << "\n";
    os << "mismatch         " << check.mismatch.to_string() << "\n";
    os << "identity         " << verdict(check.holds) << "\n";
}

}  // namespace logchern
