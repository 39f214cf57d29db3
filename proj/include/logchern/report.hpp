#pragma once

/**
 * @file report.hpp
 * @brief Serialization of verification results.
 *
 * JSON keys are stable. Every exact number (class coefficients, point
 * coordinates, matrix entries) is written as a rational string such as "3"
 * or "-2/5"; Chow classes are codimension-ordered arrays of those strings.
 */

#include <ostream>

#include "json.hpp"

#include "logchern/charclass.hpp"
#include "logchern/codim.hpp"

namespace logchern {

nlohmann::ordered_json chow_to_json(const ChowClass& c);
ChowClass chow_from_json(const nlohmann::json& j);

nlohmann::ordered_json report_to_json(const CurveReport& report);

/// Rebuilds a report from report_to_json output. The chart equation is
/// recomputed from "polynomial" and "chart_transform". Throws
/// nlohmann::json::exception or logchern::Error on malformed input.
CurveReport report_from_json(const nlohmann::json& j);

void write_report_text(std::ostream& os, const CurveReport& report);

nlohmann::ordered_json identity_to_json(const CIData& y, const IdentityCheck& check);
void write_identity_text(std::ostream& os, const CIData& y, const IdentityCheck& check);

}  // namespace logchern
