#pragma once

#include <string>

#include "ravel/catalog.hpp"
#include "ravel/classify.hpp"
#include "ravel/dsl.hpp"
#include "ravel/verify.hpp"

namespace ravel {

enum class ReportFormat { Json, Text };

inline constexpr const char* kReportSchema = "ravel-report/1";

ReportFormat parse_report_format(const std::string& s);  // "json" or "text"

std::string report_classification(const ParsedInput& in, const Classification& c, ReportFormat f);
std::string report_verification(const ParsedInput& in, const Verification& v, ReportFormat f);

// One line of an enumeration dataset (JSON lines, or tab separated text).
std::string report_entry(const CatalogEntry& e, const Verification& v, ReportFormat f);

}  // namespace ravel
