#pragma once

// Serialized forms of complexity reports and correlation summaries.
//
// Structured text is JSON whose first member is "format_version" (currently
// 1); reals are rounded to 12 significant digits before encoding. See
// README.md for the field list.

#include <string>

#include "fcomplex/complexity.hpp"
#include "fcomplex/sweep.hpp"

namespace fcomplex {

inline constexpr int kReportFormatVersion = 1;

std::string report_to_json(const ComplexityReport& report);

/// Long-form CSV: header record,scale,size,value.
std::string report_to_csv(const ComplexityReport& report);

/// Header scale,size,average_information,linear_reference,deviation; rows
/// grouped by scale.
std::string curves_to_csv(const ComplexityReport& report);

std::string summary_to_json(const CorrelationSummary& summary);
std::string summary_to_csv(const CorrelationSummary& summary);

}  // namespace fcomplex
