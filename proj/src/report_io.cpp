#include "fcomplex/report_io.hpp"

#include <cstdlib>

#include <fmt/format.h>
#include <json.hpp>

namespace fcomplex {

namespace {

using Json = nlohmann::ordered_json;

double rounded(double value) { return std::strtod(format_real(value).c_str(), nullptr); }

Json rounded_array(const std::vector<double>& values) {
  Json out = Json::array();
  for (double v : values) out.push_back(rounded(v));
  return out;
}

}  // namespace

std::string report_to_json(const ComplexityReport& report) {
  Json doc;
  doc["format_version"] = kReportFormatVersion;
  doc["node_count"] = report.node_count;
  doc["edge_count"] = report.edge_count;
  doc["max_scale"] = report.max_scale;
  doc["complexity"] = rounded(report.complexity);
  doc["within_evaluated_domain"] = report.within_evaluated_domain;
  Json census = Json::array();
  for (std::size_t j = 1; j < report.census.counts_by_size.size(); ++j) {
    census.push_back(report.census.counts_by_size[j]);
  }
  doc["census"] = std::move(census);
  Json curves = Json::array();
  for (const auto& curve : report.curves) {
    Json c;
    c["scale"] = curve.scale;
    c["sizes"] = curve.sizes;
    c["average_information"] = rounded_array(curve.average_information);
    c["linear_reference"] = rounded_array(curve.linear_reference);
    c["deviation"] = rounded_array(curve.deviation);
    curves.push_back(std::move(c));
  }
  doc["curves"] = std::move(curves);
  return doc.dump(2) + "\n";
}

std::string report_to_csv(const ComplexityReport& report) {
  std::string out = "record,scale,size,value\n";
  out += fmt::format("node_count,,,{}\n", report.node_count);
  out += fmt::format("edge_count,,,{}\n", report.edge_count);
  out += fmt::format("max_scale,,,{}\n", report.max_scale);
  out += fmt::format("complexity,,,{}\n", format_real(report.complexity));
  out += fmt::format("within_evaluated_domain,,,{}\n", report.within_evaluated_domain ? 1 : 0);
  for (std::size_t j = 1; j < report.census.counts_by_size.size(); ++j) {
    out += fmt::format("beta,,{},{}\n", j, report.census.counts_by_size[j]);
  }
  for (const auto& curve : report.curves) {
    for (std::size_t k = 0; k < curve.sizes.size(); ++k) {
      out += fmt::format("average_information,{},{},{}\n", curve.scale, curve.sizes[k],
                         format_real(curve.average_information[k]));
      out += fmt::format("linear_reference,{},{},{}\n", curve.scale, curve.sizes[k],
                         format_real(curve.linear_reference[k]));
      out += fmt::format("deviation,{},{},{}\n", curve.scale, curve.sizes[k],
                         format_real(curve.deviation[k]));
    }
  }
  return out;
}

std::string curves_to_csv(const ComplexityReport& report) {
  std::string out = "scale,size,average_information,linear_reference,deviation\n";
  for (const auto& curve : report.curves) {
    for (std::size_t k = 0; k < curve.sizes.size(); ++k) {
      out += fmt::format("{},{},{},{},{}\n", curve.scale, curve.sizes[k],
                         format_real(curve.average_information[k]),
                         format_real(curve.linear_reference[k]), format_real(curve.deviation[k]));
    }
  }
  return out;
}

std::string summary_to_json(const CorrelationSummary& summary) {
  Json doc;
  doc["format_version"] = kReportFormatVersion;
  doc["n"] = summary.node_count;
  doc["sample_count"] = summary.sample_count;
  doc["mode"] = std::string(to_string(summary.mode));
  doc["weighted"] = summary.weighted;
  doc["pearson_apl_cf"] = rounded(summary.pearson_apl_cf);
  doc["pearson_cc_cf"] = rounded(summary.pearson_cc_cf);
  doc["pearson_apl_cc"] = rounded(summary.pearson_apl_cc);
  doc["multiple_r"] = rounded(summary.multiple_r);
  return doc.dump(2) + "\n";
}

std::string summary_to_csv(const CorrelationSummary& summary) {
  return fmt::format(
      "n,sample_count,mode,weighted,pearson_apl_cf,pearson_cc_cf,pearson_apl_cc,multiple_r\n"
      "{},{},{},{},{},{},{},{}\n",
      summary.node_count, summary.sample_count, to_string(summary.mode), summary.weighted ? 1 : 0,
      format_real(summary.pearson_apl_cf), format_real(summary.pearson_cc_cf),
      format_real(summary.pearson_apl_cc), format_real(summary.multiple_r));
}

}  // namespace fcomplex
