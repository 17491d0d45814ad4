#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "geomlab/registry.hpp"
#include "geomlab/vector_fields.hpp"

namespace geomlab {

inline constexpr std::string_view kReportSchema = "geomlab-report/1";

using ReportJson = nlohmann::ordered_json;

/// Which sections a report carries; one preset per CLI subcommand.
struct ReportSections {
  bool connection = false;
  bool curvature = false;
  bool ricci = false;
  bool weyl = false;
  bool ledger = false;
  bool biinvariance = false;
  bool solitons = false;
  bool walker = false;
  bool parallel = false;
  bool harmonic = false;
  bool fields = false;

  static ReportSections everything();
  /// analyze, connection, curvature, solitons, walker, classify, field
  static std::optional<ReportSections> for_command(const std::string& command);
};

struct ReportRequest {
  ReportSections sections;
  std::optional<RatVector> field;   // extra field; without it `fields` covers the basis
  std::optional<Rational> volume;   // defaults to the model's volume, then 1
};

/// Builds the structured report. Every number is an exact rational string and
/// tensors are nested objects keyed by basis labels. The conventions block is
/// always first.
ReportJson build_report(const LoadedModel& model, const ReportRequest& request);

/// Canonical text of a JSON report (2-space indent, trailing newline).
std::string render_json(const ReportJson& report);

/// Human-readable rendering of the same report.
std::string render_markdown(const ReportJson& report);

/// Parses "a,b,c" into rationals. Throws ModelError(MalformedRational).
RatVector parse_coefficients(const std::string& text);

}  // namespace geomlab
