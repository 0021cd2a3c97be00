#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "acute/doubling.hpp"
#include "acute/point.hpp"
#include "acute/verify.hpp"

namespace acute {

/// Malformed input file. `line` is 1-based when known, 0 otherwise.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parsed form of the exact-rational JSON schema:
/// {"dim": int, "points": [["p/q", ...], ...], "meta": {...}} with the
/// optional trace / certificate / target_size carried under meta.
struct PointSetFile {
  PointSet points;
  std::optional<ConstructionTrace> trace;
  std::optional<VerificationReport> certificate;
  std::optional<std::size_t> target_size;
};

std::string write_pointset_json(const PointSetFile& f);
PointSetFile read_pointset_json(const std::string& text);

std::string write_report_json(const VerificationReport& rep);

/// Float CSV export: header "x0,x1,...", one point per row, 17 significant
/// digits. Export-only convenience; re-importing goes through read_csv.
std::string write_csv(const PointSet& ps);

/// Reads float CSV into a PointSet whose coordinates are the exact dyadic
/// values of the parsed doubles (lossless float -> rational).
PointSet read_csv(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace acute
