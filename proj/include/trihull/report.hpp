#pragma once

// Certificate reports: one `key value...` pair per line, reals printed with 17
// significant digits so that a report re-parses to the same doubles.

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "trihull/chm.hpp"
#include "trihull/reductions.hpp"
#include "trihull/shm.hpp"
#include "trihull/svmsep.hpp"

namespace trihull {

std::string format_real(double x);

class ReportWriter {
 public:
  ReportWriter& field(std::string_view key, std::string_view value);
  ReportWriter& field(std::string_view key, double value);
  ReportWriter& field(std::string_view key, std::size_t value);
  ReportWriter& field(std::string_view key, std::span<const double> values);
  /// `<key> <weight> <direction...>` per term, preceded by `<key>s <count>`.
  ReportWriter& terms(std::string_view key, const SpectraplexPoint& x);

  const std::string& str() const noexcept { return out_; }

 private:
  std::string out_;
};

std::string format_certificate(const Certificate& cert, std::string_view kind = "shm");
std::string format_chm_result(const ChmResult& res, double epsilon);
std::string format_pair_certificate(const PairCertificate& cert);
std::string format_maxcut_result(const MaxCutResult& res, double epsilon);
std::string format_sdp_result(const Certificate& cert, const PrimalRecovery& recovery);

/// Reads a report back. Every line is `key value...`; repeated keys keep all lines.
class ParsedReport {
 public:
  static ParsedReport parse(std::string_view text);

  bool has(const std::string& key) const { return lines_.count(key) != 0; }
  /// First value token of the first line with this key. Throws ParseError if absent.
  const std::string& value(const std::string& key) const;
  double real(const std::string& key) const;
  Vector reals(const std::string& key) const;
  /// Terms written by ReportWriter::terms under `key`, as a point of order n.
  SpectraplexPoint point(const std::string& key) const;

 private:
  std::map<std::string, std::vector<std::vector<std::string>>> lines_;
};

}  // namespace trihull
