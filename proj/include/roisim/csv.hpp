#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace roisim {

/// Shortest-round-trip text for a double (17 significant digits), so CSV
/// values re-read bit-exactly.
std::string format_double(double v);

/// Comma-separated writer: UTF-8, LF line endings, header row first.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& header);

  void row(const std::vector<std::string>& fields);

  static std::string field(double v) { return format_double(v); }
  static std::string field(long v) { return std::to_string(v); }
  static std::string field(int v) { return std::to_string(v); }
  static std::string field(const std::string& v) { return v; }

 private:
  std::ofstream out_;
  std::size_t n_columns_;
};

}  // namespace roisim
