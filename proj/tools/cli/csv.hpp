#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace gaussdiss::cli {

/// Shortest round-trippable decimal at 17 significant digits ("%.17g").
std::string format_real(double v);

/// Comma-separated rows, LF line endings.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::initializer_list<std::string_view> header);

  CsvWriter& operator<<(double v);
  CsvWriter& operator<<(long long v);
  CsvWriter& operator<<(std::string_view v);
  void end_row();

 private:
  void separator();

  std::ostream& out_;
  bool row_open_ = false;
};

}  // namespace gaussdiss::cli
