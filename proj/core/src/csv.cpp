#include "statespace/csv.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <iostream>
#include <ostream>

#include "statespace/errors.hpp"

namespace statespace {

std::string format_real(double v) {
  std::array<char, 64> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                    std::chars_format::general, 17);
  return std::string(buf.data(), result.ptr);
}

void emit_csv(const ScenarioReport& report, std::ostream& out) {
  for (const auto& [key, value] : report.metadata()) {
    out << "# " << key << ": " << value << '\n';
  }
  const auto& columns = report.columns();
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) out << ',';
    out << columns[c];
  }
  out << '\n';
  for (const auto& row : report.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << format_real(row[c]);
    }
    out << '\n';
  }
  out.flush();
  if (!out) throw IoError("failed writing CSV report");
}

void write_csv(const ScenarioReport& report,
               const std::optional<std::string>& path) {
  if (!path) {
    emit_csv(report, std::cout);
    return;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + *path + " for writing");
  emit_csv(report, file);
  file.close();
  if (!file) throw IoError("failed closing " + *path);
}

}  // namespace statespace
