#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "statespace/scenario.hpp"

namespace statespace {

// 17 significant digit rendering ("%.17g"), independent of the
// global locale. Round-trips every finite double.
std::string format_real(double v);

// '#'-prefixed "key: value" metadata lines, a header row, then data rows.
// Separator ',', decimal point '.', line terminator '\n'. IoError if the
// stream goes bad.
void emit_csv(const ScenarioReport& report, std::ostream& out);

// Writes to the given path, or standard output when none is given.
void write_csv(const ScenarioReport& report,
               const std::optional<std::string>& path);

}  // namespace statespace
