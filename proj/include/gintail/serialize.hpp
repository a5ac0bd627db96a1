#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gintail::serialize {

// Shortest round-trip decimal representation (std::to_chars); non-finite
// values render as "nan", "inf", "-inf".
std::string fmt_double(double v);

// One CSV emitter for every subcommand: a '#'-prefixed config line, a column
// header, then rows of preformatted cells.
void write_csv(std::ostream& os, const std::string& config_line,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows);

}  // namespace gintail::serialize
