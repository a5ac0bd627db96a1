#include "gintail/serialize.hpp"

#include <charconv>
#include <cmath>

namespace gintail::serialize {

std::string fmt_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const std::string& config_line,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows) {
    os << "# " << config_line << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) os << ',';
        os << columns[i];
    }
    os << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << row[i];
        }
        os << '\n';
    }
}

}  // namespace gintail::serialize
