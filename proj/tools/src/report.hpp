#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace xfermi::cli {

using Value = std::variant<std::string, double, long long>;

enum class Format { Table, Csv, Json };

/// Significant digits per format: 6 for tables, 10 for csv/json.
int digits_for(Format format);

/// %.Ng with "-0" folded to "0".
std::string format_number(double value, int digits);

struct Report {
    std::vector<std::pair<std::string, Value>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;
};

void emit(const Report& report, Format format, std::ostream& out);

} // namespace xfermi::cli
