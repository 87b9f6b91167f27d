#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

#include <json.hpp>

namespace xfermi::cli {

namespace {

std::string render(const Value& v, int digits) {
    if (const auto* s = std::get_if<std::string>(&v)) return *s;
    if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
    return format_number(std::get<double>(v), digits);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

nlohmann::ordered_json to_json(const Value& v) {
    if (const auto* s = std::get_if<std::string>(&v)) return *s;
    if (const auto* i = std::get_if<long long>(&v)) return *i;
    const double d = std::get<double>(v);
    if (!std::isfinite(d)) return nullptr;
    // Round through the csv rendering so both formats carry the same number.
    return std::strtod(format_number(d, digits_for(Format::Json)).c_str(), nullptr);
}

void emit_meta(const Report& r, int digits, std::ostream& out) {
    for (const auto& [key, value] : r.meta) out << "# " << key << ": " << render(value, digits) << '\n';
}

void emit_table(const Report& r, std::ostream& out) {
    const int digits = digits_for(Format::Table);
    emit_meta(r, digits, out);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(r.columns.size());
    for (std::size_t c = 0; c < r.columns.size(); ++c) width[c] = r.columns[c].size();
    for (const auto& row : r.rows) {
        auto& line = cells.emplace_back();
        for (std::size_t c = 0; c < row.size(); ++c) {
            line.push_back(render(row[c], digits));
            width[c] = std::max(width[c], line.back().size());
        }
    }
    const auto put = [&](const std::vector<std::string>& line, const std::vector<Value>* typed) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c) out << "  ";
            const bool numeric = typed && !std::holds_alternative<std::string>((*typed)[c]);
            const std::string pad(width[c] - line[c].size(), ' ');
            if (c + 1 == line.size() && !numeric) {
                out << line[c];
                continue;
            }
            out << (numeric ? pad + line[c] : line[c] + pad);
        }
        out << '\n';
    };
    put(r.columns, nullptr);
    for (std::size_t i = 0; i < cells.size(); ++i) put(cells[i], &r.rows[i]);
}

void emit_csv(const Report& r, std::ostream& out) {
    const int digits = digits_for(Format::Csv);
    emit_meta(r, digits, out);
    for (std::size_t c = 0; c < r.columns.size(); ++c) out << (c ? "," : "") << csv_field(r.columns[c]);
    out << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(render(row[c], digits));
        out << '\n';
    }
}

void emit_json(const Report& r, std::ostream& out) {
    nlohmann::ordered_json doc;
    doc["meta"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : r.meta) doc["meta"][key] = to_json(value);
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < row.size(); ++c) obj[r.columns[c]] = to_json(row[c]);
        doc["rows"].push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

} // namespace

int digits_for(Format format) { return format == Format::Table ? 6 : 10; }

std::string format_number(double value, int digits) {
    if (value == 0.0) value = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return buf;
}

void emit(const Report& report, Format format, std::ostream& out) {
    switch (format) {
    case Format::Table: emit_table(report, out); break;
    case Format::Csv: emit_csv(report, out); break;
    case Format::Json: emit_json(report, out); break;
    }
}

} // namespace xfermi::cli
