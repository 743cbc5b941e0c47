#include "lc/table.hpp"

#include <cstdio>
#include <stdexcept>

namespace lc {

void Table::add_row(std::initializer_list<double> values) {
    if (!columns.empty() && values.size() != columns.size())
        throw std::invalid_argument("Table::add_row: column count mismatch");
    rows.emplace_back(values);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void Table::write_csv(std::ostream& out) const {
    for (const auto& [k, v] : meta) out << "# " << k << ": " << v << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << columns[i] << (i + 1 < columns.size() ? "," : "");
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << format_double(row[i]) << (i + 1 < row.size() ? "," : "");
        out << "\n";
    }
}

void Table::write_json(std::ostream& out) const {
    out << "{\n  \"meta\": {";
    bool first = true;
    for (const auto& [k, v] : meta) {
        out << (first ? "" : ",") << "\n    \"" << k << "\": \"" << v << "\"";
        first = false;
    }
    out << "\n  },\n  \"columns\": [";
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << (i ? "," : "") << "\"" << columns[i] << "\"";
    out << "],\n  \"rows\": [";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << (r ? ",\n    [" : "\n    [");
        for (std::size_t i = 0; i < rows[r].size(); ++i)
            out << (i ? "," : "") << format_double(rows[r][i]);
        out << "]";
    }
    out << "\n  ]\n}\n";
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace lc
