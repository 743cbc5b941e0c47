#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace lc {

/// Column table with string metadata; serializes to CSV (17 significant
/// digits, round-trip safe, metadata as # comments) and to JSON.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::map<std::string, std::string> meta;

    void add_row(std::initializer_list<double> values);
    void write_csv(std::ostream& out) const;
    void write_json(std::ostream& out) const;
};

/// FNV-1a over a byte string; stable across runs and platforms.
std::uint64_t fnv1a(const std::string& bytes);

/// %.17g formatting used everywhere numbers are emitted.
std::string format_double(double v);

} // namespace lc
