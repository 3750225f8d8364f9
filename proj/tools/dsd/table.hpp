#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace dsd::cli {

/// A table cell. Doubles are always printed with six significant digits.
using Cell = std::variant<std::monostate, std::string, std::int64_t, double>;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

std::string format_number(double v);
std::string format_cell(const Cell& c);

/// CSV with the manifest as a leading "# manifest: {...}" line.
void write_csv(std::ostream& out, const Table& t, const nlohmann::ordered_json& manifest);

/// Table as an array of row objects, numbers at printed precision.
nlohmann::ordered_json table_json(const Table& t);

/// Document {"manifest": ..., "<name>": [rows]} for one or more tables.
void write_json(std::ostream& out, const std::vector<const Table*>& tables, const nlohmann::ordered_json& manifest);

/// Read back a CSV written by write_csv. Cells are kept as text; '#' lines
/// are skipped.
struct TextTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

TextTable read_csv(std::istream& in);

}  // namespace dsd::cli
