#include "dsd/table.hpp"

#include <cstdlib>

#include <fmt/format.h>

namespace dsd::cli {

std::string format_number(double v) {
    if (v == 0.0) return "0";  // drop the sign of negative zero
    return fmt::format("{:.6g}", v);
}

std::string format_cell(const Cell& c) {
    struct Visitor {
        std::string operator()(std::monostate) const { return {}; }
        std::string operator()(const std::string& s) const { return s; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return format_number(d); }
    };
    return std::visit(Visitor{}, c);
}

void write_csv(std::ostream& out, const Table& t, const nlohmann::ordered_json& manifest) {
    out << "# manifest: " << manifest.dump() << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
    out << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell(row[i]);
        out << '\n';
    }
}

nlohmann::ordered_json table_json(const Table& t) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
            const auto& cell = row[i];
            auto& slot = obj[t.columns[i]];
            if (std::holds_alternative<std::monostate>(cell)) {
                slot = nullptr;
            } else if (const auto* s = std::get_if<std::string>(&cell)) {
                slot = *s;
            } else if (const auto* n = std::get_if<std::int64_t>(&cell)) {
                slot = *n;
            } else {
                slot = std::strtod(format_number(std::get<double>(cell)).c_str(), nullptr);
            }
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

void write_json(std::ostream& out, const std::vector<const Table*>& tables, const nlohmann::ordered_json& manifest) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    doc["manifest"] = manifest;
    for (const Table* t : tables) doc[t->name] = table_json(*t);
    out << doc.dump(2) << '\n';
}

TextTable read_csv(std::istream& in) {
    TextTable t;
    std::string line;
    auto split = [](const std::string& s) {
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const auto comma = s.find(',', start);
            cells.push_back(s.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return cells;
    };
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (header) {
            t.columns = split(line);
            header = false;
        } else {
            t.rows.push_back(split(line));
        }
    }
    return t;
}

}  // namespace dsd::cli
