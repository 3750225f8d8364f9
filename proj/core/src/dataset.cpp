#include "dsd/dataset.hpp"

#include "dsd/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace dsd {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        cells.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return cells;
}

std::string fmt_number(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string at_row(std::optional<std::size_t> row) {
    return row ? "row " + std::to_string(*row) + ": " : std::string();
}

double parse_double(std::string_view cell, std::size_t row, const std::string& column) {
    double value = 0.0;
    const auto* first = cell.data();
    const auto* last = cell.data() + cell.size();
    if (!cell.empty() && *first == '+') ++first;
    const auto res = std::from_chars(first, last, value);
    if (cell.empty() || res.ec != std::errc() || res.ptr != last || !std::isfinite(value)) {
        throw ParseError(row, column,
                         "row " + std::to_string(row) + ", column '" + column +
                             "': cannot parse '" + std::string(cell) + "' as a finite number");
    }
    return value;
}

int parse_year(std::string_view cell, std::size_t row) {
    int value = 0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (cell.empty() || res.ec != std::errc() || res.ptr != cell.data() + cell.size()) {
        throw ParseError(row, "year",
                         "row " + std::to_string(row) + ", column 'year': cannot parse '" +
                             std::string(cell) + "' as an integer year");
    }
    return value;
}

void require_positive(double v, std::optional<std::size_t> row, const char* column) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw ValidationError(row, column,
                              at_row(row) + "column '" + column + "' must be positive, got " +
                                  fmt_number(v));
    }
}

void sort_and_check_years(std::vector<YearRecord>& records, const std::vector<std::size_t>* rows) {
    std::vector<std::size_t> order(records.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return records[a].year < records[b].year; });
    std::vector<YearRecord> sorted;
    sorted.reserve(records.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        const auto& rec = records[order[i]];
        if (!sorted.empty() && sorted.back().year == rec.year) {
            std::optional<std::size_t> row;
            if (rows) row = (*rows)[order[i]];
            throw ValidationError(row, "year",
                                  at_row(row) + "duplicate year " + std::to_string(rec.year));
        }
        sorted.push_back(rec);
    }
    records = std::move(sorted);
}

}  // namespace

double YearRecord::total_energy() const noexcept {
    return std::accumulate(energy.begin(), energy.end(), 0.0);
}

double YearRecord::total_emissions() const noexcept {
    return std::accumulate(emissions.begin(), emissions.end(), 0.0);
}

const YearRecord* Dataset::find(int year) const noexcept {
    const auto it = std::lower_bound(records.begin(), records.end(), year,
                                     [](const YearRecord& r, int y) { return r.year < y; });
    return (it != records.end() && it->year == year) ? &*it : nullptr;
}

const YearRecord& Dataset::at(int year) const {
    if (const auto* r = find(year)) return *r;
    throw DomainError("year " + std::to_string(year) + " is not in the dataset");
}

int Dataset::first_year() const {
    if (records.empty()) throw DomainError("dataset is empty");
    return records.front().year;
}

int Dataset::last_year() const {
    if (records.empty()) throw DomainError("dataset is empty");
    return records.back().year;
}

bool Dataset::gap_free() const noexcept {
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i].year != records[i - 1].year + 1) return false;
    }
    return true;
}

bool Dataset::has_floor_area() const noexcept {
    return !records.empty() &&
           std::all_of(records.begin(), records.end(), [](const auto& r) { return r.floor_area.has_value(); });
}

std::string energy_column(EndUse u) { return "energy_" + std::string(to_string(u)); }
std::string emissions_column(EndUse u) { return "emis_" + std::string(to_string(u)); }

void validate_record(const YearRecord& r, std::optional<std::size_t> row) {
    require_positive(r.population, row, "population");
    require_positive(r.households, row, "households");
    require_positive(r.gdp, row, "gdp");
    require_positive(r.hce, row, "hce");
    if (r.floor_area) require_positive(*r.floor_area, row, "floor_area");
    for (EndUse u : kAllEndUses) {
        const double e = r.energy[u];
        const double c = r.emissions[u];
        if (!(e >= 0.0) || !std::isfinite(e)) {
            const auto col = energy_column(u);
            throw ValidationError(row, col,
                                  at_row(row) + "column '" + col + "' must be nonnegative, got " + fmt_number(e));
        }
        if (!(c >= 0.0) || !std::isfinite(c)) {
            const auto col = emissions_column(u);
            throw ValidationError(row, col,
                                  at_row(row) + "column '" + col + "' must be nonnegative, got " + fmt_number(c));
        }
        if (c > 0.0 && e == 0.0) {
            const auto col = emissions_column(u);
            throw ValidationError(row, col,
                                  at_row(row) + "column '" + col + "' is positive while '" + energy_column(u) +
                                      "' is zero");
        }
    }
}

EndUseSet infer_active_uses(std::span<const YearRecord> records) {
    EndUseSet active;
    for (const auto& r : records) {
        for (EndUse u : kAllEndUses) {
            if (r.energy[u] > 0.0) active.insert(u);
        }
    }
    return active;
}

Dataset make_dataset(std::string country, std::vector<YearRecord> records, UnitConfig units) {
    for (const auto& r : records) validate_record(r);
    sort_and_check_years(records, nullptr);
    Dataset ds;
    ds.country = std::move(country);
    ds.active_uses = infer_active_uses(records);
    ds.records = std::move(records);
    ds.units = std::move(units);
    if (ds.active_uses.empty()) throw ValidationError(std::nullopt, "", "no end use has nonzero energy");
    return ds;
}

Dataset load_dataset(std::istream& source, const UnitConfig& units, std::string country) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string_view> header;
    std::string header_line;

    while (std::getline(source, line)) {
        ++line_no;
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        header_line = std::string(t);
        header = split(header_line);
        break;
    }
    if (header.empty()) throw SchemaError("", "dataset is empty: no header row");

    std::map<std::string_view, std::size_t> position;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const auto name = header[i];
        if (std::find(kCsvColumns.begin(), kCsvColumns.end(), name) == kCsvColumns.end()) {
            throw SchemaError(std::string(name), "unknown column '" + std::string(name) + "'");
        }
        if (!position.emplace(name, i).second) {
            throw SchemaError(std::string(name), "duplicate column '" + std::string(name) + "'");
        }
    }
    for (const auto name : kCsvColumns) {
        if (!position.contains(name)) {
            throw SchemaError(std::string(name), "missing column '" + std::string(name) + "'");
        }
    }

    // Resolve every factor before reading data so unit problems surface first.
    std::map<std::string_view, double> factor;
    for (const auto name : kCsvColumns) {
        if (column_dimension(name)) factor[name] = units.factor(name);
    }

    std::vector<YearRecord> records;
    std::vector<std::size_t> rows;
    while (std::getline(source, line)) {
        ++line_no;
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto cells = split(t);
        if (cells.size() != header.size()) {
            throw ParseError(line_no, "",
                             "row " + std::to_string(line_no) + ": expected " + std::to_string(header.size()) +
                                 " cells, found " + std::to_string(cells.size()));
        }
        auto cell = [&](std::string_view name) { return cells[position.at(name)]; };
        auto value = [&](std::string_view name) {
            return parse_double(cell(name), line_no, std::string(name)) * factor.at(name);
        };

        YearRecord r;
        r.year = parse_year(cell("year"), line_no);
        r.population = value("population");
        r.households = value("households");
        r.gdp = value("gdp");
        r.hce = value("hce");
        if (!cell("floor_area").empty()) r.floor_area = value("floor_area");
        for (EndUse u : kAllEndUses) {
            r.energy[u] = value(energy_column(u));
            r.emissions[u] = value(emissions_column(u));
        }
        validate_record(r, line_no);
        records.push_back(r);
        rows.push_back(line_no);
    }
    if (records.empty()) throw ValidationError(std::nullopt, "", "dataset has no data rows");

    sort_and_check_years(records, &rows);
    Dataset ds;
    ds.country = std::move(country);
    ds.active_uses = infer_active_uses(records);
    ds.records = std::move(records);
    ds.units = units;
    if (ds.active_uses.empty()) throw ValidationError(std::nullopt, "", "no end use has nonzero energy");
    return ds;
}

void write_dataset(std::ostream& out, const Dataset& ds) {
    for (std::size_t i = 0; i < kCsvColumns.size(); ++i) {
        if (i) out << ',';
        out << kCsvColumns[i];
    }
    out << '\n';
    for (const auto& r : ds.records) {
        out << r.year << ',' << fmt_number(r.population) << ',' << fmt_number(r.households) << ','
            << fmt_number(r.gdp) << ',' << fmt_number(r.hce) << ',';
        if (r.floor_area) out << fmt_number(*r.floor_area);
        for (EndUse u : kAllEndUses) out << ',' << fmt_number(r.energy[u]);
        for (EndUse u : kAllEndUses) out << ',' << fmt_number(r.emissions[u]);
        out << '\n';
    }
}

Dataset interpolate_years(const Dataset& ds) {
    if (ds.records.size() < 2) {
        throw DomainError("interpolation needs at least two records, dataset has " +
                          std::to_string(ds.records.size()));
    }
    Dataset out = ds;
    out.records.clear();
    for (std::size_t i = 0; i + 1 < ds.records.size(); ++i) {
        const auto& a = ds.records[i];
        const auto& b = ds.records[i + 1];
        out.records.push_back(a);
        const double span = static_cast<double>(b.year - a.year);
        for (int y = a.year + 1; y < b.year; ++y) {
            const double t = static_cast<double>(y - a.year) / span;
            auto lerp = [t](double x0, double x1) { return x0 + t * (x1 - x0); };
            YearRecord r;
            r.year = y;
            r.population = lerp(a.population, b.population);
            r.households = lerp(a.households, b.households);
            r.gdp = lerp(a.gdp, b.gdp);
            r.hce = lerp(a.hce, b.hce);
            if (a.floor_area && b.floor_area) r.floor_area = lerp(*a.floor_area, *b.floor_area);
            for (EndUse u : kAllEndUses) {
                r.energy[u] = lerp(a.energy[u], b.energy[u]);
                r.emissions[u] = lerp(a.emissions[u], b.emissions[u]);
            }
            try {
                validate_record(r);
            } catch (const ValidationError& ex) {
                throw ValidationError(std::nullopt, ex.column(),
                                      "interpolated year " + std::to_string(y) + ": " + ex.what());
            }
            out.records.push_back(r);
        }
    }
    out.records.push_back(ds.records.back());
    return out;
}

}  // namespace dsd
