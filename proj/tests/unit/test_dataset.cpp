#include "generators.hpp"

#include <dsd/dataset.hpp>
#include <dsd/error.hpp>
#include <dsd/fixtures.hpp>

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace dsd;

namespace {

std::string data_path(const std::string& name) { return std::string(DSD_TEST_DATA_DIR) + "/" + name; }

std::string header() {
    std::string h;
    for (auto c : kCsvColumns) h += (h.empty() ? "" : ",") + std::string(c);
    return h;
}

const char* kRow2000 = "2000,100,40,500,200,,2,3,1,1,1,2,2,3,1,1,1,2";

}  // namespace

TEST_CASE("well-formed 21-year file loads with inferred active uses") {
    const auto source = fixtures::india_like();
    std::stringstream csv;
    write_dataset(csv, source);
    const auto ds = load_dataset(csv, UnitConfig::base());
    CHECK(ds.records.size() == 21);
    CHECK(ds.first_year() == 2000);
    CHECK(ds.last_year() == 2020);
    CHECK(ds.active_uses.size() == 5);
    CHECK_FALSE(ds.active_uses.contains(EndUse::SpaceHeating));
}

TEST_CASE("sample file is normalized to base units") {
    std::ifstream in(data_path("sample.csv"));
    const auto ds = load_dataset(in, UnitConfig::from_file(data_path("sample_units.json")));
    REQUIRE(ds.records.size() == 4);
    const auto& r = ds.at(2000);
    CHECK(r.population == 1000e6);
    CHECK(r.households == 250e6);
    CHECK(r.gdp == doctest::Approx(2000e3));
    CHECK(*r.floor_area == 20000e6);
    CHECK(r.energy[EndUse::Cooking] == doctest::Approx(60 * 29.3076));
    CHECK(r.emissions[EndUse::Cooking] == doctest::Approx(90e3));
    CHECK_FALSE(ds.gap_free());
}

TEST_CASE("schema errors name the column") {
    std::ifstream in(data_path("missing_households.csv"));
    try {
        load_dataset(in, UnitConfig::base());
        FAIL("expected a schema error");
    } catch (const SchemaError& ex) {
        CHECK(ex.column() == "households");
        CHECK(std::string(ex.what()).find("households") != std::string::npos);
    }

    std::istringstream extra(header() + ",colour\n");
    CHECK_THROWS_AS(load_dataset(extra, UnitConfig::base()), SchemaError);
}

TEST_CASE("negative population is a validation error citing the row") {
    std::istringstream in(header() + "\n" + kRow2000 + "\n2001,-5,40,500,200,,2,3,1,1,1,2,2,3,1,1,1,2\n");
    try {
        load_dataset(in, UnitConfig::base());
        FAIL("expected a validation error");
    } catch (const ValidationError& ex) {
        CHECK(ex.row() == 3);
        CHECK(ex.column() == "population");
    }
}

TEST_CASE("parse errors identify row and cell") {
    std::istringstream in(header() + "\n" + "2000,100,40,abc,200,,2,3,1,1,1,2,2,3,1,1,1,2\n");
    try {
        load_dataset(in, UnitConfig::base());
        FAIL("expected a parse error");
    } catch (const ParseError& ex) {
        CHECK(ex.row() == 2);
        CHECK(ex.column() == "gdp");
    }
}

TEST_CASE("record invariants") {
    std::istringstream emissions_without_energy(header() + "\n2000,100,40,500,200,,0,3,1,1,1,2,2,3,1,1,1,2\n");
    CHECK_THROWS_AS(load_dataset(emissions_without_energy, UnitConfig::base()), ValidationError);

    std::istringstream duplicate(header() + "\n" + kRow2000 + "\n" + kRow2000 + "\n");
    CHECK_THROWS_AS(load_dataset(duplicate, UnitConfig::base()), ValidationError);

    std::istringstream undeclared(header() + "\n" + kRow2000 + "\n");
    CHECK_THROWS_AS(load_dataset(undeclared, UnitConfig{}), UnitError);
}

TEST_CASE("interpolation fills interior gaps linearly") {
    YearRecord a;
    a.year = 2000;
    a.population = 100;
    a.households = 40;
    a.gdp = 500;
    a.hce = 200;
    a.energy[EndUse::Cooking] = 10;
    a.emissions[EndUse::Cooking] = 5;
    YearRecord b = a;
    b.year = 2002;
    b.population = 200;
    b.energy[EndUse::Cooking] = 20;
    b.floor_area = 1000.0;

    const auto ds = interpolate_years(make_dataset("t", {a, b}));
    REQUIRE(ds.records.size() == 3);
    CHECK(ds.at(2001).population == 150);
    CHECK(ds.at(2001).energy[EndUse::Cooking] == 15);
    CHECK_FALSE(ds.at(2001).floor_area);  // only one neighbour has it
    CHECK(ds.at(2000) == a);
    CHECK(ds.at(2002) == b);

    const auto full = fixtures::smooth();
    CHECK(interpolate_years(full).records == full.records);

    CHECK_THROWS_AS(interpolate_years(make_dataset("t", {a})), DomainError);
}

TEST_CASE("normalized datasets round-trip bit for bit") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        const auto ds = testing::random_dataset(rng, {.years = 6, .zero_year_probability = 0.1});
        std::stringstream csv;
        write_dataset(csv, ds);
        const auto back = load_dataset(csv, UnitConfig::base());
        REQUIRE(back.records == ds.records);
        CHECK(back.active_uses == ds.active_uses);
    }
}
