#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "artin/report.hpp"

using namespace artin;

namespace {

std::vector<ReportRecord> sample_records() {
    ReportRecord density;
    density.kind = "density";
    density.g = -8;
    density.m = 12;
    density.a = 7;
    density.q = "3/5";
    density.lo = 0.224373488171;
    density.hi = 0.224373488236;
    density.predicted = 0.2243734882;

    ReportRecord series;
    series.kind = "series";
    series.g = 2;
    series.m = 5;
    series.a = 2;
    series.bound = 100000;
    series.lo = 0.19678123;
    series.hi = 0.19700001;
    series.overlap = true;

    ReportRecord census;
    census.kind = "census";
    census.g = 2;
    census.m = 5;
    census.a = 3;
    census.x = 10'000'000;
    census.observed = 62170;
    census.predicted = 61033.25;
    census.normalized_error = 0.31;

    ReportRecord shift;
    shift.kind = "shift";
    shift.g = 2;
    shift.a = 1;
    shift.b = -1;
    shift.x = 1000000;
    shift.bound = 100000;
    shift.q = "1/2";
    shift.lo = 0.1455;
    shift.hi = 0.1456;
    shift.observed = 11223;
    shift.ratio = 1.0717;

    return {density, series, census, shift};
}

} // namespace

TEST_CASE("records round-trip through JSON exactly") {
    std::vector<ReportRecord> records = sample_records();
    CHECK(from_json_string(to_json_string(records)) == records);

    // doubles with full precision survive
    ReportRecord r;
    r.kind = "density";
    r.g = 2;
    r.lo = 0.1 + 0.2;
    r.hi = 1.0 / 3.0;
    r.predicted = 6.02214076e23;
    std::vector<ReportRecord> one{r};
    CHECK(from_json_string(to_json_string(one)) == one);
}

TEST_CASE("table output mentions every populated field") {
    std::string table = to_table(sample_records());
    CHECK(table.find("density") != std::string::npos);
    CHECK(table.find("q=3/5") != std::string::npos);
    CHECK(table.find("overlap=true") != std::string::npos);
    CHECK(table.find("observed=62170") != std::string::npos);
    CHECK(std::count(table.begin(), table.end(), '\n') == 4);
}
