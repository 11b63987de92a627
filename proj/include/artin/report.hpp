#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/arith.hpp"

namespace artin {

/// One row of CLI output; which fields are present depends on the query
/// kind. Doubles round-trip exactly through the JSON encoding.
struct ReportRecord {
    std::string kind; // "density" | "series" | "census" | "census_total" | "shift"
    i64 g = 0;
    u64 m = 1;
    std::optional<u64> a;
    std::optional<i64> b;
    std::optional<u64> x;
    std::optional<u64> bound;          // tail bound / max_k / prime bound
    std::optional<std::string> q;      // exact rational, "num/den"
    std::optional<double> lo, hi;      // numeric enclosure
    std::optional<u64> observed;
    std::optional<double> predicted;
    std::optional<double> normalized_error;
    std::optional<bool> overlap;       // dual-oracle verdict
    std::optional<double> ratio;

    bool operator==(const ReportRecord&) const = default;
};

std::string to_json_string(const std::vector<ReportRecord>& records);
std::vector<ReportRecord> from_json_string(const std::string& text);

/// Human-readable table; one line per record.
std::string to_table(const std::vector<ReportRecord>& records);

} // namespace artin
