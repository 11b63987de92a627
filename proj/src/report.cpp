#include "artin/report.hpp"

#include <sstream>
#include <vector>

#include <json.hpp>

namespace artin {

namespace {

using nlohmann::json;

template <typename T>
void put(json& j, const char* key, const std::optional<T>& v) {
    if (v.has_value()) j[key] = *v;
}

template <typename T>
void get(const json& j, const char* key, std::optional<T>& v) {
    if (j.contains(key)) v = j.at(key).get<T>();
}

json record_to_json(const ReportRecord& r) {
    json j;
    j["kind"] = r.kind;
    j["g"] = r.g;
    j["m"] = r.m;
    put(j, "a", r.a);
    put(j, "b", r.b);
    put(j, "x", r.x);
    put(j, "bound", r.bound);
    put(j, "q", r.q);
    put(j, "lo", r.lo);
    put(j, "hi", r.hi);
    put(j, "observed", r.observed);
    put(j, "predicted", r.predicted);
    put(j, "normalized_error", r.normalized_error);
    put(j, "overlap", r.overlap);
    put(j, "ratio", r.ratio);
    return j;
}

ReportRecord record_from_json(const json& j) {
    ReportRecord r;
    r.kind = j.at("kind").get<std::string>();
    r.g = j.at("g").get<i64>();
    r.m = j.at("m").get<u64>();
    get(j, "a", r.a);
    get(j, "b", r.b);
    get(j, "x", r.x);
    get(j, "bound", r.bound);
    get(j, "q", r.q);
    get(j, "lo", r.lo);
    get(j, "hi", r.hi);
    get(j, "observed", r.observed);
    get(j, "predicted", r.predicted);
    get(j, "normalized_error", r.normalized_error);
    get(j, "overlap", r.overlap);
    get(j, "ratio", r.ratio);
    return r;
}

void append_num(std::ostringstream& out, const char* name, double v) {
    out << "  " << name << "=";
    out.precision(12);
    out << v;
}

} // namespace

std::string to_json_string(const std::vector<ReportRecord>& records) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(record_to_json(r));
    return arr.dump(2);
}

std::vector<ReportRecord> from_json_string(const std::string& text) {
    json arr = json::parse(text);
    std::vector<ReportRecord> out;
    for (const auto& j : arr) out.push_back(record_from_json(j));
    return out;
}

std::string to_table(const std::vector<ReportRecord>& records) {
    std::ostringstream out;
    for (const auto& r : records) {
        out << r.kind << "  g=" << r.g << " m=" << r.m;
        if (r.a) out << " a=" << *r.a;
        if (r.b) out << " b=" << *r.b;
        if (r.x) out << " x=" << *r.x;
        if (r.bound) out << " bound=" << *r.bound;
        if (r.q) out << "  q=" << *r.q;
        if (r.lo && r.hi) {
            append_num(out, "lo", *r.lo);
            append_num(out, "hi", *r.hi);
        }
        if (r.observed) out << "  observed=" << *r.observed;
        if (r.predicted) append_num(out, "predicted", *r.predicted);
        if (r.normalized_error) append_num(out, "err", *r.normalized_error);
        if (r.overlap) out << "  overlap=" << (*r.overlap ? "true" : "false");
        if (r.ratio) append_num(out, "ratio", *r.ratio);
        out << '\n';
    }
    return out.str();
}

} // namespace artin
