#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "lgid/catalog.hpp"

namespace lgid {

inline constexpr const char* kReportVersion = "1.0.0";

struct Summary {
    int pass = 0, fail = 0, inconclusive = 0, expected_mismatch = 0;
    bool operator==(const Summary&) const = default;
};

Summary summarize(const std::vector<Verdict>& verdicts);

struct Report {
    std::string version = kReportVersion;
    std::string timestamp;  // ISO 8601 UTC
    Summary summary;
    std::vector<Verdict> verdicts;
    double wall_time_seconds = 0.0;
};

Report make_report(std::vector<Verdict> verdicts, double wall_time_seconds);
std::string utc_timestamp();

// "<eq_tag> <params> lhs=<v>±<e> rhs=<v>±<e> resid=<r> <STATUS>", 15 significant digits
std::string format_text_line(const Verdict& v);
std::string to_text(const std::vector<Verdict>& verdicts);
std::string to_csv(const std::vector<Verdict>& verdicts);

// Non-finite numbers are written as null and read back as NaN.
nlohmann::ordered_json to_json(const Report& r);
Report report_from_json(const nlohmann::ordered_json& j);
std::string dump_json(const Report& r);

}  // namespace lgid
