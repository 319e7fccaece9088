#include "lgid/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>

#include "lgid/errors.hpp"

namespace lgid {

namespace {

using ojson = nlohmann::ordered_json;

std::string g15(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

ojson number_or_null(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

double number_from(const ojson& j) {
    if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
    if (!j.is_number()) throw argument_error("report: expected a number");
    return j.get<double>();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

Summary summarize(const std::vector<Verdict>& verdicts) {
    Summary s;
    for (const auto& v : verdicts) {
        switch (v.status) {
            case Status::pass: ++s.pass; break;
            case Status::fail: ++s.fail; break;
            case Status::inconclusive: ++s.inconclusive; break;
        }
        if (is_expected_mismatch(v)) ++s.expected_mismatch;
    }
    return s;
}

std::string utc_timestamp() {
    std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Report make_report(std::vector<Verdict> verdicts, double wall_time_seconds) {
    Report r;
    r.timestamp = utc_timestamp();
    r.summary = summarize(verdicts);
    r.verdicts = std::move(verdicts);
    r.wall_time_seconds = wall_time_seconds;
    return r;
}

std::string format_text_line(const Verdict& v) {
    return v.eq_tag + " " + format_params(v.params) + " lhs=" + g15(v.lhs.value) + "±" + g15(v.lhs.err_bound) +
           " rhs=" + g15(v.rhs.value) + "±" + g15(v.rhs.err_bound) + " resid=" + g15(v.residual) + " " +
           to_string(v.status);
}

std::string to_text(const std::vector<Verdict>& verdicts) {
    std::string out;
    for (const auto& v : verdicts) {
        out += format_text_line(v) + "\n";
        if (!v.diagnostic.empty()) out += "  note [" + v.entry_id + "]: " + v.diagnostic + "\n";
    }
    return out;
}

std::string to_csv(const std::vector<Verdict>& verdicts) {
    std::string out = "entry_id,eq_tag,params,lhs,lhs_err,rhs,rhs_err,residual,status\n";
    for (const auto& v : verdicts) {
        out += csv_field(v.entry_id) + "," + csv_field(v.eq_tag) + "," + csv_field(format_params(v.params)) + "," +
               g15(v.lhs.value) + "," + g15(v.lhs.err_bound) + "," + g15(v.rhs.value) + "," + g15(v.rhs.err_bound) + "," +
               g15(v.residual) + "," + to_string(v.status) + "\n";
    }
    return out;
}

nlohmann::ordered_json to_json(const Report& r) {
    ojson j;
    j["version"] = r.version;
    j["timestamp"] = r.timestamp;
    j["summary"] = {{"pass", r.summary.pass},
                    {"fail", r.summary.fail},
                    {"inconclusive", r.summary.inconclusive},
                    {"expected_mismatch", r.summary.expected_mismatch}};
    ojson arr = ojson::array();
    for (const auto& v : r.verdicts) {
        ojson e;
        e["entry_id"] = v.entry_id;
        e["eq_tag"] = v.eq_tag;
        e["params"] = format_params(v.params);
        e["lhs"] = number_or_null(v.lhs.value);
        e["lhs_err"] = number_or_null(v.lhs.err_bound);
        e["rhs"] = number_or_null(v.rhs.value);
        e["rhs_err"] = number_or_null(v.rhs.err_bound);
        e["residual"] = number_or_null(v.residual);
        e["tol"] = v.tol;
        e["status"] = to_string(v.status);
        e["expected"] = to_string(v.expected);
        e["diagnostic"] = v.diagnostic;
        arr.push_back(std::move(e));
    }
    j["verdicts"] = std::move(arr);
    j["wall_time_seconds"] = r.wall_time_seconds;
    return j;
}

Report report_from_json(const nlohmann::ordered_json& j) {
    try {
        Report r;
        r.version = j.at("version").get<std::string>();
        r.timestamp = j.at("timestamp").get<std::string>();
        const auto& s = j.at("summary");
        r.summary = {s.at("pass").get<int>(), s.at("fail").get<int>(), s.at("inconclusive").get<int>(),
                     s.at("expected_mismatch").get<int>()};
        for (const auto& e : j.at("verdicts")) {
            Verdict v;
            v.entry_id = e.at("entry_id").get<std::string>();
            v.eq_tag = e.at("eq_tag").get<std::string>();
            v.params = parse_params(e.at("params").get<std::string>());
            v.lhs = {number_from(e.at("lhs")), number_from(e.at("lhs_err"))};
            v.rhs = {number_from(e.at("rhs")), number_from(e.at("rhs_err"))};
            v.residual = number_from(e.at("residual"));
            v.tol = number_from(e.at("tol"));
            v.status = parse_status(e.at("status").get<std::string>());
            v.expected = parse_expected(e.at("expected").get<std::string>());
            v.diagnostic = e.at("diagnostic").get<std::string>();
            r.verdicts.push_back(std::move(v));
        }
        r.wall_time_seconds = number_from(j.at("wall_time_seconds"));
        return r;
    } catch (const nlohmann::json::exception& ex) {
        throw argument_error(std::string("report: ") + ex.what());
    }
}

std::string dump_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace lgid
