// Command-line front end: verify catalog identities, adjudicate competing
// closed forms, list identity ids.

#include <chrono>
#include <cmath>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lgid/catalog.hpp"
#include "lgid/errors.hpp"
#include "lgid/report.hpp"

namespace {

constexpr const char* kGrammar =
    "usage:\n"
    "  lgid verify (--all | --id ID... | --filter KEY=VALUE...) [--tol T] [--format text|json|csv]\n"
    "              [--params NAME=VALUES...] [--jobs N]\n"
    "  lgid adjudicate GROUP [--format text|json]\n"
    "  lgid list | lgid --list\n"
    "filter keys: id, section, kind, expected, eq_tag (repeated key: any value; distinct keys: all)\n"
    "VALUES: comma list of numbers and integer ranges LO..HI, e.g. k=1..3 or a=0.25,0.5\n";

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_values(const std::string& s) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        start = comma == std::string::npos ? s.size() + 1 : comma + 1;
        try {
            if (auto dots = item.find(".."); dots != std::string::npos) {
                std::size_t used = 0;
                double lo = std::stod(item.substr(0, dots), &used);
                if (used != dots) throw usage_error("bad range");
                std::string hs = item.substr(dots + 2);
                double hi = std::stod(hs, &used);
                if (used != hs.size() || lo != std::floor(lo) || hi != std::floor(hi) || lo > hi || hi - lo > 1e6)
                    throw usage_error("bad range");
                for (double v = lo; v <= hi; v += 1.0) out.push_back(v);
            } else {
                std::size_t used = 0;
                double v = std::stod(item, &used);
                if (used != item.size()) throw usage_error("bad number");
                out.push_back(v);
            }
        } catch (const std::exception&) {
            throw usage_error("invalid parameter values '" + s + "'");
        }
    }
    return out;
}

std::map<std::string, std::vector<double>> parse_overrides(const std::vector<std::string>& items) {
    std::map<std::string, std::vector<double>> out;
    for (const auto& it : items) {
        auto eq = it.find('=');
        if (eq == std::string::npos || eq == 0) throw usage_error("--params expects NAME=VALUES, got '" + it + "'");
        out[it.substr(0, eq)] = parse_values(it.substr(eq + 1));
    }
    return out;
}

int run_verify(bool all, const std::vector<std::string>& ids, const std::vector<std::string>& filters, double tol,
               const std::string& format, const std::vector<std::string>& params, int jobs) {
    const lgid::Catalog& cat = lgid::Catalog::builtin();
    if (!all && ids.empty() && filters.empty()) throw usage_error("verify needs --all, --id or --filter");
    if (all && (!ids.empty() || !filters.empty())) throw usage_error("--all cannot be combined with --id or --filter");
    lgid::SuiteOptions opt;
    std::vector<std::string> terms = filters;
    for (const auto& id : ids) {
        if (!cat.contains(id)) throw usage_error("unknown identity id '" + id + "'");
        terms.push_back("id=" + id);
    }
    try {
        opt.filter = lgid::Filter::parse(terms);
    } catch (const lgid::argument_error& e) {
        throw usage_error(e.what());
    }
    opt.overrides = parse_overrides(params);
    if (tol > 0.0) opt.eval.tol = tol;
    opt.jobs = jobs;

    auto t0 = std::chrono::steady_clock::now();
    lgid::SuiteResult res = lgid::run_suite(cat, opt);
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& s : res.skipped) std::cerr << "skipped (outside domain): " << s << "\n";

    lgid::Report rep = lgid::make_report(std::move(res.verdicts), wall);
    if (format == "json") {
        std::cout << lgid::dump_json(rep);
    } else if (format == "csv") {
        std::cout << lgid::to_csv(rep.verdicts);
    } else {
        std::cout << lgid::to_text(rep.verdicts);
        std::cerr << "summary pass=" << rep.summary.pass << " fail=" << rep.summary.fail
                  << " inconclusive=" << rep.summary.inconclusive << " expected_mismatch=" << rep.summary.expected_mismatch
                  << " wall_time_seconds=" << wall << "\n";
    }
    bool clean = rep.summary.expected_mismatch == 0 && rep.summary.inconclusive == 0;
    return clean ? 0 : 1;
}

int run_adjudicate(const std::string& group, const std::string& format) {
    lgid::Adjudication a;
    try {
        a = lgid::adjudicate(group);
    } catch (const lgid::unknown_id& e) {
        throw usage_error(std::string(e.what()) + "; groups: alt-ci-pi, dup-check, gr-6443-5, gr-6467-1, gr-6467-2");
    }
    if (format == "json") {
        nlohmann::ordered_json j;
        j["group"] = a.group_id;
        j["oracle"] = a.oracle.value;
        j["oracle_err"] = a.oracle.err_bound;
        j["tol"] = a.tol;
        nlohmann::ordered_json c = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < a.candidates.size(); ++i)
            c.push_back({{"id", a.candidates[i]}, {"value", a.candidate_values[i].value}, {"margin", a.margins[i]}});
        j["candidates"] = c;
        j["winner"] = a.resolved() ? nlohmann::ordered_json(a.winner) : nlohmann::ordered_json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%.15g", a.oracle.value);
        std::cout << "group " << a.group_id << " oracle=" << buf << "\n";
        for (std::size_t i = 0; i < a.candidates.size(); ++i) {
            std::snprintf(buf, sizeof buf, " value=%.15g margin=%.3g", a.candidate_values[i].value, a.margins[i]);
            std::cout << "  " << a.candidates[i] << buf << "\n";
        }
        std::cout << (a.resolved() ? "winner " + a.winner : std::string("tie")) << "\n";
    }
    return a.resolved() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification harness for log-gamma integral and series identities"};
    app.require_subcommand(0, 1);
    bool list_flag = false;
    app.add_flag("--list", list_flag, "List identity ids");

    auto* verify = app.add_subcommand("verify", "Evaluate identities and report verdicts");
    bool all = false;
    std::vector<std::string> ids, filters, params;
    double tol = 0.0;
    std::string format = "text";
    int jobs = 0;
    verify->add_flag("--all", all, "Every catalog entry");
    verify->add_option("--id", ids, "Identity id (repeatable)");
    verify->add_option("--filter", filters, "KEY=VALUE filter term (repeatable)");
    verify->add_option("--tol", tol, "Override the entry tolerances")->check(CLI::PositiveNumber);
    verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    verify->add_option("--params", params, "NAME=VALUES sample override (repeatable)");
    verify->add_option("--jobs", jobs, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);

    auto* adj = app.add_subcommand("adjudicate", "Decide between competing closed forms");
    std::string group, adj_format = "text";
    adj->add_option("group", group, "Adjudication group")->required();
    adj->add_option("--format", adj_format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto* list = app.add_subcommand("list", "List identity ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << kGrammar;
        return 2;
    }

    try {
        if (list_flag || list->parsed()) {
            for (const auto& id : lgid::Catalog::builtin().sorted_ids()) std::cout << id << "\n";
            return 0;
        }
        if (verify->parsed()) return run_verify(all, ids, filters, tol, format, params, jobs);
        if (adj->parsed()) return run_adjudicate(group, adj_format);
        std::cerr << "error: no command given\n" << kGrammar;
        return 2;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n" << kGrammar;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
