// Catalog parsing, verdict rules, suite selection and ordering, report
// serialization, cross-route consistency and coverage of the built-in table.

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lgid/catalog.hpp"
#include "lgid/errors.hpp"
#include "lgid/quadrature.hpp"
#include "lgid/report.hpp"
#include "lgid/specfun.hpp"

using namespace lgid;

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;

RecipeRegistry toy_recipes() {
    RecipeRegistry r;
    r["one"] = {[](const ParamPoint&) { return ValueWithError{1.0, 0.0}; },
                [](const ParamPoint&) { return ValueWithError{1.0, 0.0}; }};
    r["two"] = {[](const ParamPoint& p) { return ValueWithError{param(p, "k") * 2, 0.0}; },
                [](const ParamPoint& p) { return ValueWithError{param(p, "k") + param(p, "k"), 0.0}; }};
    return r;
}

const char* kToy =
    "# comment\n"
    "version 1\n"
    "\n"
    "one | SERIES_EQ_CLOSED | 2.10 | - | EXPECT_PASS | 1e-9\n"
    "two | INTEGRAL_EQ_CLOSED | 2.9 | k:int[1,inf)=1..3 | EXPECT_PASS | 1e-9\n";

void check_parse_error(const std::string& text, const std::string& fragment) {
    CAPTURE(text);
    try {
        Catalog::parse(text, toy_recipes());
        FAIL("expected a parse error");
    } catch (const argument_error& e) {
        CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
}

const SuiteResult& full_suite() {
    static const SuiteResult r = run_suite(Catalog::builtin(), {});
    return r;
}

SuiteResult filtered(const std::vector<std::string>& terms) {
    SuiteOptions o;
    o.filter = Filter::parse(terms);
    return run_suite(Catalog::builtin(), o);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') cur += '"', ++i;
            else if (c == '"') quoted = false;
            else cur += c;
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("parse a small table") {
    Catalog c = Catalog::parse(kToy, toy_recipes());
    CHECK(c.version() == 1);
    REQUIRE(c.entries().size() == 2);
    const IdentityEntry& two = c.find("two");
    CHECK(two.kind == Kind::integral_eq_closed);
    CHECK(two.sample_points().size() == 3);
    CHECK(two.section() == "2");
    CHECK(c.sorted_ids() == std::vector<std::string>{"one", "two"});
    CHECK_THROWS_AS(c.find("three"), unknown_id);
    // eq_tag 2.9 sorts before 2.10
    SuiteResult r = run_suite(c, {});
    REQUIRE(r.verdicts.size() == 4);
    CHECK(r.verdicts.front().eq_tag == "2.9");
    CHECK(r.verdicts.back().eq_tag == "2.10");
}

TEST_CASE("parse errors") {
    check_parse_error("one | SERIES_EQ_CLOSED | 1 | - | EXPECT_PASS | 1e-9\n", "version");
    check_parse_error("version 1\none | SERIES_EQ_CLOSED | 1 | - | EXPECT_PASS\n", "line 2");
    check_parse_error("version 1\none | SERIES | 1 | - | EXPECT_PASS | 1e-9\n", "kind");
    check_parse_error("version 1\none | SERIES_EQ_CLOSED | 1 | - | MAYBE | 1e-9\n", "expectation");
    check_parse_error("version 1\none | SERIES_EQ_CLOSED | 1 | - | EXPECT_PASS | -1\n", "tolerance");
    check_parse_error("version 1\none | SERIES_EQ_CLOSED | 1 | - | EXPECT_PASS | 1e-9\none | SERIES_EQ_CLOSED | 1 | - | "
                      "EXPECT_PASS | 1e-9\n",
                      "duplicate");
    check_parse_error("version 1\nthree | SERIES_EQ_CLOSED | 1 | - | EXPECT_PASS | 1e-9\n", "no recipe");
    check_parse_error("version 1\ntwo | SERIES_EQ_CLOSED | 1 | k:int[1,inf)=0..2 | EXPECT_PASS | 1e-9\n", "outside");
    check_parse_error("version 1\ntwo | SERIES_EQ_CLOSED | 1 | k:bogus=1 | EXPECT_PASS | 1e-9\n", "domain");
    check_parse_error("version 1\ntwo | SERIES_EQ_CLOSED | 1 | k:int[1,inf)=1..x | EXPECT_PASS | 1e-9\n", "invalid");
    check_parse_error("version 1\ntwo | SERIES_EQ_CLOSED | 1 | k:real(0,4)!even=2 | EXPECT_PASS | 1e-9\n", "outside");
}

TEST_CASE("parameter domains") {
    const IdentityEntry& e = Catalog::builtin().find("eq-2.9");
    REQUIRE(e.params.size() == 1);
    const ParamDomain& d = e.params[0].domain;
    CHECK(d.contains(0.3));
    CHECK_FALSE(d.contains(2.0));
    CHECK_FALSE(d.contains(0.0));
    CHECK(d.contains(3.0));
    for (const auto& entry : Catalog::builtin().entries())
        for (const auto& spec : entry.params)
            for (double v : spec.samples) {
                CAPTURE(entry.id);
                CHECK(spec.domain.contains(v));
            }
}

TEST_CASE("params formatting") {
    ParamPoint p{{"a", 0.5}, {"k", 1.0}};
    CHECK(format_params(p) == "a=0.5,k=1");
    CHECK(format_params({}) == "-");
    CHECK(parse_params("a=0.5,k=1") == p);
    CHECK(parse_params("-").empty());
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(0.1) == "0.1");
    CHECK_THROWS_AS(parse_params("a"), argument_error);
}

TEST_CASE("verdict rule") {
    CHECK(classify(1e-10, 1e-9, 0.0) == Status::pass);
    CHECK(classify(5e-9, 1e-9, 1e-9) == Status::pass);
    CHECK(classify(2e-9, 1e-9, 1e-12) == Status::inconclusive);
    CHECK(classify(2e-6, 1e-9, 1e-12) == Status::fail);
    CHECK(classify(5e-5, 1e-9, 1e-6) == Status::inconclusive);
    CHECK(classify(NAN, 1e-9, 0.0) == Status::inconclusive);
    Verdict v;
    v.expected = Expected::expect_pass;
    v.status = Status::fail;
    CHECK(is_expected_mismatch(v));
    v.expected = Expected::known_erratum;
    CHECK_FALSE(is_expected_mismatch(v));
    v.status = Status::pass;
    CHECK(is_expected_mismatch(v));
    v.expected = Expected::adjudicate;
    v.status = Status::fail;
    CHECK_FALSE(is_expected_mismatch(v));
}

TEST_CASE("eq_tag order") {
    CHECK(eq_tag_less("1.9", "1.10"));
    CHECK(eq_tag_less("1.9.2", "1.10"));
    CHECK(eq_tag_less("1.10", "1.10.3"));
    CHECK(eq_tag_less("5.10", "5.euler"));
    CHECK(eq_tag_less("6.8", "A.3"));
    CHECK(eq_tag_less("B.2", "B.10"));
    CHECK_FALSE(eq_tag_less("2.11", "2.11"));
}

TEST_CASE("evaluate_identity examples") {
    Verdict raabe = evaluate_identity("raabe", {});
    CHECK(raabe.status == Status::pass);
    CHECK(std::fabs(raabe.residual) <= 1e-10);
    Verdict f = evaluate_identity("fourier-cos-2k", {{"k", 3.0}});
    CHECK(f.status == Status::pass);
    CHECK(std::fabs(f.lhs.value - 1.0 / 12) < 1e-10);
    Verdict gr = evaluate_identity("gr-6443-5-original", {{"a", 0.5}, {"k", 1.0}});
    CHECK(gr.status == Status::fail);
    CHECK(std::fabs(gr.residual) > 1e-3);
    CHECK_THROWS_AS(evaluate_identity("no-such-id", {}), unknown_id);
    CHECK_THROWS_AS(evaluate_identity("eq-1.1", {{"a", -1.0}, {"k", 1.0}}), domain_error);
    CHECK_THROWS_AS(evaluate_identity("eq-1.1", {{"a", 0.5}}), argument_error);
}

TEST_CASE("evaluation failures become inconclusive") {
    RecipeRegistry r = toy_recipes();
    r["one"].rhs = [](const ParamPoint&) -> ValueWithError { throw convergence_error("did not converge"); };
    Catalog c = Catalog::parse(kToy, r);
    Verdict v = evaluate_identity(c, "one", {});
    CHECK(v.status == Status::inconclusive);
    CHECK(std::isnan(v.residual));
    CHECK(v.diagnostic.find("did not converge") != std::string::npos);
}

TEST_CASE("pointwise evaluation") {
    auto k = evaluate_pointwise("eq-3.11", {0.1, 0.3, 0.5, 0.7, 0.9});
    REQUIRE(k.size() == 5);
    for (const auto& v : k) CHECK(v.status == Status::pass);
    auto n = evaluate_pointwise("eq-1.41.1", {0.25});
    CHECK(n.at(0).status == Status::pass);
    auto b = evaluate_pointwise("eq-1.41", {1.5});
    CHECK(b.at(0).status == Status::pass);
    CHECK_THROWS_AS(evaluate_pointwise("raabe", {0.5}), argument_error);
    CHECK_THROWS_AS(evaluate_pointwise("eq-3.11", {1.5}), domain_error);
}

TEST_CASE("filters") {
    CHECK_THROWS_AS(Filter::parse({"colour=red"}), argument_error);
    CHECK_THROWS_AS(Filter::parse({"section"}), argument_error);
    CHECK_THROWS_AS(Filter::parse({"kind=NOPE"}), argument_error);
    CHECK_THROWS_AS(Filter::parse({"section="}), argument_error);

    SuiteResult s6 = filtered({"section=6"});
    CHECK(s6.verdicts.size() == 8);
    std::set<std::string> tags;
    for (const auto& v : s6.verdicts) {
        CHECK(v.expected == Expected::expect_pass);
        CHECK(v.status == Status::pass);
        tags.insert(v.eq_tag);
    }
    CHECK(tags == std::set<std::string>{"6.1", "6.2", "6.3", "6.4", "6.5", "6.6", "6.7", "6.8"});
    CHECK(summarize(s6.verdicts).expected_mismatch == 0);

    SuiteResult err = filtered({"expected=KNOWN_ERRATUM"});
    CHECK(err.verdicts.size() == 3);
    for (const auto& v : err.verdicts) {
        CHECK(v.status == Status::fail);
        CHECK(std::fabs(v.residual) >= 1e-3);
    }
    CHECK(summarize(err.verdicts).expected_mismatch == 0);

    // same key: any value; distinct keys: all
    SuiteResult either = filtered({"section=6", "section=A"});
    CHECK(either.verdicts.size() == 9);
    SuiteResult both = filtered({"section=1", "kind=LIMIT_EQ"});
    for (const auto& v : both.verdicts) CHECK((v.entry_id == "eq-1.19" || v.entry_id == "eq-1.20" || v.entry_id == "eq-1.90-limit"));
    CHECK(filtered({"eq_tag=1.1"}).verdicts.size() == 21);
}

TEST_CASE("overrides and skipped points") {
    SuiteOptions o;
    o.filter = Filter::parse({"id=eq-1.9.2"});
    o.overrides["k"] = {7, 8, 0};
    SuiteResult r = run_suite(Catalog::builtin(), o);
    CHECK(r.verdicts.size() == 2);
    for (const auto& v : r.verdicts) CHECK(v.status == Status::pass);
    REQUIRE(r.skipped.size() == 1);
    CHECK(r.skipped[0] == "eq-1.9.2 k=0");
}

TEST_CASE("full suite") {
    const SuiteResult& r = full_suite();
    std::size_t expected_points = 0;
    for (const auto& e : Catalog::builtin().entries()) expected_points += e.sample_points().size();
    CHECK(r.verdicts.size() == expected_points);
    Summary s = summarize(r.verdicts);
    CHECK(s.expected_mismatch == 0);
    CHECK(s.inconclusive == 0);
    CHECK(s.pass + s.fail + s.inconclusive == int(r.verdicts.size()));
    for (const auto& v : r.verdicts) {
        CAPTURE(v.entry_id);
        CAPTURE(format_params(v.params));
        if (v.expected == Expected::expect_pass) CHECK(v.status == Status::pass);
        if (v.expected == Expected::known_erratum) CHECK(v.status == Status::fail);
        CHECK(v.diagnostic.empty());
    }
    CHECK(std::is_sorted(r.verdicts.begin(), r.verdicts.end(), verdict_less));
}

TEST_CASE("parallel and serial suites agree") {
    SuiteOptions o;
    o.jobs = 4;
    SuiteResult par = run_suite(Catalog::builtin(), o);
    SuiteResult ser = run_suite_serial(Catalog::builtin(), {});
    REQUIRE(par.verdicts.size() == ser.verdicts.size());
    for (std::size_t i = 0; i < par.verdicts.size(); ++i) {
        CHECK(par.verdicts[i].entry_id == ser.verdicts[i].entry_id);
        CHECK(par.verdicts[i].params == ser.verdicts[i].params);
        CHECK(par.verdicts[i].lhs.value == ser.verdicts[i].lhs.value);
        CHECK(par.verdicts[i].rhs.value == ser.verdicts[i].rhs.value);
        CHECK(par.verdicts[i].status == ser.verdicts[i].status);
    }
}

TEST_CASE("cross-route consistency for the cosine coefficient") {
    const Catalog& c = Catalog::builtin();
    double via_ci = c.recipe("eq-1.92").rhs({}).value;
    double via_log = c.recipe("eq-4.5.2").rhs({}).value;
    double direct = integrate([](double x) { return log_gamma(x).value * cospi(x); }, 0.0, 1.0).value;
    CHECK(std::fabs(via_ci - via_log) <= 2e-9);
    CHECK(std::fabs(via_ci - direct) <= 2e-9);
    CHECK(std::fabs(via_log - direct) <= 2e-9);
}

TEST_CASE("coverage table") {
    // tag, or tag@name=values when only some parameter values are required
    const std::vector<std::vector<std::string>> groups{
        {"1.1", "1.9", "1.9.2", "1.10", "1.10.3", "1.10.4", "1.11", "1.17@a=0,1", "1.18", "1.22", "1.23.1", "1.26",
         "1.27", "1.28", "1.28.1", "1.29", "1.29.1", "1.29.2", "1.76", "1.77", "1.77.1", "1.78", "1.78.1"},
        {"1.15", "1.19", "1.20", "1.43", "1.44", "1.49", "1.49.1", "1.52", "1.63", "1.64", "1.65", "1.71", "1.72",
         "1.95", "1.96", "1.99", "1.105", "1.106", "1.107", "1.114", "1.115@x=0.5", "1.118", "1.119", "1.121@x=0.3"},
        {"1.103", "1.110", "1.111", "1.112", "1.113", "1.117", "1.119.1"},
        {"2.9", "2.13", "2.14", "2.15", "2.16", "2.21", "2.26", "2.28", "2.29", "2.30", "2.31", "2.32", "2.33",
         "2.36.1", "2.37", "2.38", "2.39", "2.43", "2.44", "2.46", "2.48", "2.51", "2.52", "2.53"},
        {"3.2", "3.3", "3.8", "3.10", "3.11", "3.12", "3.13.1", "3.14", "3.23", "3.24", "3.25", "3.26", "3.27", "3.28",
         "3.29.1", "3.30", "3.32", "3.33", "3.34"},
        {"4.5@p=0.5,1,1.3", "4.5.2", "4.8", "4.9@k=0,1,2", "4.10", "4.12", "4.15", "4.18", "4.20"},
        {"5.5@p=1.3", "5.5.1", "5.6@k=0,1,2", "5.7", "5.8", "5.9", "5.euler"},
        {"6.1@p=1.3", "6.3", "6.4@p=0.3", "6.6@p=0.3", "6.7", "6.8"},
        {"A.3@x=0.4", "B.1", "B.2", "B.7@x=0.3", "B.10", "B.11", "C.2", "C.3", "C.4", "C.6"},
    };
    const std::vector<std::size_t> sizes{23, 24, 7, 24, 19, 9, 7, 6, 10};
    REQUIRE(groups.size() == sizes.size());
    const SuiteResult& r = full_suite();
    for (std::size_t g = 0; g < groups.size(); ++g) {
        CHECK(groups[g].size() == sizes[g]);
        for (const auto& item : groups[g]) {
            CAPTURE(item);
            auto at = item.find('@');
            std::string tag = item.substr(0, at);
            std::vector<std::pair<std::string, double>> need;
            if (at != std::string::npos) {
                std::string rest = item.substr(at + 1);
                std::string name = rest.substr(0, rest.find('='));
                std::stringstream ss(rest.substr(rest.find('=') + 1));
                for (std::string v; std::getline(ss, v, ',');) need.emplace_back(name, std::stod(v));
            }
            std::size_t hits = 0;
            for (const auto& v : r.verdicts) {
                if (v.eq_tag != tag) continue;
                ++hits;
            }
            CHECK(hits > 0);
            for (const auto& [name, value] : need) {
                bool found = false;
                for (const auto& v : r.verdicts)
                    if (v.eq_tag == tag && v.expected != Expected::known_erratum)
                        for (const auto& [n, x] : v.params)
                            if (n == name && x == value) found = true;
                CHECK(found);
            }
        }
    }
}

TEST_CASE("report serialization") {
    SuiteResult s6 = filtered({"section=6"});
    std::vector<Verdict> vs = s6.verdicts;
    Verdict broken;
    broken.entry_id = "x";
    broken.eq_tag = "9.9";
    broken.lhs = {NAN, NAN};
    broken.rhs = {NAN, NAN};
    broken.residual = NAN;
    broken.tol = 1e-9;
    broken.diagnostic = "quote \" and, comma";
    vs.push_back(broken);
    Report rep = make_report(vs, 0.25);
    CHECK(rep.version == "1.0.0");
    CHECK(rep.summary == summarize(vs));
    CHECK(rep.timestamp.size() == 20);
    CHECK(rep.timestamp.back() == 'Z');

    std::string text = dump_json(rep);
    auto j = nlohmann::ordered_json::parse(text);
    CHECK(j["verdicts"].back()["lhs"].is_null());
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"version", "timestamp", "summary", "verdicts", "wall_time_seconds"});
    Report back = report_from_json(j);
    CHECK(dump_json(back) == text);
    CHECK(back.summary == rep.summary);
    CHECK(std::isnan(back.verdicts.back().residual));
    CHECK_THROWS_AS(report_from_json(nlohmann::ordered_json::parse("{\"version\": 1}")), argument_error);

    std::string csv = to_csv(vs);
    std::istringstream in(csv);
    std::string header, line;
    std::getline(in, header);
    CHECK(header == "entry_id,eq_tag,params,lhs,lhs_err,rhs,rhs_err,residual,status");
    std::size_t rows = 0;
    std::vector<std::string> last;
    while (std::getline(in, line)) {
        last = split_csv_line(line);
        CHECK(last.size() == 9);
        ++rows;
    }
    CHECK(rows == vs.size());

    std::string txt = to_text({s6.verdicts.front()});
    CHECK(txt.rfind("6.1 p=1.3 lhs=", 0) == 0);
    CHECK(txt.find(" PASS\n") != std::string::npos);
    CHECK(format_text_line(broken).find("INCONCLUSIVE") != std::string::npos);
}

TEST_CASE("golden csv report") {
    std::ifstream in(std::string(LGID_GOLDEN_DIR) + "/section6.csv");
    REQUIRE(in.good());
    std::string header, line;
    std::getline(in, header);
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) rows.push_back(split_csv_line(line));
    SuiteResult s6 = filtered({"section=6"});
    REQUIRE(rows.size() == s6.verdicts.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Verdict& v = s6.verdicts[i];
        CAPTURE(v.entry_id);
        CHECK(rows[i][0] == v.entry_id);
        CHECK(rows[i][1] == v.eq_tag);
        CHECK(rows[i][2] == format_params(v.params));
        CHECK(std::fabs(std::stod(rows[i][3]) - v.lhs.value) <= 1e-12);
        CHECK(std::fabs(std::stod(rows[i][5]) - v.rhs.value) <= 1e-12);
        CHECK(rows[i][8] == to_string(v.status));
    }
}

TEST_CASE("adjudication") {
    Adjudication a = adjudicate("alt-ci-pi");
    REQUIRE(a.resolved());
    CHECK(a.winner == "eq-1.72");
    CHECK(a.margins[1] <= 1e-9);
    CHECK(std::fabs(a.margins[0] - 0.5772156649015328606) <= 1e-6);
    // the oracle is the lattice sum itself
    CHECK(std::fabs(a.oracle.value - 2 * -0.13518142273073908501) <= 1e-10);

    for (const char* g : {"gr-6443-5", "gr-6467-1", "gr-6467-2"}) {
        Adjudication b = adjudicate(g);
        CAPTURE(g);
        REQUIRE(b.resolved());
        CHECK(b.winner.rfind("eq-", 0) == 0);
        CHECK(b.margins[0] >= 100 * b.tol);
    }
    Adjudication gr = adjudicate("gr-6443-5");
    // independent quadrature of int_0^1 log Gamma(x + 1/2) sin 2 pi x
    double q = integrate([](double x) { return log_gamma(x + 0.5).value * sinpi(2 * x); }, 0.0, 1.0).value;
    CHECK(std::fabs(gr.oracle.value - q) <= 1e-10);

    Adjudication tie = adjudicate("dup-check");
    CHECK_FALSE(tie.resolved());
    CHECK(tie.margins[0] == tie.margins[1]);
    CHECK(adjudication_groups().size() == 5);
    CHECK_THROWS_AS(adjudicate("nope"), unknown_id);
}

}  // TEST_SUITE
