// The command-line tool run as a subprocess: exit codes, output formats and
// the listing.

#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lgid/catalog.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// stdout captured; stderr discarded unless redirected by the caller
Run run(const std::string& args, bool keep_stderr = false) {
    std::string cmd = std::string(LGID_CLI_PATH) + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("list") {
    Run a = run("--list");
    CHECK(a.code == 0);
    auto ids = lines(a.out);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(ids == lgid::Catalog::builtin().sorted_ids());
    CHECK(ids.size() == lgid::Catalog::builtin().entries().size());
    Run b = run("list");
    CHECK(b.code == 0);
    CHECK(b.out == a.out);
}

TEST_CASE("verify one id") {
    Run r = run("verify --id raabe");
    CHECK(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 1);
    CHECK(ls[0].rfind("2.11 - lhs=", 0) == 0);
    CHECK(ls[0].size() > 5);
    CHECK(ls[0].substr(ls[0].size() - 5) == " PASS");
}

TEST_CASE("verify with overrides and csv") {
    Run r = run("verify --id eq-1.9.2 --params k=6..7 --format csv");
    CHECK(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0] == "entry_id,eq_tag,params,lhs,lhs_err,rhs,rhs_err,residual,status");
    CHECK(ls[1].rfind("eq-1.9.2,1.9.2,k=6,", 0) == 0);
    Run skip = run("verify --id eq-1.9.2 --params k=0,1", true);
    CHECK(skip.code == 0);
    CHECK(skip.out.find("eq-1.9.2 k=0") != std::string::npos);
}

TEST_CASE("erratum selection exits zero when the failures are expected") {
    Run r = run("verify --filter expected=KNOWN_ERRATUM");
    CHECK(r.code == 0);
    auto ls = lines(r.out);
    CHECK(ls.size() == 3);
    for (const auto& l : ls) CHECK(l.substr(l.size() - 5) == " FAIL");
}

TEST_CASE("full suite as json") {
    Run r = run("verify --all --format json --jobs 2");
    CHECK(r.code == 0);
    auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["version"] == "1.0.0");
    CHECK(j["summary"]["expected_mismatch"] == 0);
    CHECK(j["summary"]["inconclusive"] == 0);
    CHECK(j["verdicts"].size() == j["summary"]["pass"].get<std::size_t>() + j["summary"]["fail"].get<std::size_t>());
    CHECK(j.dump(2) + "\n" == r.out);
    CHECK(j["wall_time_seconds"].get<double>() < 120.0);
}

TEST_CASE("output is independent of the job count") {
    Run a = run("verify --filter section=3 --format csv --jobs 1");
    Run b = run("verify --filter section=3 --format csv --jobs 3");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("adjudicate") {
    Run r = run("adjudicate alt-ci-pi");
    CHECK(r.code == 0);
    CHECK(r.out.find("oracle=") != std::string::npos);
    CHECK(r.out.find("eq-1.23.2") != std::string::npos);
    CHECK(r.out.find("margin=") != std::string::npos);
    CHECK(r.out.find("winner eq-1.72") != std::string::npos);
    Run j = run("adjudicate gr-6443-5 --format json");
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out)["winner"] == "eq-1.1");
    Run tie = run("adjudicate dup-check");
    CHECK(tie.code == 1);
    CHECK(tie.out.find("tie") != std::string::npos);
}

TEST_CASE("usage errors exit 2 and print the grammar") {
    for (const char* args : {"", "verify", "verify --bogus", "verify --all --id raabe", "verify --id nope",
                             "verify --filter colour=red", "verify --all --format xml", "verify --all --params k=x",
                             "adjudicate", "adjudicate nope", "frobnicate"}) {
        CAPTURE(args);
        Run r = run(args, true);
        CHECK(r.code == 2);
        CHECK(r.out.find("usage:") != std::string::npos);
    }
}

}  // TEST_SUITE
