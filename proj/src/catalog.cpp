#include "lgid/catalog.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "catalog_text.hpp"
#include "lgid/errors.hpp"
#include "recipes/common.hpp"

namespace lgid {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string upper(std::string_view s) {
    std::string r(s);
    for (auto& c : r) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return r;
}

double parse_double(std::string_view s) {
    s = trim(s);
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    double v = 0.0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    if (!s.empty() && *b == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e || b == e) throw argument_error("invalid number '" + std::string(s) + "'");
    return v;
}

bool is_integer(double v) { return std::isfinite(v) && v == std::floor(v); }

ParamDomain parse_domain(std::string_view s) {
    ParamDomain d;
    s = trim(s);
    if (!s.empty() && s.front() == '{') {
        if (s.back() != '}') throw argument_error("unterminated set domain '" + std::string(s) + "'");
        for (auto v : split(s.substr(1, s.size() - 2), ',')) d.set.push_back(parse_double(v));
        if (d.set.empty()) throw argument_error("empty set domain");
        return d;
    }
    if (auto bang = s.find('!'); bang != std::string_view::npos) {
        if (trim(s.substr(bang + 1)) != "even") throw argument_error("unknown domain exclusion in '" + std::string(s) + "'");
        d.exclude_even = true;
        s = trim(s.substr(0, bang));
    }
    std::string_view body;
    if (s.substr(0, 3) == "int") {
        d.integer = true;
        body = s.substr(3);
    } else if (s.substr(0, 4) == "real") {
        body = s.substr(4);
    } else {
        throw argument_error("unknown domain '" + std::string(s) + "'");
    }
    if (body.size() < 5 || (body.front() != '[' && body.front() != '(') || (body.back() != ']' && body.back() != ')'))
        throw argument_error("malformed interval '" + std::string(s) + "'");
    d.lo_open = body.front() == '(';
    d.hi_open = body.back() == ')';
    auto ends = split(body.substr(1, body.size() - 2), ',');
    if (ends.size() != 2) throw argument_error("malformed interval '" + std::string(s) + "'");
    d.lo = parse_double(ends[0]);
    d.hi = parse_double(ends[1]);
    if (!(d.lo <= d.hi)) throw argument_error("empty interval '" + std::string(s) + "'");
    return d;
}

std::vector<double> parse_samples(std::string_view s) {
    std::vector<double> out;
    s = trim(s);
    if (auto dots = s.find(".."); dots != std::string_view::npos) {
        double lo = parse_double(s.substr(0, dots)), hi = parse_double(s.substr(dots + 2));
        if (!is_integer(lo) || !is_integer(hi) || lo > hi) throw argument_error("invalid sample range '" + std::string(s) + "'");
        for (double v = lo; v <= hi; v += 1.0) out.push_back(v);
        return out;
    }
    for (auto v : split(s, ',')) out.push_back(parse_double(v));
    return out;
}

// Component-wise comparison used for natural ordering.
int compare_component(std::string_view a, std::string_view b) {
    auto numeric = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    bool na = numeric(a), nb = numeric(b);
    if (na && nb) {
        // compare digit strings numerically without overflow
        auto strip = [](std::string_view s) {
            while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
            return s;
        };
        a = strip(a);
        b = strip(b);
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        return a.compare(b) < 0 ? -1 : (a.compare(b) > 0 ? 1 : 0);
    }
    if (na != nb) return na ? -1 : 1;
    int c = a.compare(b);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::vector<std::string_view> tag_components(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '.' || s[i] == '-') {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

bool params_less(const ParamPoint& a, const ParamPoint& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].first != b[i].first) return a[i].first < b[i].first;
        if (a[i].second != b[i].second) return a[i].second < b[i].second;
    }
    return a.size() < b.size();
}

const IdentityEntry* find_entry(const Catalog& cat, std::string_view id) {
    for (const auto& e : cat.entries())
        if (e.id == id) return &e;
    return nullptr;
}

void check_point(const IdentityEntry& e, const ParamPoint& point) {
    if (point.size() != e.params.size())
        throw argument_error(e.id + ": expected " + std::to_string(e.params.size()) + " parameter(s), got " +
                             std::to_string(point.size()));
    for (std::size_t i = 0; i < point.size(); ++i) {
        const auto& spec = e.params[i];
        if (point[i].first != spec.name) throw argument_error(e.id + ": unexpected parameter '" + point[i].first + "'");
        if (!spec.domain.contains(point[i].second))
            throw domain_error(e.id + ": " + spec.name + "=" + format_number(point[i].second) + " outside " +
                               spec.domain.describe());
    }
}

}  // namespace

std::string to_string(Kind k) {
    switch (k) {
        case Kind::integral_eq_closed: return "INTEGRAL_EQ_CLOSED";
        case Kind::series_eq_closed: return "SERIES_EQ_CLOSED";
        case Kind::integral_eq_series: return "INTEGRAL_EQ_SERIES";
        case Kind::pointwise_func_eq: return "POINTWISE_FUNC_EQ";
        case Kind::limit_eq: return "LIMIT_EQ";
    }
    return "?";
}

std::string to_string(Expected e) {
    switch (e) {
        case Expected::expect_pass: return "EXPECT_PASS";
        case Expected::known_erratum: return "KNOWN_ERRATUM";
        case Expected::adjudicate: return "ADJUDICATE";
    }
    return "?";
}

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "PASS";
        case Status::fail: return "FAIL";
        case Status::inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

Kind parse_kind(std::string_view s) {
    std::string u = upper(trim(s));
    for (Kind k : {Kind::integral_eq_closed, Kind::series_eq_closed, Kind::integral_eq_series, Kind::pointwise_func_eq, Kind::limit_eq})
        if (to_string(k) == u) return k;
    throw argument_error("unknown kind '" + std::string(s) + "'");
}

Expected parse_expected(std::string_view s) {
    std::string u = upper(trim(s));
    for (Expected e : {Expected::expect_pass, Expected::known_erratum, Expected::adjudicate})
        if (to_string(e) == u) return e;
    throw argument_error("unknown expectation '" + std::string(s) + "'");
}

Status parse_status(std::string_view s) {
    std::string u = upper(trim(s));
    for (Status st : {Status::pass, Status::fail, Status::inconclusive})
        if (to_string(st) == u) return st;
    throw argument_error("unknown status '" + std::string(s) + "'");
}

bool ParamDomain::contains(double v) const {
    if (!std::isfinite(v)) return false;
    if (!set.empty()) return std::find(set.begin(), set.end(), v) != set.end();
    if (integer && !is_integer(v)) return false;
    if (exclude_even && is_integer(v) && std::fmod(v, 2.0) == 0.0) return false;
    if (lo_open ? !(v > lo) : !(v >= lo)) return false;
    if (hi_open ? !(v < hi) : !(v <= hi)) return false;
    return true;
}

std::string ParamDomain::describe() const {
    std::string s;
    if (!set.empty()) {
        s = "{";
        for (std::size_t i = 0; i < set.size(); ++i) s += (i ? "," : "") + format_number(set[i]);
        return s + "}";
    }
    s = integer ? "int" : "real";
    s += lo_open ? "(" : "[";
    s += format_number(lo) + "," + format_number(hi);
    s += hi_open ? ")" : "]";
    if (exclude_even) s += "!even";
    return s;
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string format_params(const ParamPoint& p) {
    if (p.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].first + "=" + format_number(p[i].second);
    return s;
}

ParamPoint parse_params(std::string_view s) {
    ParamPoint p;
    s = trim(s);
    if (s.empty() || s == "-") return p;
    for (auto kv : split(s, ',')) {
        auto eq = kv.find('=');
        if (eq == std::string_view::npos) throw argument_error("parameter '" + std::string(kv) + "' is not name=value");
        p.emplace_back(std::string(trim(kv.substr(0, eq))), parse_double(kv.substr(eq + 1)));
    }
    return p;
}

double param(const ParamPoint& p, std::string_view name) {
    for (const auto& [k, v] : p)
        if (k == name) return v;
    throw argument_error("missing parameter '" + std::string(name) + "'");
}

std::string IdentityEntry::section() const { return eq_tag.substr(0, eq_tag.find('.')); }

std::vector<ParamPoint> IdentityEntry::sample_points() const {
    std::vector<ParamPoint> pts{ParamPoint{}};
    for (const auto& spec : params) {
        std::vector<ParamPoint> next;
        for (const auto& base : pts)
            for (double v : spec.samples) {
                ParamPoint q = base;
                q.emplace_back(spec.name, v);
                next.push_back(std::move(q));
            }
        pts = std::move(next);
    }
    return pts;
}

Catalog Catalog::parse(std::string_view text, RecipeRegistry recipes) {
    Catalog cat;
    bool have_version = false;
    std::set<std::string> seen;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        auto where = [lineno](const std::string& msg) { return argument_error("catalog line " + std::to_string(lineno) + ": " + msg); };
        if (!have_version) {
            if (line.substr(0, 8) != "version ") throw where("expected 'version N' header");
            double v = parse_double(line.substr(8));
            if (!is_integer(v) || v < 1) throw where("invalid version");
            cat.version_ = static_cast<int>(v);
            have_version = true;
            continue;
        }
        auto cols = split(line, '|');
        if (cols.size() != 6) throw where("expected 6 columns, got " + std::to_string(cols.size()));
        IdentityEntry e;
        try {
            e.id = std::string(cols[0]);
            if (e.id.empty()) throw argument_error("empty id");
            e.kind = parse_kind(cols[1]);
            e.eq_tag = std::string(cols[2]);
            if (e.eq_tag.empty()) throw argument_error("empty eq_tag");
            if (cols[3] != "-") {
                for (auto ps : split(cols[3], ';')) {
                    auto colon = ps.find(':'), eq = ps.find('=');
                    if (colon == std::string_view::npos || eq == std::string_view::npos || eq < colon)
                        throw argument_error("parameter spec '" + std::string(ps) + "' is not name:domain=samples");
                    ParamSpec spec;
                    spec.name = std::string(trim(ps.substr(0, colon)));
                    spec.domain = parse_domain(ps.substr(colon + 1, eq - colon - 1));
                    spec.samples = parse_samples(ps.substr(eq + 1));
                    for (double v : spec.samples)
                        if (!spec.domain.contains(v))
                            throw argument_error("sample " + spec.name + "=" + format_number(v) + " outside " + spec.domain.describe());
                    e.params.push_back(std::move(spec));
                }
            }
            e.expected = parse_expected(cols[4]);
            e.tol = parse_double(cols[5]);
            if (!(e.tol > 0.0)) throw argument_error("tolerance must be positive");
        } catch (const argument_error& ex) {
            throw where(ex.what());
        }
        if (!seen.insert(e.id).second) throw where("duplicate id " + e.id);
        if (recipes.find(e.id) == recipes.end()) throw where("no recipe for id " + e.id);
        cat.entries_.push_back(std::move(e));
    }
    if (!have_version) throw argument_error("catalog: missing version header");
    cat.recipes_ = std::move(recipes);
    return cat;
}

const Catalog& Catalog::builtin() {
    static const Catalog cat = parse(builtin_catalog_text(), builtin_recipes());
    return cat;
}

const IdentityEntry& Catalog::find(std::string_view id) const {
    if (const auto* e = find_entry(*this, id)) return *e;
    throw unknown_id("unknown identity id '" + std::string(id) + "'");
}

const Recipe& Catalog::recipe(std::string_view id) const {
    auto it = recipes_.find(id);
    if (it == recipes_.end()) throw unknown_id("no recipe for '" + std::string(id) + "'");
    return it->second;
}

bool Catalog::contains(std::string_view id) const { return find_entry(*this, id) != nullptr; }

std::vector<std::string> Catalog::sorted_ids() const {
    std::vector<std::string> ids;
    for (const auto& e : entries_) ids.push_back(e.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

const RecipeRegistry& builtin_recipes() {
    static const RecipeRegistry r = [] {
        RecipeRegistry reg;
        recipes::register_section1(reg);
        recipes::register_section2(reg);
        recipes::register_section3(reg);
        recipes::register_section4_5(reg);
        recipes::register_section6_appendix(reg);
        return reg;
    }();
    return r;
}

std::string_view builtin_catalog_text() { return kCatalogText; }

Status classify(double residual, double tol, double err_sum) {
    if (!std::isfinite(residual) || !std::isfinite(err_sum)) return Status::inconclusive;
    double r = std::fabs(residual);
    if (r <= std::max(tol, 10.0 * err_sum)) return Status::pass;
    if (r > std::max(100.0 * err_sum, 1e-6)) return Status::fail;
    return Status::inconclusive;
}

bool is_expected_mismatch(const Verdict& v) {
    return (v.expected == Expected::expect_pass && v.status == Status::fail) ||
           (v.expected == Expected::known_erratum && v.status == Status::pass);
}

bool eq_tag_less(std::string_view a, std::string_view b) {
    auto ca = tag_components(a), cb = tag_components(b);
    std::size_t n = std::min(ca.size(), cb.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = compare_component(ca[i], cb[i]); c != 0) return c < 0;
    if (ca.size() != cb.size()) return ca.size() < cb.size();
    return a < b;
}

bool verdict_less(const Verdict& a, const Verdict& b) {
    if (a.eq_tag != b.eq_tag) return eq_tag_less(a.eq_tag, b.eq_tag);
    if (params_less(a.params, b.params)) return true;
    if (params_less(b.params, a.params)) return false;
    return a.entry_id < b.entry_id;
}

Verdict evaluate_identity(const Catalog& cat, std::string_view id, const ParamPoint& point, const EvalOptions& opt) {
    const IdentityEntry& e = cat.find(id);
    check_point(e, point);
    const Recipe& rc = cat.recipe(id);
    Verdict v;
    v.entry_id = e.id;
    v.eq_tag = e.eq_tag;
    v.params = point;
    v.tol = opt.tol.value_or(e.tol);
    v.expected = e.expected;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    try {
        v.lhs = rc.lhs(point);
        v.rhs = rc.rhs(point);
        v.residual = v.lhs.value - v.rhs.value;
        if (!std::isfinite(v.lhs.value) || !std::isfinite(v.rhs.value)) v.diagnostic = "non-finite side value";
        v.status = classify(v.residual, v.tol, v.lhs.err_bound + v.rhs.err_bound);
    } catch (const std::exception& ex) {
        v.lhs = {nan, nan};
        v.rhs = {nan, nan};
        v.residual = nan;
        v.status = Status::inconclusive;
        v.diagnostic = ex.what();
    }
    return v;
}

Verdict evaluate_identity(std::string_view id, const ParamPoint& point, const EvalOptions& opt) {
    return evaluate_identity(Catalog::builtin(), id, point, opt);
}

std::vector<Verdict> evaluate_pointwise(const Catalog& cat, std::string_view id, const std::vector<double>& grid,
                                        const EvalOptions& opt) {
    const IdentityEntry& e = cat.find(id);
    if (e.kind != Kind::pointwise_func_eq) throw argument_error(e.id + " is not a pointwise identity");
    if (e.params.size() != 1) throw argument_error(e.id + ": pointwise evaluation needs exactly one parameter");
    std::vector<Verdict> out;
    for (double x : grid) out.push_back(evaluate_identity(cat, id, {{e.params[0].name, x}}, opt));
    return out;
}

std::vector<Verdict> evaluate_pointwise(std::string_view id, const std::vector<double>& grid, const EvalOptions& opt) {
    return evaluate_pointwise(Catalog::builtin(), id, grid, opt);
}

bool Filter::matches(const IdentityEntry& e) const {
    std::map<std::string, bool> by_key;
    for (const auto& [k, v] : terms) {
        bool hit = false;
        if (k == "id") hit = e.id == v;
        else if (k == "section") hit = e.section() == v;
        else if (k == "kind") hit = to_string(e.kind) == upper(v);
        else if (k == "expected") hit = to_string(e.expected) == upper(v);
        else if (k == "eq_tag") hit = e.eq_tag == v;
        by_key[k] = by_key[k] || hit;
    }
    return std::all_of(by_key.begin(), by_key.end(), [](const auto& kv) { return kv.second; });
}

Filter Filter::parse(const std::vector<std::string>& kv) {
    static const std::set<std::string> keys{"id", "section", "kind", "expected", "eq_tag"};
    Filter f;
    for (const auto& t : kv) {
        auto eq = t.find('=');
        if (eq == std::string::npos) throw argument_error("filter term '" + t + "' is not key=value");
        std::string k(trim(std::string_view(t).substr(0, eq)));
        std::string v(trim(std::string_view(t).substr(eq + 1)));
        if (!keys.count(k)) throw argument_error("unknown filter key '" + k + "' (id, section, kind, expected, eq_tag)");
        if (v.empty()) throw argument_error("empty value for filter key '" + k + "'");
        if (k == "kind") parse_kind(v);
        if (k == "expected") parse_expected(v);
        f.terms.emplace_back(std::move(k), std::move(v));
    }
    return f;
}

namespace {

struct Task {
    const IdentityEntry* entry;
    ParamPoint point;
};

std::vector<Task> plan_suite(const Catalog& cat, const SuiteOptions& opt, std::vector<std::string>& skipped) {
    std::vector<Task> tasks;
    for (const auto& e : cat.entries()) {
        if (!opt.filter.matches(e)) continue;
        IdentityEntry local = e;
        for (auto& spec : local.params) {
            auto it = opt.overrides.find(spec.name);
            if (it == opt.overrides.end()) continue;
            spec.samples.clear();
            for (double v : it->second) {
                if (spec.domain.contains(v)) spec.samples.push_back(v);
                else skipped.push_back(e.id + " " + spec.name + "=" + format_number(v));
            }
        }
        for (auto& p : local.sample_points()) tasks.push_back({&e, std::move(p)});
    }
    return tasks;
}

SuiteResult finish(std::vector<Verdict> verdicts, std::vector<std::string> skipped) {
    std::sort(verdicts.begin(), verdicts.end(), verdict_less);
    return {std::move(verdicts), std::move(skipped)};
}

}  // namespace

SuiteResult run_suite(const Catalog& cat, const SuiteOptions& opt) {
    std::vector<std::string> skipped;
    auto tasks = plan_suite(cat, opt, skipped);
    std::vector<Verdict> out(tasks.size());
    int jobs = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
    const long n = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (long i = 0; i < n; ++i) out[i] = evaluate_identity(cat, tasks[i].entry->id, tasks[i].point, opt.eval);
    return finish(std::move(out), std::move(skipped));
}

SuiteResult run_suite_serial(const Catalog& cat, const SuiteOptions& opt) {
    std::vector<std::string> skipped;
    auto tasks = plan_suite(cat, opt, skipped);
    std::vector<Verdict> out;
    out.reserve(tasks.size());
    for (const auto& t : tasks) out.push_back(evaluate_identity(cat, t.entry->id, t.point, opt.eval));
    return finish(std::move(out), std::move(skipped));
}

}  // namespace lgid
