#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgid/value.hpp"

namespace lgid {

enum class Kind { integral_eq_closed, series_eq_closed, integral_eq_series, pointwise_func_eq, limit_eq };
enum class Expected { expect_pass, known_erratum, adjudicate };
enum class Status { pass, fail, inconclusive };

std::string to_string(Kind k);
std::string to_string(Expected e);
std::string to_string(Status s);
Kind parse_kind(std::string_view s);
Expected parse_expected(std::string_view s);
Status parse_status(std::string_view s);

// Domain of one named parameter: an interval (optionally integer-valued,
// optionally excluding even integers) or an explicit finite set.
struct ParamDomain {
    bool integer = false;
    bool exclude_even = false;
    double lo = 0.0, hi = 0.0;
    bool lo_open = true, hi_open = true;
    std::vector<double> set;  // non-empty means the domain is exactly this set

    bool contains(double v) const;
    std::string describe() const;
};

struct ParamSpec {
    std::string name;
    ParamDomain domain;
    std::vector<double> samples;
};

// Ordered (name, value) pairs in the entry's declared parameter order.
using ParamPoint = std::vector<std::pair<std::string, double>>;

std::string format_number(double v);  // shortest round-trip form
std::string format_params(const ParamPoint& p);  // "a=0.5,k=1" or "-" when empty
ParamPoint parse_params(std::string_view s);
double param(const ParamPoint& p, std::string_view name);

struct IdentityEntry {
    std::string id;
    Kind kind = Kind::integral_eq_closed;
    std::string eq_tag;
    std::vector<ParamSpec> params;
    Expected expected = Expected::expect_pass;
    double tol = 1e-9;

    std::string section() const;  // eq_tag up to the first '.'
    std::vector<ParamPoint> sample_points() const;
};

using SideFn = std::function<ValueWithError(const ParamPoint&)>;
struct Recipe {
    SideFn lhs, rhs;
};

using RecipeRegistry = std::map<std::string, Recipe, std::less<>>;

class Catalog {
public:
    // Parses the versioned table; every id must have a recipe in the registry.
    static Catalog parse(std::string_view text, RecipeRegistry recipes);
    // The table embedded at build time bound to the built-in recipes.
    static const Catalog& builtin();

    const std::vector<IdentityEntry>& entries() const { return entries_; }
    const IdentityEntry& find(std::string_view id) const;
    const Recipe& recipe(std::string_view id) const;
    bool contains(std::string_view id) const;
    std::vector<std::string> sorted_ids() const;
    int version() const { return version_; }

private:
    int version_ = 0;
    std::vector<IdentityEntry> entries_;
    RecipeRegistry recipes_;
};

const RecipeRegistry& builtin_recipes();
std::string_view builtin_catalog_text();

struct Verdict {
    std::string entry_id;
    std::string eq_tag;
    ParamPoint params;
    ValueWithError lhs, rhs;
    double residual = 0.0;
    double tol = 0.0;
    Status status = Status::inconclusive;
    Expected expected = Expected::expect_pass;
    std::string diagnostic;
};

Status classify(double residual, double tol, double err_sum);
bool is_expected_mismatch(const Verdict& v);

// Natural order on catalog tags: numeric components compare numerically
// and sort before alphabetic ones.
bool eq_tag_less(std::string_view a, std::string_view b);
// (eq_tag, params, id)
bool verdict_less(const Verdict& a, const Verdict& b);

struct EvalOptions {
    std::optional<double> tol;  // overrides the entry tolerance
};

Verdict evaluate_identity(const Catalog& cat, std::string_view id, const ParamPoint& point, const EvalOptions& opt = {});
Verdict evaluate_identity(std::string_view id, const ParamPoint& point, const EvalOptions& opt = {});

// Pointwise entries with exactly one parameter, evaluated on a caller grid.
std::vector<Verdict> evaluate_pointwise(const Catalog& cat, std::string_view id, const std::vector<double>& grid,
                                        const EvalOptions& opt = {});
std::vector<Verdict> evaluate_pointwise(std::string_view id, const std::vector<double>& grid, const EvalOptions& opt = {});

// key=value terms; the same key repeated means any of the values, distinct
// keys must all match. Keys: id, section, kind, expected, eq_tag.
struct Filter {
    std::vector<std::pair<std::string, std::string>> terms;
    bool matches(const IdentityEntry& e) const;
    static Filter parse(const std::vector<std::string>& kv);  // throws argument_error
};

struct SuiteOptions {
    Filter filter;
    std::map<std::string, std::vector<double>> overrides;  // replace samples of named params
    EvalOptions eval;
    int jobs = 0;  // 0: all available threads
};

struct SuiteResult {
    std::vector<Verdict> verdicts;  // sorted by verdict_less
    std::vector<std::string> skipped;  // "id name=value" points dropped as outside the domain
};

SuiteResult run_suite(const Catalog& cat, const SuiteOptions& opt);
// Single-threaded reference used to check the parallel path.
SuiteResult run_suite_serial(const Catalog& cat, const SuiteOptions& opt);

struct Adjudication {
    std::string group_id;
    std::vector<std::string> candidates;
    std::vector<ValueWithError> candidate_values;
    ValueWithError oracle;
    std::vector<double> margins;
    std::string winner;  // empty when tied or unresolved
    double tol = 1e-9;
    bool resolved() const { return !winner.empty(); }
};

std::vector<std::string> adjudication_groups();
Adjudication adjudicate(std::string_view group_id);

}  // namespace lgid
