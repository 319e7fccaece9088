#include <cmath>

#include "lgid/catalog.hpp"
#include "lgid/errors.hpp"

namespace lgid {

namespace {

// Competing closed forms for one left side, compared at a single point.
struct Group {
    std::string id;
    std::vector<std::string> candidates;
    ParamPoint point;
};

const std::vector<Group>& groups() {
    static const std::vector<Group> g{
        {"alt-ci-pi", {"eq-1.23.2", "eq-1.72"}, {}},
        {"dup-check", {"eq-1.72", "eq-1.72"}, {}},
        {"gr-6443-5", {"gr-6443-5-original", "eq-1.1"}, {{"a", 0.5}, {"k", 1.0}}},
        {"gr-6467-1", {"gr-6467-1-original", "eq-1.76"}, {{"a", 0.25}, {"n", 1.0}}},
        {"gr-6467-2", {"gr-6467-2-original", "eq-1.78"}, {{"a", 0.5}, {"n", 1.0}}},
    };
    return g;
}

}  // namespace

std::vector<std::string> adjudication_groups() {
    std::vector<std::string> ids;
    for (const auto& g : groups()) ids.push_back(g.id);
    return ids;
}

Adjudication adjudicate(std::string_view group_id) {
    const Catalog& cat = Catalog::builtin();
    for (const auto& g : groups()) {
        if (g.id != group_id) continue;
        Adjudication a;
        a.group_id = g.id;
        a.candidates = g.candidates;
        // every candidate shares the left side; the first one supplies the oracle
        a.oracle = cat.recipe(g.candidates.front()).lhs(g.point);
        for (const auto& c : g.candidates) {
            ValueWithError v = cat.recipe(c).rhs(g.point);
            a.candidate_values.push_back(v);
            a.margins.push_back(std::fabs(v.value - a.oracle.value));
        }
        for (std::size_t i = 0; i < a.candidates.size(); ++i) {
            if (!(a.margins[i] <= a.tol)) continue;
            bool clear = true;
            for (std::size_t j = 0; j < a.candidates.size(); ++j)
                if (j != i && !(a.margins[j] >= 100.0 * a.tol)) clear = false;
            if (clear) a.winner = a.candidates[i];
        }
        return a;
    }
    throw unknown_id("unknown adjudication group '" + std::string(group_id) + "'");
}

}  // namespace lgid
