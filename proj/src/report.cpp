#include "deficitlab/report.hpp"

#include <sstream>

namespace deficitlab {

using nlohmann::json;

namespace {

json checks(const std::vector<NamedCheck>& list) {
    json out = json::array();
    for (const auto& c : list) out.push_back({{"name", c.name}, {"holds", c.holds}});
    return out;
}

}  // namespace

json to_json(const DeficitReport& r) {
    json out{{"degree", r.degree}, {"in_F", r.in_f}, {"deficit", r.deficit}};
    out["top_non_F_index"] = r.top_non_f_index ? json(*r.top_non_f_index) : json(nullptr);
    return out;
}

json to_json(const TheoremVerdict& v) {
    json witnesses = json::object();
    for (const auto& w : v.witnesses) witnesses[w.label] = to_json(w.report);
    json out{
        {"theorem", std::string(to_string(v.id))},
        {"context", v.context},
        {"hypotheses_met", v.hypotheses_met},
        {"hypotheses", checks(v.hypotheses)},
        {"conclusion_holds", v.conclusion_holds},
        {"conclusions", checks(v.conclusions)},
        {"witnesses", witnesses},
        {"offending_indices", v.offending_indices},
        {"classification", std::string(to_string(v.classification))},
    };
    if (!v.hypotheses_met) out["failed_hypothesis"] = v.failed_hypothesis();
    return out;
}

json to_json(const CounterexampleRecord& c) {
    json out{{"seed", c.seed}, {"trial", c.trial}, {"p", c.p}, {"verdict", to_json(c.verdict)}};
    if (!c.q.empty()) out["q"] = c.q;
    if (c.r != 0) out["r"] = c.r;
    return out;
}

json to_json(const SuiteCaps& caps) {
    return {{"max_degree", caps.max_degree},
            {"max_degree_bivariate", caps.max_degree_bivariate},
            {"max_iterate_degree", caps.max_iterate_degree},
            {"max_r", caps.max_r}};
}

json to_json(const SuiteReport& s) {
    json counterexamples = json::array();
    for (const auto& c : s.counterexamples) counterexamples.push_back(to_json(c));
    json out{
        {"theorem", std::string(to_string(s.theorem))},
        {"context", s.context},
        {"mode", s.mode == SuiteMode::Standard ? "standard" : "negative_control"},
        {"empirical", s.empirical},
        {"trials", s.trials},
        {"trials_run", s.trials_run},
        {"confirms", s.confirms},
        {"vacuous", s.vacuous},
        {"conclusion_failures", s.conclusion_failures},
        {"counterexamples", counterexamples},
        {"aborted", s.aborted},
        {"seed", s.seed},
        {"caps", to_json(s.caps)},
        {"runtime_ms", s.runtime_ms},
    };
    if (s.first_conclusion_failure) out["first_conclusion_failure"] = to_json(*s.first_conclusion_failure);
    return out;
}

json to_json(const FixtureReport& f) {
    json fixtures = json::array();
    for (const auto& r : f.fixtures) fixtures.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    return {{"fixtures", fixtures}, {"all_passed", f.all_passed()}, {"runtime_ms", f.runtime_ms}};
}

std::string summarize(const DeficitReport& r) {
    std::ostringstream out;
    out << "degree " << r.degree << ", top non-F index ";
    if (r.top_non_f_index)
        out << *r.top_non_f_index;
    else
        out << "none";
    out << ", deficit " << r.deficit << (r.in_f ? " (in F[x])" : "");
    return out.str();
}

std::string summarize(const SuiteReport& s) {
    std::ostringstream out;
    out << to_string(s.theorem) << " over " << s.context;
    if (s.mode == SuiteMode::NegativeControl) out << " [negative control]";
    out << ": " << s.trials_run << "/" << s.trials << " trials, " << s.confirms << " confirm, " << s.vacuous
        << " vacuous, " << s.conclusion_failures << " conclusion failures";
    if (s.empirical)
        out << " (empirical)";
    else
        out << ", " << s.counterexamples.size() << " counterexamples";
    if (s.aborted) out << ", ABORTED";
    out << " [" << static_cast<long>(s.runtime_ms) << " ms]";
    return out.str();
}

}  // namespace deficitlab
