// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when any fails
// (or, with --expect-fail, when any outcome differs from the expectation).

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support.hpp"
#include "deficitlab/report.hpp"

using namespace deficitlab;

#ifndef DEFICITLAB_CLI
#error "DEFICITLAB_CLI must name the command-line binary"
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
    std::vector<std::string> notes;  // printed under the line
};

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return out + "'";
}

int run_cli(const std::vector<std::string>& args) {
    std::string cmd = shell_quote(DEFICITLAB_CLI);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    cmd += " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string describe(const CounterexampleRecord& c) {
    std::ostringstream out;
    out << "trial " << c.trial << " seed " << c.seed << ": p = " << c.p;
    if (!c.q.empty()) out << ", q = " << c.q;
    if (c.r) out << ", r = " << c.r;
    for (const auto& k : c.verdict.conclusions)
        if (!k.holds) out << " [fails: " << k.name << "]";
    return out.str();
}

// ---------------------------------------------------------------------------

Outcome fixtures() {
    const auto start = Clock::now();
    const FixtureReport report = worked_examples();
    const double s = seconds_since(start);
    Outcome o;
    std::size_t passed = 0;
    for (const auto& f : report.fixtures) {
        if (f.passed)
            ++passed;
        else
            o.notes.push_back(f.name + ": " + f.detail);
    }
    o.pass = report.all_passed() && s < 1.0;
    o.detail = std::to_string(passed) + "/" + std::to_string(report.fixtures.size()) + " fixtures in " +
               std::to_string(s) + " s";
    return o;
}

Outcome oracle() {
    const auto start = Clock::now();
    Outcome o;
    o.pass = true;
    std::size_t pairs = 0;
    for (const auto& name : testing::sweep_contexts()) {
        const auto ctx = make_context(name);
        std::size_t mismatches = 0;
        for (std::uint64_t i = 0; i < 500; ++i) {
            GenConstraints c;
            c.max_degree = 5;
            c.seed = trial_seed(1, 2 * i);
            const Poly1 p = random_poly(ctx, c);
            c.seed = trial_seed(1, 2 * i + 1);
            const Poly1 q = random_poly(ctx, c);
            if (compose(p, q) != compose_oracle(p, q)) {
                ++mismatches;
                o.notes.push_back(name + ": p = " + format_poly(p) + ", q = " + format_poly(q));
            }
            ++pairs;
        }
        if (mismatches) o.pass = false;
    }
    const double s = seconds_since(start);
    o.pass = o.pass && s < 30.0;
    o.detail = std::to_string(pairs) + " pairs over " + std::to_string(testing::sweep_contexts().size()) +
               " contexts in " + std::to_string(s) + " s";
    return o;
}

Outcome suites() {
    const auto start = Clock::now();
    Outcome o;
    o.pass = true;
    std::size_t runs = 0, aborted = 0;
    auto run = [&](TheoremId id, std::size_t trials) {
        for (const auto& ctx : default_suite_contexts(id)) {
            const SuiteReport r = run_suite(id, ctx, trials, 42);
            ++runs;
            if (r.field_counterexample()) {
                o.pass = false;
                ++aborted;
                o.notes.push_back(std::string(to_string(id)) + " over " + r.context + " stopped after " +
                                  std::to_string(r.trials_run) + " trials; " + describe(r.counterexamples.front()));
            }
        }
    };
    for (TheoremId id : {TheoremId::T1, TheoremId::C1, TheoremId::T1A, TheoremId::T2, TheoremId::P1, TheoremId::L1,
                         TheoremId::T3, TheoremId::T4, TheoremId::IterIneq, TheoremId::T5})
        run(id, 1000);
    run(TheoremId::FF, 500);
    run(TheoremId::TwoVar, 200);
    run(TheoremId::Ring, 500);
    const double s = seconds_since(start);
    o.pass = o.pass && s < 300.0;
    o.detail = std::to_string(runs) + " suite runs, " + std::to_string(aborted) + " with a counterexample, " +
               std::to_string(s) + " s";
    return o;
}

Outcome negative_controls() {
    Outcome o;
    const SuiteReport ff = run_suite(TheoremId::FF, make_context("GF(2^2)"), 200, 42, {}, SuiteMode::NegativeControl);
    const SuiteReport t2 =
        run_suite(TheoremId::T2, make_context("Q(sqrt 2, sqrt 3)"), 200, 42, {}, SuiteMode::NegativeControl);
    o.pass = ff.conclusion_failures > 0 && t2.conclusion_failures > 0;
    o.detail = "FF over GF(2^2): " + std::to_string(ff.conclusion_failures) + "/200 violations, T2 over " + t2.context +
               ": " + std::to_string(t2.conclusion_failures) + "/200 violations";
    for (const SuiteReport* r : {&ff, &t2})
        if (r->first_conclusion_failure) o.notes.push_back("first: " + describe(*r->first_conclusion_failure));
    return o;
}

// Iterates rebuilt with the multinomial oracle, independent of the Horner path.
Outcome iterate_pattern() {
    Outcome o;
    o.pass = true;
    const auto ctx = make_context("Q(sqrt 2)");
    const Poly1 p = testing::P(ctx, "x^2 + sqrt(2)");
    Poly1 pr = p;
    for (unsigned r = 1; r <= 4; ++r) {
        if (r > 1) pr = compose_oracle(p, pr);
        const std::size_t top = std::size_t{1} << r;
        const DeficitReport d = deficit1(pr);
        const bool ok = pr == iterate(p, r) && d.degree == top && !d.in_f && d.deficit == 2 &&
                        d.top_non_f_index == top - 2 && is_in_subfield(pr.coefficient(top - 1));
        if (!ok) {
            o.pass = false;
            o.notes.push_back("r = " + std::to_string(r) + ": " + format_poly(pr));
        }
    }
    o.detail = "D(p^[r]) = 2 with top non-F index 2^r - 2 for r = 1..4";
    return o;
}

Outcome obstruction() {
    Outcome o;
    const auto ctx = make_context("Q(sqrt 2, sqrt 3)");
    const ObstructionVerdict fixture = decomposition_obstruction(testing::P(ctx, "x^6 + x^5 + sqrt(2)*x^4 + x + 1"),
                                                                 testing::P(ctx, "x^3 + sqrt(3)*x^2 + 1"));
    std::size_t inconclusive = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        GenConstraints pc;
        pc.min_degree = 1;
        pc.max_degree = 3;
        pc.seed = trial_seed(6, 2 * i);
        GenConstraints qc;
        qc.min_degree = 2;
        qc.max_degree = 3;
        qc.seed = trial_seed(6, 2 * i + 1);
        const Poly1 p = random_poly(ctx, pc);
        const Poly1 q = random_poly(ctx, qc);
        if (!decomposition_obstruction(compose(p, q), q).impossible)
            ++inconclusive;
        else
            o.notes.push_back("rejected genuine p = " + format_poly(p) + ", q = " + format_poly(q));
    }
    o.pass = fixture.impossible && inconclusive == 100;
    o.detail = std::string("fixture ") + (fixture.impossible ? "IMPOSSIBLE" : "INCONCLUSIVE") + ", " +
               std::to_string(inconclusive) + "/100 genuine compositions INCONCLUSIVE";
    return o;
}

Outcome parser_and_cli() {
    Outcome o;
    o.pass = true;
    std::size_t round_trips = 0;
    for (const auto& name : testing::sweep_contexts()) {
        const auto ctx = make_context(name);
        for (std::uint64_t i = 0; i < 500; ++i) {
            GenConstraints c;
            c.max_degree = 6;
            c.seed = trial_seed(7, i);
            const Poly1 p = random_poly(ctx, c);
            if (parse_poly1(format_poly(p), ctx) != p) {
                o.pass = false;
                o.notes.push_back("round trip: " + format_poly(p));
            }
            ++round_trips;
        }
    }

    struct BadInput {
        const char* text;
        ErrorCode code;
        std::size_t position;
    };
    const auto q2 = make_context("Q(sqrt 2)");
    for (const BadInput& b : {BadInput{"x^2 +* 1", ErrorCode::SyntaxError, 5}, {"x + y", ErrorCode::ArityViolation, 4},
                              {"3*z", ErrorCode::UnknownSymbol, 2}, {"(x - 1", ErrorCode::SyntaxError, 6}}) {
        try {
            parse_poly1(b.text, q2);
            o.pass = false;
            o.notes.push_back(std::string("accepted ") + b.text);
        } catch (const Error& e) {
            if (e.code() != b.code || e.position() != b.position) {
                o.pass = false;
                o.notes.push_back(std::string("wrong error for ") + b.text + ": " + e.what());
            }
        }
    }

    struct Invocation {
        std::vector<std::string> args;
        int status;
    };
    const std::vector<Invocation> matrix{
        {{"--field", "Q(sqrt 2)", "deficit", "x^2 + sqrt(2)*x"}, 0},
        {{"--field", "Q(sqrt 2)", "compose", "x^2", "x + sqrt(2)"}, 0},
        {{"--trials", "50", "--seed", "1", "verify", "T1"}, 0},
        {{"verify", "--examples"}, 0},
        {{"--field", "Q(sqrt 2)", "verify", "T4", "--p", "-x + 1 + sqrt(2)", "--r", "2"}, 1},
        {{"deficit", "x^2 +* 1"}, 2},
        {{"deficit", "x*y"}, 2},
        {{"--field", "Q", "verify", "FF"}, 2},
        {{"--field", "Q(sqrt"}, 2},
        {{}, 2},
        {{"iterate", "x^2 + 1", "20"}, 3},
    };
    for (const auto& inv : matrix) {
        const int got = run_cli(inv.args);
        if (got != inv.status) {
            o.pass = false;
            std::string line = "exit " + std::to_string(got) + " (want " + std::to_string(inv.status) + "):";
            for (const auto& a : inv.args) line += " " + a;
            o.notes.push_back(line);
        }
    }
    o.detail = std::to_string(round_trips) + " round trips, 4 error positions, " + std::to_string(matrix.size()) +
               " CLI exit codes";
    return o;
}

Outcome deficit_set() {
    Outcome o;
    const SuiteReport r = run_suite(TheoremId::DeficitSetT1, make_context("set:realsUnionImag"), 500, 42);
    o.pass = r.trials_run == 500 && r.empirical && !to_json(r).empty();
    o.detail = "empirical, " + std::to_string(r.confirms) + " confirm, " + std::to_string(r.vacuous) + " vacuous, " +
               std::to_string(r.trials_run - r.confirms - r.vacuous) +
               " satisfy the hypotheses but not the conclusion (non-blocking)";
    if (!r.counterexamples.empty()) o.notes.push_back("first: " + describe(r.counterexamples.front()));
    return o;
}

}  // namespace

// --expect-fail N marks criterion N as a known failure: the run then succeeds only when N
// fails and every other criterion passes, so a fix or a new regression both show up.
int main(int argc, char** argv) {
    std::set<std::size_t> expected_failures;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--expect-fail" && i + 1 < argc) {
            expected_failures.insert(std::stoul(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--expect-fail N]...\n";
            return 2;
        }
    }

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"worked examples replay exactly", fixtures},
        {"composition matches the multinomial oracle", oracle},
        {"theorem suites find no counterexample", suites},
        {"negative controls break the conclusion", negative_controls},
        {"iterates of x^2 + sqrt(2) keep deficit 2", iterate_pattern},
        {"decomposition obstruction", obstruction},
        {"parser round trip, errors and CLI exit codes", parser_and_cli},
        {"deficit-set suite report", deficit_set},
    };
    int unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("threw ") + e.what();
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail
                  << "\n";
        for (const auto& note : o.notes) std::cout << "     " << note << "\n";
        std::cout.flush();
        if (o.pass == (expected_failures.count(i + 1) > 0)) {
            ++unexpected;
            if (o.pass) std::cout << "     criterion " << i + 1 << " was expected to fail\n";
        }
    }
    if (!expected_failures.empty())
        std::cout << (unexpected ? "unexpected outcomes: " + std::to_string(unexpected)
                                 : std::string("all outcomes as expected"))
                  << "\n";
    return unexpected ? 1 : 0;
}
