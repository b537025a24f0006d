// deficitlab: deficits, compositions and theorem checks from the command line.
//
// Exit status: 0 ok, 1 counterexample on a field context, 2 usage or parse error,
// 3 resource cap.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "deficitlab/parser.hpp"
#include "deficitlab/report.hpp"
#include "deficitlab/theorems.hpp"

using namespace deficitlab;
using nlohmann::json;

namespace {

constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Options {
    std::string field = "Q";
    bool json = false;
    std::uint64_t seed = 0;
    std::size_t trials = 1000;
    std::size_t max_coeffs = kDefaultCoefficientCap;
    std::string out;
};

std::uint64_t seed_from_env() {
    const char* env = std::getenv("DEFICITLAB_SEED");
    if (!env || !*env) return 0;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw CLI::ValidationError("DEFICITLAB_SEED", std::string("not an unsigned integer: ") + env);
    }
}

// Prints `doc` (or `text` in text mode) and mirrors the JSON to --out.
void emit(const Options& opt, const json& doc, const std::string& text) {
    if (opt.json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
    if (!opt.out.empty()) {
        std::ofstream file(opt.out);
        if (!file) throw std::runtime_error("cannot write " + opt.out);
        file << doc.dump(2) << "\n";
    }
}

void check_compose_cap(std::size_t deg_p, std::size_t deg_q, std::size_t cap) {
    if (composed_size(deg_p, deg_q) > cap)
        throw Error(ErrorCode::DegreeOverflow, "composition exceeds " + std::to_string(cap) + " coefficients");
}

int cmd_deficit(const Options& opt, const std::string& text, int arity) {
    const ContextPtr ctx = make_context(opt.field);
    const auto parsed = parse_poly(text, ctx, arity);
    DeficitReport r;
    std::string canonical;
    if (arity == 1) {
        r = deficit1(std::get<Poly1>(parsed));
        canonical = format_poly(std::get<Poly1>(parsed));
    } else {
        r = deficit2(std::get<Poly2>(parsed));
        canonical = format_poly(std::get<Poly2>(parsed));
    }
    json doc = to_json(r);
    doc["field"] = ctx->name();
    doc["polynomial"] = canonical;
    emit(opt, doc, canonical + "\n" + summarize(r) + "\n");
    return 0;
}

int cmd_compose(const Options& opt, const std::string& p_text, const std::string& q_text) {
    const ContextPtr ctx = make_context(opt.field);
    const Poly1 p = parse_poly1(p_text, ctx);
    const Poly1 q = parse_poly1(q_text, ctx);
    if (!p.is_zero() && !q.is_zero()) check_compose_cap(p.degree(), q.degree(), opt.max_coeffs);
    const Poly1 pq = compose(p, q);
    const DeficitReport dp = deficit1(p), dq = deficit1(q), dpq = deficit1(pq);
    json doc{{"field", ctx->name()},       {"p", format_poly(p)},          {"q", format_poly(q)},
             {"composed", format_poly(pq)}, {"deficit_p", to_json(dp)},    {"deficit_q", to_json(dq)},
             {"deficit_composed", to_json(dpq)}};
    emit(opt, doc,
         format_poly(pq) + "\np:    " + summarize(dp) + "\nq:    " + summarize(dq) + "\np(q): " + summarize(dpq) +
             "\n");
    return 0;
}

int cmd_iterate(const Options& opt, const std::string& p_text, unsigned r) {
    const ContextPtr ctx = make_context(opt.field);
    const Poly1 p = parse_poly1(p_text, ctx);
    const Poly1 pr = iterate(p, r, opt.max_coeffs);
    const DeficitReport dp = deficit1(p), dpr = deficit1(pr);
    json doc{{"field", ctx->name()},      {"p", format_poly(p)},       {"r", r},
             {"iterate", format_poly(pr)}, {"deficit_p", to_json(dp)}, {"deficit_iterate", to_json(dpr)}};
    emit(opt, doc, format_poly(pr) + "\np:     " + summarize(dp) + "\np^[r]: " + summarize(dpr) + "\n");
    return 0;
}

int cmd_compose2(const Options& opt, const std::string& p_text, const std::string& q_text) {
    const ContextPtr ctx = make_context(opt.field);
    const Poly1 p = parse_poly1(p_text, ctx);
    const Poly2 q = parse_poly2(q_text, ctx);
    if (!p.is_zero() && !q.is_zero()) check_compose_cap(p.degree(), q.total_degree(), opt.max_coeffs);
    const Poly2 pq = compose_uni_bi(p, q);
    const DeficitReport dp = deficit1(p), dq = deficit2(q), dpq = deficit2(pq);
    json doc{{"field", ctx->name()},       {"p", format_poly(p)},          {"q", format_poly(q)},
             {"composed", format_poly(pq)}, {"deficit_p", to_json(dp)},    {"deficit_q", to_json(dq)},
             {"deficit_composed", to_json(dpq)}};
    emit(opt, doc,
         format_poly(pq) + "\np:    " + summarize(dp) + "\nq:    " + summarize(dq) + "\np(q): " + summarize(dpq) +
             "\n");
    return 0;
}

// p(q, q) with q univariate when it parses as such, bivariate otherwise.
int cmd_diag(const Options& opt, const std::string& p_text, const std::string& q_text) {
    const ContextPtr ctx = make_context(opt.field);
    const Poly2 p = parse_poly2(p_text, ctx);
    const Poly2 q2 = parse_poly2(q_text, ctx);
    if (!p.is_zero() && !q2.is_zero()) check_compose_cap(p.total_degree(), q2.total_degree(), opt.max_coeffs);
    std::string composed;
    DeficitReport dq, dr;
    if (q2.degree_in_y() == 0) {
        const Poly1 q = to_univariate(q2);
        const Poly1 r = diag_subst_uni(p, q);
        composed = format_poly(r);
        dq = deficit1(q);
        dr = deficit1(r);
    } else {
        const Poly2 r = diag_subst_bi(p, q2);
        composed = format_poly(r);
        dq = deficit2(q2);
        dr = deficit2(r);
    }
    const DeficitReport dp = deficit2(p);
    json doc{{"field", ctx->name()}, {"p", format_poly(p)},      {"q", format_poly(q2)},
             {"composed", composed}, {"deficit_p", to_json(dp)}, {"deficit_q", to_json(dq)},
             {"deficit_composed", to_json(dr)}};
    emit(opt, doc,
         composed + "\np:      " + summarize(dp) + "\nq:      " + summarize(dq) + "\np(q,q): " + summarize(dr) + "\n");
    return 0;
}

int cmd_examples(const Options& opt) {
    const FixtureReport report = worked_examples();
    std::string text;
    for (const auto& f : report.fixtures)
        text += std::string(f.passed ? "ok    " : "FAIL  ") + f.name + ": " + f.detail + "\n";
    text += std::to_string(report.fixtures.size()) + " fixtures, " +
            (report.all_passed() ? "all passed" : "FAILURES") + "\n";
    emit(opt, to_json(report), text);
    return report.all_passed() ? 0 : kExitCounterexample;
}

struct VerifyArgs {
    std::string id = "all";
    bool examples = false;
    bool negative = false;
    std::string p, q;
    unsigned r = 0;
};

int verify_single(const Options& opt, TheoremId id, const VerifyArgs& args) {
    const ContextPtr ctx = make_context(opt.field);
    TheoremInputs in;
    in.p = parse_poly1(args.p, ctx);
    if (!args.q.empty()) {
        if (id == TheoremId::TwoVar)
            in.q2 = parse_poly2(args.q, ctx);
        else
            in.q = parse_poly1(args.q, ctx);
    }
    in.r = args.r;
    const TheoremVerdict v = verify_theorem(id, in, ctx);
    std::string text = std::string(to_string(v.classification)) + "\n";
    for (const auto& h : v.hypotheses) text += std::string(h.holds ? "  hyp  ok   " : "  hyp  FAIL ") + h.name + "\n";
    for (const auto& c : v.conclusions) text += std::string(c.holds ? "  conc ok   " : "  conc FAIL ") + c.name + "\n";
    for (const auto& w : v.witnesses) text += "  " + w.label + ": " + summarize(w.report) + "\n";
    emit(opt, to_json(v), text);
    const bool field_failure = v.classification == Classification::CounterexampleToConclusion &&
                               id != TheoremId::DeficitSetT1;
    return field_failure ? kExitCounterexample : 0;
}

int cmd_verify(const Options& opt, bool field_given, const VerifyArgs& args) {
    if (args.examples) return cmd_examples(opt);

    std::vector<TheoremId> ids;
    if (args.id == "all") {
        ids = all_theorems();
    } else if (auto id = theorem_from_string(args.id)) {
        ids.push_back(*id);
    } else {
        throw CLI::ValidationError("theorem", "unknown theorem id '" + args.id + "'");
    }
    if (!args.p.empty()) {
        if (ids.size() != 1) throw CLI::ValidationError("--p", "explicit inputs need a single theorem id");
        return verify_single(opt, ids.front(), args);
    }

    json reports = json::array();
    std::string text;
    bool field_failure = false;
    for (TheoremId id : ids) {
        std::vector<ContextPtr> contexts;
        if (field_given)
            contexts.push_back(make_context(opt.field));
        else if (args.negative)
            contexts.push_back(make_context(id == TheoremId::FF ? "GF(2^2)" : "Q(sqrt 2, sqrt 3)"));
        else
            contexts = default_suite_contexts(id);
        if (args.negative && id != TheoremId::FF && id != TheoremId::T2) {
            if (ids.size() == 1) throw Error(ErrorCode::InadmissibleContext, "negative controls exist for FF and T2 only");
            continue;
        }
        for (const ContextPtr& ctx : contexts) {
            if (ids.size() > 1 && !admissible(id, *ctx)) continue;
            const SuiteReport s = run_suite(id, ctx, opt.trials, opt.seed, SuiteCaps{},
                                            args.negative ? SuiteMode::NegativeControl : SuiteMode::Standard);
            field_failure |= s.field_counterexample();
            reports.push_back(to_json(s));
            text += summarize(s) + "\n";
            for (const auto& c : s.counterexamples)
                text += "  trial " + std::to_string(c.trial) + ": p = " + c.p + (c.q.empty() ? "" : ", q = " + c.q) +
                        (c.r ? ", r = " + std::to_string(c.r) : "") + "\n";
            if (args.negative && s.first_conclusion_failure) {
                const auto& c = *s.first_conclusion_failure;
                text += "  first violation at trial " + std::to_string(c.trial) + ": p = " + c.p + ", q = " + c.q +
                        "\n";
            }
        }
    }
    emit(opt, json{{"suites", reports}, {"field_counterexample", field_failure}}, text);
    return field_failure ? kExitCounterexample : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"F-deficits of polynomial compositions"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    try {
        opt.seed = seed_from_env();
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    auto* field_opt = app.add_option("--field", opt.field, "field pair, e.g. \"Q(sqrt 2, sqrt 3)\", \"GF(3^2)\", \"Z<Q\"");
    app.add_flag("--json", opt.json, "JSON output");
    app.add_option("--seed", opt.seed, "suite seed (default: $DEFICITLAB_SEED or 0)");
    app.add_option("--trials", opt.trials, "trials per suite")->check(CLI::PositiveNumber);
    app.add_option("--max-coeffs", opt.max_coeffs, "coefficient cap for compositions and iterates")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", opt.out, "also write the JSON report to this file");

    std::string p_text, q_text;
    int arity = 1;
    unsigned r = 1;
    VerifyArgs verify;

    auto* deficit = app.add_subcommand("deficit", "F-deficit of a polynomial");
    deficit->add_option("polynomial", p_text)->required();
    deficit->add_option("--arity", arity, "1 (x) or 2 (x, y)")->check(CLI::IsMember({1, 2}));

    auto* deficit2 = app.add_subcommand("deficit2", "F-deficit of a polynomial in x and y");
    deficit2->add_option("polynomial", p_text)->required();

    auto* compose = app.add_subcommand("compose", "p(q(x)) and the deficits involved");
    compose->add_option("p", p_text)->required();
    compose->add_option("q", q_text)->required();

    auto* iterate = app.add_subcommand("iterate", "r-fold self-composition of p");
    iterate->add_option("p", p_text)->required();
    iterate->add_option("r", r)->required()->check(CLI::PositiveNumber);

    auto* compose2 = app.add_subcommand("compose2", "p(q(x, y)) for univariate p");
    compose2->add_option("p", p_text)->required();
    compose2->add_option("q", q_text)->required();

    auto* diag = app.add_subcommand("diag", "p(q, q) for bivariate p");
    diag->add_option("p", p_text)->required();
    diag->add_option("q", q_text)->required();

    auto* verify_cmd = app.add_subcommand("verify", "run theorem suites, or check one theorem on given inputs");
    verify_cmd->add_option("theorem", verify.id, "theorem id or \"all\"");
    verify_cmd->add_flag("--examples", verify.examples, "replay the worked examples instead");
    verify_cmd->add_flag("--negative", verify.negative, "negative-control suites (FF, T2)");
    verify_cmd->add_option("--p", verify.p, "explicit p");
    verify_cmd->add_option("--q", verify.q, "explicit q");
    verify_cmd->add_option("--r", verify.r, "iterate count for T4, ITER_INEQ, T5");

    auto* examples = app.add_subcommand("examples", "replay the worked examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (deficit->parsed()) return cmd_deficit(opt, p_text, arity);
        if (deficit2->parsed()) return cmd_deficit(opt, p_text, 2);
        if (compose->parsed()) return cmd_compose(opt, p_text, q_text);
        if (iterate->parsed()) return cmd_iterate(opt, p_text, r);
        if (compose2->parsed()) return cmd_compose2(opt, p_text, q_text);
        if (diag->parsed()) return cmd_diag(opt, p_text, q_text);
        if (verify_cmd->parsed()) return cmd_verify(opt, field_opt->count() > 0, verify);
        if (examples->parsed()) return cmd_examples(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::DegreeOverflow ? kExitResource : kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
