#pragma once

// Brute-force oracles, seeded generators and checkers for the composition theorems.
//
// Every checker evaluates the hypotheses and the conclusion independently, so inputs that
// violate a hypothesis are reported (VACUOUS, with the failed hypothesis named) rather than
// skipped. COUNTEREXAMPLE_TO_CONCLUSION on a field context is a bug in this library.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "deficitlab/poly2.hpp"

namespace deficitlab {

enum class TheoremId { T1, C1, T1A, T2, P1, L1, T3, T4, IterIneq, T5, Ring, FF, TwoVar, DeficitSetT1 };

std::string_view to_string(TheoremId id) noexcept;
std::optional<TheoremId> theorem_from_string(std::string_view name);
const std::vector<TheoremId>& all_theorems();

enum class Classification { Confirms, Vacuous, CounterexampleToConclusion };
std::string_view to_string(Classification c) noexcept;

struct NamedCheck {
    std::string name;
    bool holds = false;
};

struct Witness {
    std::string label;  // "p", "q", "p∘q", "p^[r]", ...
    DeficitReport report;
};

struct TheoremVerdict {
    TheoremId id = TheoremId::T1;
    std::string context;
    std::vector<NamedCheck> hypotheses;
    bool hypotheses_met = false;
    std::vector<NamedCheck> conclusions;
    bool conclusion_holds = false;
    std::vector<Witness> witnesses;
    /// Indices of coefficients (univariate) or homogeneous parts (bivariate) of the
    /// composed result that lie outside F.
    std::vector<std::size_t> offending_indices;
    Classification classification = Classification::Vacuous;

    /// Name of the first unmet hypothesis, empty when all hold.
    std::string failed_hypothesis() const;
    const DeficitReport* witness(std::string_view label) const;
};

struct TheoremInputs {
    std::optional<Poly1> p;
    std::optional<Poly1> q;
    std::optional<Poly2> q2;  // TWO_VAR
    unsigned r = 0;           // T4, ITER_INEQ, T5
};

/// Throws ArityMismatch when the inputs do not fit the theorem and InadmissibleContext
/// when the context kind does not match (RING: Z<Q; FF: finite fields; DEFICIT_SET_T1:
/// set contexts; others: characteristic-0 fields).
TheoremVerdict verify_theorem(TheoremId id, const TheoremInputs& inputs, const ContextPtr& ctx);

/// True when `id` may be checked over `ctx`.
bool admissible(TheoremId id, const FieldContext& ctx) noexcept;

// ---------------------------------------------------------------------------
// Oracles

/// p∘q by literal multinomial expansion of a_k (Σ b_j x^j)^k. Independent of Poly1
/// multiplication. Throws DegreeOverflow past `max_coefficients`.
Poly1 compose_oracle(const Poly1& p, const Poly1& q, std::size_t max_coefficients = kDefaultCoefficientCap);

/// Bivariate twin: p(q(x, y)) by multinomial expansion over the monomials of q.
Poly2 compose_oracle2(const Poly1& p, const Poly2& q, std::size_t max_coefficients = kDefaultCoefficientCap);

// ---------------------------------------------------------------------------
// Generators

enum class Membership { Any, InF, NotInF };

struct GenConstraints {
    std::size_t min_degree = 0;
    std::size_t max_degree = 5;
    Membership leading = Membership::Any;
    Membership constant = Membership::Any;
    bool non_f_at_positive_index = false;  // some a_j ∉ F with j ≥ 1
    bool non_f_anywhere = false;           // p ∉ F[x]
    bool all_in_f = false;                 // p ∈ F[x]
    std::optional<std::uint64_t> degree_not_divisible_by;
    std::optional<std::uint64_t> degree_divisible_by;
    std::vector<Element> pool;  // empty: default_pool(ctx)
    std::uint64_t seed = 0;
};

struct GenConstraints2 {
    std::size_t min_degree = 1;
    std::size_t max_degree = 3;
    bool top_part_in_f = false;
    bool non_f_part_at_positive_degree = false;
    std::vector<Element> pool;
    std::uint64_t seed = 0;
};

/// Small readable coefficients: {0, ±1, ±2, 1/2} plus context-specific elements outside F
/// (radicals, t, powers of g).
std::vector<Element> default_pool(const ContextPtr& ctx);

/// Deterministic in (ctx, constraints). Throws UnsatisfiableConstraints.
Poly1 random_poly(const ContextPtr& ctx, const GenConstraints& constraints);
Poly2 random_poly2(const ContextPtr& ctx, const GenConstraints2& constraints);

/// Seed of trial `index` in a suite seeded with `suite_seed`.
std::uint64_t trial_seed(std::uint64_t suite_seed, std::uint64_t index) noexcept;

// ---------------------------------------------------------------------------
// Suites

struct SuiteCaps {
    std::size_t max_degree = 5;
    std::size_t max_degree_bivariate = 3;
    std::size_t max_iterate_degree = 81;  // n^r bound
    unsigned max_r = 3;
};

enum class SuiteMode {
    Standard,
    /// Inputs built to break one hypothesis (FF: t | deg p; T2: a_n·b_m ∉ F). The run
    /// looks for conclusion failures and never aborts.
    NegativeControl,
};

struct CounterexampleRecord {
    std::uint64_t seed = 0;
    std::size_t trial = 0;
    std::string p;
    std::string q;
    unsigned r = 0;
    TheoremVerdict verdict;
};

struct SuiteReport {
    TheoremId theorem = TheoremId::T1;
    std::string context;
    SuiteMode mode = SuiteMode::Standard;
    bool empirical = false;  // set contexts and negative controls never abort
    std::size_t trials = 0;
    std::size_t trials_run = 0;
    std::size_t confirms = 0;
    std::size_t vacuous = 0;
    /// Trials whose conclusion failed, hypotheses met or not.
    std::size_t conclusion_failures = 0;
    std::vector<CounterexampleRecord> counterexamples;
    /// First trial (any classification) whose conclusion failed; reproducer for negative controls.
    std::optional<CounterexampleRecord> first_conclusion_failure;
    bool aborted = false;
    std::uint64_t seed = 0;
    SuiteCaps caps;
    double runtime_ms = 0;

    bool field_counterexample() const noexcept { return !empirical && !counterexamples.empty(); }
};

/// Runs `trials` seeded checks of `id` over `ctx`. A counterexample on a non-empirical run
/// stops the suite with its reproducer.
SuiteReport run_suite(TheoremId id, const ContextPtr& ctx, std::size_t trials, std::uint64_t seed,
                      SuiteCaps caps = {}, SuiteMode mode = SuiteMode::Standard);

/// Built-in contexts each theorem is exercised over.
std::vector<ContextPtr> default_suite_contexts(TheoremId id);

// ---------------------------------------------------------------------------
// Applications

struct ObstructionVerdict {
    bool impossible = false;
    std::string reason;
};

/// Can r = p∘q for some p? IMPOSSIBLE only when a proved theorem forces a deficit (or
/// membership) that r does not have; otherwise INCONCLUSIVE. Never claims decomposability.
/// Throws DegreeIncompatible unless deg q ≥ 2 and deg q | deg r.
ObstructionVerdict decomposition_obstruction(const Poly1& r, const Poly1& q);

struct FixtureResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct FixtureReport {
    std::vector<FixtureResult> fixtures;
    double runtime_ms = 0;
    bool all_passed() const noexcept;
};

/// Replays every worked example and remark with exact expected outcomes.
FixtureReport worked_examples();

}  // namespace deficitlab
