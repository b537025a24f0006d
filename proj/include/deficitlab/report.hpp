#pragma once

// JSON renderings of reports. Polynomials appear in the canonical text form, so every
// document parses back with parse_poly.

#include <nlohmann/json.hpp>

#include "deficitlab/theorems.hpp"

namespace deficitlab {

nlohmann::json to_json(const DeficitReport& r);
nlohmann::json to_json(const TheoremVerdict& v);
nlohmann::json to_json(const CounterexampleRecord& c);
nlohmann::json to_json(const SuiteCaps& caps);
nlohmann::json to_json(const SuiteReport& s);
nlohmann::json to_json(const FixtureReport& f);

/// Short human-readable summaries for the text output mode.
std::string summarize(const DeficitReport& r);
std::string summarize(const SuiteReport& s);

}  // namespace deficitlab
