#pragma once

#include <plaincharts/blowup.hpp>
#include <plaincharts/format.hpp>
#include <plaincharts/projection.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace plaincharts {

/// A self-contained description of one CLI run: the ambient ring, the
/// command to execute, and the command-specific payload. Polynomials and
/// numbers in the payload are exact strings.
struct Scenario {
    std::vector<std::string> ring_vars;
    std::string command; // blowup | rees | project | verify-map | member
    nlohmann::json payload;

    MonomialOrder order = MonomialOrder::grevlex();
    std::uint64_t seed = 0;
    int budget = -1; // -1 keeps the library default
};

/// Outcome of a scenario run. `output` is the structured (JSON) artifact,
/// `text` the human-readable report; both describe the same result.
struct ScenarioResult {
    bool pass = true;
    nlohmann::json output;
    std::string text;
};

/// Validates and loads a scenario document {ring, command, payload,
/// options?}. Throws ValidationError on semantic problems.
Scenario parse_scenario(const nlohmann::json& doc);

/// parse_scenario after JSON parsing; JSON syntax errors become ParseError.
Scenario parse_scenario_text(const std::string& text);

/// Executes the scenario. Input problems (unparsable polynomials, unknown
/// variables, invalid specs) throw; verification failures are reported in
/// the result with pass = false.
ScenarioResult run_scenario(const Scenario& s);

/// Deterministic serialization of the structured output (sorted keys,
/// 2-space indentation, trailing newline).
std::string structured_text(const ScenarioResult& r);

/// Names accepted by builtin_example, in fixed order.
const std::vector<std::string>& builtin_example_names();

/// The hardcoded worked examples:
///   circle          verify-map on the stereographic pair for x^2+y^2=1
///   surface-3-3     verify-map for x-(x^2+z^2)y against the plane
///   space-curve-2-2 ideal membership on (y^2-x^3+x, z^2-y^3+y)
///   elliptic-blowup plain blowup of {z=0, x-x^3+y^2=0} at the origin
///   a2-origin       Rees charts of the plane blown up at the origin
/// Throws ValidationError on an unknown name, listing the choices.
Scenario builtin_example(const std::string& name);

} // namespace plaincharts
