#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chainplan {

// Failure while reading one of the textual formats. line is 1-based.
struct ParseError : std::runtime_error {
    ParseError(int line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}
    int line;
};

// Violation of a structural invariant: unknown variable, value outside its
// domain, duplicate id, malformed layout, and the like.
struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by apply() when some precondition binding does not hold in the
// current state. Carries the violated binding for diagnostics.
struct ApplicabilityError : std::runtime_error {
    ApplicabilityError(std::string op, std::string var, std::string required_value,
                       std::string actual_value)
        : std::runtime_error("operator " + op + " not applicable: requires " + var + "=" +
                             required_value + " but " + var + "=" + actual_value),
          operator_id(std::move(op)),
          variable(std::move(var)),
          required(std::move(required_value)),
          actual(std::move(actual_value)) {}
    std::string operator_id;
    std::string variable;
    std::string required;
    std::string actual;
};

// Thrown when a plan's v_s trajectory does not spell out a well-formed
// message. index is the position in v_s's change sequence where the
// alternation (or the expected length) first breaks.
struct NotAdmissibleError : std::runtime_error {
    NotAdmissibleError(std::size_t violation_index, const std::string& message)
        : std::runtime_error(message), index(violation_index) {}
    std::size_t index;
};

} // namespace chainplan
