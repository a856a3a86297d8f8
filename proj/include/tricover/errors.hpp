#pragma once

#include <stdexcept>
#include <string>

namespace tricover {

// An operation was called outside its stated preconditions.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Division by the zero element of a field or ring.
struct division_by_zero : precondition_error {
    division_by_zero() : precondition_error("division by zero") {}
    explicit division_by_zero(const std::string& what) : precondition_error(what) {}
};

// A breadth-first closure or field enumeration outgrew its cap.
struct cap_exceeded_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A closed-form prediction disagreed with its brute-force oracle.
struct oracle_mismatch_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace tricover
