#pragma once

#include <stdexcept>
#include <string>

namespace secdom {

// Bad arguments to a graph or set operation (out-of-range vertex, self-loop,
// violated precondition).
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input graph is not in the class a construction or decomposition requires.
class ClassValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A choice or certificate guaranteed by the underlying structure theory was
// not available. Either the implementation is wrong or an out-of-class graph
// slipped past a skipped validation.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Malformed graph6 or edge-list text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace secdom
