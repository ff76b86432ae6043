#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schubert {

// Operands live in different ambient spaces (variable counts, column sizes).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An operator index such as the i of a divided difference is out of range.
struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// A configured size guard was exceeded.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct NotHomogeneousError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidOccurrenceError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what),
          position(pos) {}

    std::size_t position;
};

}  // namespace schubert
