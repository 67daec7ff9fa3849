#pragma once

#include <stdexcept>
#include <string>

namespace abel {

// Bad user input: malformed expression, parameter outside its domain,
// zero divisor polynomial, and the like. CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : input_error {
    int line;
    int column;
    parse_error(std::string msg, int line_, int col_)
        : input_error(std::move(msg)), line(line_), column(col_) {}
};

// The ideal has infinitely many solutions over some variable.
struct positive_dimensional_error : input_error {
    using input_error::input_error;
};

// Configurable work budget exhausted (S-pair budget, divisor cap). Exit 4.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Backend cross-check disagreement. Exit 3.
struct mismatch_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A guaranteed structural identity failed to hold; signals a solver bug,
// not a user mistake.
struct structure_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Value exists but does not fit in Q(sqrt(D)) for a single D.
struct unrepresentable_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace abel
