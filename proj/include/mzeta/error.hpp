#pragma once

#include <stdexcept>
#include <string>

namespace mzeta {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Value outside the domain of an operation (zero polynomial, p not in C, ...).
struct domain_error : error {
    using error::error;
};

// Operands built over incompatible atom alphabets.
struct alphabet_error : error {
    using error::error;
};

// Division by zero, or a non-exact division where exactness is required.
struct division_error : error {
    using error::error;
};

// A random evaluation point hit a vanishing denominator; caller retries.
struct evaluation_error : error {
    using error::error;
};

// Request exceeds an enumeration or truncation budget.
struct budget_error : error {
    using error::error;
};

// Malformed expression source; carries the 1-based position.
struct parse_error : error {
    parse_error(const std::string& what, int line, int column)
        : error(what + " at line " + std::to_string(line) + ", column " +
                std::to_string(column)),
          line(line), column(column)
    {
    }

    int line;
    int column;
};

} // namespace mzeta
