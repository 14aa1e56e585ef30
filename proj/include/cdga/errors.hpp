#pragma once

#include <stdexcept>
#include <string>

namespace cdga {

// Domain/precondition failures (mixed algebras, non-closed inputs, d^2 != 0, ...).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Syntax errors from model/expression text. Positions are 1-based.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ", col " + std::to_string(column_) + ": " + what_),
          line(line_),
          column(column_)
    {
    }
};

}  // namespace cdga
