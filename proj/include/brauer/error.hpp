#pragma once

#include <stdexcept>
#include <string>

namespace brauer {

// Domain error; the CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Syntax error in a text input, with 1-based position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line(line), col(col) {}

    int line;
    int col;
};

} // namespace brauer
