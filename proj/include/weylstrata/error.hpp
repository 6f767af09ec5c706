#pragma once

#include <stdexcept>
#include <string>

namespace weylstrata {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed user input (type strings, labels, CLI arguments).
class InputError : public Error {
public:
    using Error::Error;
};

// Malformed data file; carries the offending line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Data that parsed but contradicts a mathematical invariant.
class DataError : public Error {
public:
    using Error::Error;
};

// No data shipped for the requested type/characteristic.
class Unsupported : public Error {
public:
    using Error::Error;
};

// A backtrack search ran out of its node budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace weylstrata
