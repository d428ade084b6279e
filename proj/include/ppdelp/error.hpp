#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppdelp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text; carries a 1-based line and column.
class ParseError : public Error {
public:
    ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& message)
        : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Well-formed input that violates a structural requirement (bounds, totality, uniqueness).
class ValidationError : public Error {
public:
    using Error::Error;
};

class TypeIInconsistent : public Error {
public:
    TypeIInconsistent() : Error("environmental model admits no probability distribution (Type I inconsistent)") {}
};

class TypeIIInconsistent : public Error {
public:
    TypeIIInconsistent()
        : Error("a world with positive probability activates contradictory facts/strict rules (Type II inconsistent)") {}
};

class InvalidSelection : public Error {
public:
    using Error::Error;
};

} // namespace ppdelp
