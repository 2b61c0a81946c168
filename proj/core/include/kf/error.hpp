#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition of a library operation was violated by the caller
/// (wrong translation family, open witness, quantifier given to a
/// propositional procedure, unchecked proof handed to a transformer).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Raised by the formula, term and proof-file readers.
class ParseError : public Error {
public:
    enum class Kind { syntax, arity };

    ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          kind_(kind), line_(line), column_(column), message_(message) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

}  // namespace kf
