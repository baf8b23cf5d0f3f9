#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metaopt {

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 1-based position inside a textual input.
struct SourceSpan {
    std::size_t line = 1;
    std::size_t column = 1;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

class ParseError : public Error {
public:
    ParseError(SourceSpan span, const std::string& message)
        : Error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message)
        , span_(span)
        , detail_(message) {}

    [[nodiscard]] SourceSpan span() const noexcept { return span_; }
    [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

private:
    SourceSpan span_;
    std::string detail_;
};

/// An enumeration would exceed a configured atom or subset cap.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

/// Input violates an operation's precondition (e.g. a proper disjunction where an
/// extended program is required).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Reified facts are malformed or inconsistent.
class ReifyError : public Error {
public:
    using Error::Error;
};

} // namespace metaopt
