#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lopant {

enum class ErrorCode {
    InvalidArgument,
    Parse,
    Truncated,
    InvalidHeader,
    Io,
    SizeLimit,
    NoCandidate,
};

class LopError : public std::runtime_error {
public:
    LopError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failure with a 1-based source location.
class ParseError : public LopError {
public:
    ParseError(ErrorCode code, const std::string& what, std::size_t line,
               std::size_t column)
        : LopError(code, what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

inline LopError invalid_argument(const std::string& what) {
    return LopError(ErrorCode::InvalidArgument, what);
}

} // namespace lopant
