#pragma once

#include <stdexcept>
#include <string>

namespace cspforge {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed instance or certificate text. `line` is 1-based.
struct ParseError : Error {
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
    int line;
};

// An evaluation or construction would exceed a configured size cap.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

// A transform was applied to an instance that does not meet its precondition.
struct ReductionError : Error {
    explicit ReductionError(const std::string& msg) : Error(msg) {}
};

} // namespace cspforge
