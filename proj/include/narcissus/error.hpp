#pragma once

#include <stdexcept>
#include <string>

namespace narcissus {

enum class ErrorCode {
    invalid_argument,
    precondition_violated,
    internal_error,
    resource_bound,
    parse_error,
};

inline const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::invalid_argument: return "invalid-argument";
        case ErrorCode::precondition_violated: return "precondition-violated";
        case ErrorCode::internal_error: return "internal-error";
        case ErrorCode::resource_bound: return "resource-bound";
        case ErrorCode::parse_error: return "parse-error";
    }
    return "unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline void require(bool condition, ErrorCode code, const char* what) {
    if (!condition) fail(code, what);
}

}  // namespace detail

}  // namespace narcissus
