#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace payroll {

enum class ErrorCode {
    validation,
    not_found,
    conflict,
    referential_conflict,
    io,
    usage,
    internal,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the core carries one of the codes above. `details`
/// holds structured extras: blocking keys for referential conflicts, per-line
/// diagnostics for imports.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, std::vector<std::string> details = {})
        : std::runtime_error(std::move(message)), code_(code), details_(std::move(details)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::vector<std::string>& details() const noexcept { return details_; }

private:
    ErrorCode code_;
    std::vector<std::string> details_;
};

[[noreturn]] inline void fail(ErrorCode code, std::string message, std::vector<std::string> details = {}) {
    throw Error(code, std::move(message), std::move(details));
}

}  // namespace payroll
