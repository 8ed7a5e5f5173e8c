#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace grouplen {

// Thrown when a computation would exceed a configured resource cap.
// Carries the cap name so callers (e.g. the verification harness) can
// downgrade the failure to a SKIPPED record that names the violated cap.
class cap_error : public std::runtime_error {
public:
    cap_error(std::string cap_name, std::uint64_t limit, std::uint64_t requested)
        : std::runtime_error("cap '" + cap_name + "' exceeded: limit " +
                             std::to_string(limit) + ", required " +
                             std::to_string(requested)),
          cap_name_(std::move(cap_name)), limit_(limit), requested_(requested) {}

    const std::string& cap_name() const { return cap_name_; }
    std::uint64_t limit() const { return limit_; }
    std::uint64_t requested() const { return requested_; }

private:
    std::string cap_name_;
    std::uint64_t limit_;
    std::uint64_t requested_;
};

// Thrown when a certified mathematical fact fails to verify.  This always
// indicates an implementation bug (or corrupted input), never a resource
// limit, so it is kept distinct from cap_error.
class verification_error : public std::logic_error {
public:
    explicit verification_error(const std::string& what)
        : std::logic_error(what) {}
};

// Positioned error for the group-file / corpus grammar.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string message, std::size_t line, std::size_t column)
        : std::runtime_error("parse error at line " + std::to_string(line) +
                             ", column " + std::to_string(column) + ": " + message),
          message_(std::move(message)), line_(line), column_(column) {}

    const std::string& message() const { return message_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

}  // namespace grouplen
