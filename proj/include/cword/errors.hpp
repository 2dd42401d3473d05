#pragma once

#include <stdexcept>
#include <string>

namespace cword {

/// Thrown when a computation would exceed a configured memory or depth budget.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by the morphism text-format parser; carries the offending line.
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, int line)
        : std::invalid_argument(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace cword
