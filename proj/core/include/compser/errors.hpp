#pragma once

#include <stdexcept>
#include <string>

namespace compser {

// Precondition violations: arguments outside the documented domain.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Requests that exceed a configured resource cap (table size, exact-mode degree).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or unreadable input artifacts (tables, configs).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace compser
