#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Raised when a caller violates a documented precondition (CLI exit code 2).
class precondition_error : public std::runtime_error {
public:
    precondition_error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Raised when an internal consistency check fails; these indicate bugs,
// not user error (CLI exit code 3).
class internal_error : public std::logic_error {
public:
    internal_error(std::string kind, const std::string& message)
        : std::logic_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

} // namespace toric
