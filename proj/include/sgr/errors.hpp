#pragma once

#include <stdexcept>
#include <string>

namespace sgr {

/// Input outside the mathematical domain of an operation (failed
/// precondition or hypothesis). The message names what was violated.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// An enumeration exceeded its safety cap. Raised instead of truncating,
/// so exhaustiveness claims stay valid.
class EnumerationOverflow : public std::runtime_error {
public:
    EnumerationOverflow(std::size_t cap, std::size_t seen)
        : std::runtime_error("enumeration exceeded safety cap of " + std::to_string(cap) +
                             " weights (saw at least " + std::to_string(seen) + ")"),
          cap_(cap) {}

    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

} // namespace sgr
