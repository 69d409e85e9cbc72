#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ore {

/// Malformed arguments: out-of-range vertices, repeated path vertices, etc.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parameters outside the domain where the extremal theorem applies.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Request exceeds a supported size (canonical labeling, oracle, graph6 short form).
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace ore
