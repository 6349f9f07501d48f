#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dcjscen {

// Malformed text input (genome files, scenario/parking/tree text forms).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Well-formed input that violates a domain precondition: genomes that are not
// co-tailed, an invalid parking function, a fission that does not apply, ...
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exhaustive enumeration would exceed its size guard.
class GuardError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace dcjscen
