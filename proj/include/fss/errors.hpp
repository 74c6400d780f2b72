#pragma once

#include <stdexcept>
#include <string>

namespace fss {

// Raised for malformed or inconsistent input files (exit code 2 territory).
class IngestError : public std::runtime_error {
public:
    explicit IngestError(const std::string& what) : std::runtime_error(what) {}
};

// Raised for lookups of unregistered keys (SDS codes, (uda, rank) pairs, ...).
class LookupError : public std::runtime_error {
public:
    explicit LookupError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a numeric routine is handed an invalid argument or a
// degenerate problem (zero-variance denominator, rank-deficient design).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fss
