#pragma once

#include <stdexcept>
#include <string>

namespace okp {

// Malformed or out-of-contract input (bad JSON, loops, duplicate edges, bad
// vertex indices, caller-violated preconditions). CLI exit code 1.
struct InvalidInputError : std::runtime_error {
    explicit InvalidInputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Input drawing does not satisfy the crossing budget a procedure was asked to
// honor (e.g. an edge crossed more than k times). CLI exit code 2.
struct BoundViolationError : std::runtime_error {
    explicit BoundViolationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Instance exceeds a brute-force oracle's hard size cap. CLI exit code 3.
struct OracleCapError : std::runtime_error {
    explicit OracleCapError(const std::string& msg) : std::runtime_error(msg) {}
};

// A runtime certificate failed: a constructed object violates a bound the
// construction guarantees. Always a bug in this library, never user error.
struct InternalCertificateError : std::logic_error {
    explicit InternalCertificateError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace okp
