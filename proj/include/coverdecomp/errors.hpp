#pragma once

#include <stdexcept>
#include <string>

namespace covdec {

// Input could not be parsed or fails validation. CLI exit code 3.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A verifiable property of the input failed (e.g. the claimed covering
// depth does not hold). CLI exit code 2.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

class InsufficientFold : public VerificationError {
public:
    explicit InsufficientFold(const std::string& what) : VerificationError(what) {}
};

// A property that is guaranteed to hold for correct inputs was observed to
// fail; reaching this is a bug, not a user error. CLI exit code 4.
class StructuralViolation : public std::logic_error {
public:
    explicit StructuralViolation(const std::string& what) : std::logic_error(what) {}
};

class DecompositionFailure : public StructuralViolation {
public:
    explicit DecompositionFailure(const std::string& what) : StructuralViolation(what) {}
};

class SizeBound : public std::runtime_error {
public:
    explicit SizeBound(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace covdec
