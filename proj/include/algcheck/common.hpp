#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace algcheck {

/// Operands drawn from incompatible structures (e.g. two different algebras).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Malformed input data: tables, files, shape parameters.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Outcome of one exhaustive identity check.
///
/// `counterexample` holds the first failing input in the canonical
/// enumeration order of the check, rendered as text.
struct CheckReport {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::optional<std::string> counterexample;

    void fail(std::string witness) {
        if (passed) {
            passed = false;
            counterexample = std::move(witness);
        }
    }
};

} // namespace algcheck
