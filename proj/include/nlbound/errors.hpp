#pragma once

#include <stdexcept>
#include <string>

namespace nlbound {

// Input or invariant violation: malformed boxes, out-of-range parameters,
// operations whose preconditions do not hold.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation asked outside the domain where it is meaningful, e.g. the
// facet locality test on a signaling box.
class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// The model-label product for two distinct labels strictly inside (2, 4).
class UndefinedOperation : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Non-finite values, non-convergent quadrature, failed iteration.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Root target not bracketed by the search interval.
class BracketError : public NumericError {
public:
    using NumericError::NumericError;
};

}  // namespace nlbound
