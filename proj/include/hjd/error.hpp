// Exception hierarchy. Verdicts (PASS/FAIL) are values, never exceptions;
// exceptions are reserved for malformed input and violated preconditions.

#ifndef HJD_ERROR_HPP
#define HJD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hjd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    using Error::Error;
};
struct FieldMismatch : Error {
    using Error::Error;
};
struct InvalidField : Error {
    using Error::Error;
};
struct ScalarParseError : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct UnknownLabel : Error {
    using Error::Error;
};
/// Input file problems: syntax, shape, or schema. Carries a location when known.
struct InputError : Error {
    using Error::Error;
};
/// A construction's hypotheses were checked and did not hold.
struct PreconditionFailed : Error {
    using Error::Error;
};
struct NotInvertible : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};

}  // namespace hjd

#endif  // HJD_ERROR_HPP
