#ifndef HARNACK_ERRORS_HPP
#define HARNACK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace harnack {

enum class ErrorKind {
    NotHermitian,
    NoConvergence,
    LengthMismatch,
    BadRange,
    BadDomain,
    HypothesisFailed,
    NotUnitary,
    NotPSD,
    StrictContractionRequired,
    SingularHypothesis,
    WeightError,
    UnknownInequality,
    ParseError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace harnack

#endif
