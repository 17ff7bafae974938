#ifndef LATPOS_ERROR_HPP
#define LATPOS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace latpos {

// Stable error codes, shared with the C API and the CLI exit-code map.
enum class ErrorCode {
    BadArgument = 1,            // malformed input, unknown name, out-of-range index
    NotSquare,
    OutOfBounds,
    IndexBeyondTruncation,
    NonInvertibleConstantTerm,
    CapExceeded,                // enumeration refused: instance too large
    CycleDetected,
    BadParameters,
    OutOfWindow,
    SymbolicTermsUnsupported,
    MissingFactorForm,
    HypothesisNotMet,
    UnknownName,
    InvalidWeight,              // weight polynomial with a negative coefficient
    ParseError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace latpos

#endif
