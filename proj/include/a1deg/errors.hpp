#pragma once

#include <stdexcept>
#include <string>

namespace a1deg {

// Error taxonomy. The CLI maps these onto exit codes: parse errors -> 1,
// mathematical precondition failures -> 2, internal contradictions -> 3.
enum class ErrorCode {
    // input / parsing
    ParseError,
    // mathematical preconditions
    ZeroElement,
    DivisionByZero,
    ContextMismatch,
    NotPrime,
    NotIrreducible,
    NotIsolatedZero,
    ZeroIdealInput,
    NonRationalPoint,
    NonRationalImage,
    NotEtale,
    DegenerateCriticalPoint,
    Char2Unsupported,
    RankParityMismatch,
    UnresolvedFiber,
    FactorizationUnsupported,
    PreconditionViolated,
    // internal invariants; reaching these signals a bug, not bad input
    StepLimitExceeded,
    CapExceeded,
    DegenerateForm,
    InternalContradiction,
};

const char* error_code_name(ErrorCode code);

// parse / math / internal, for exit-code mapping.
enum class ErrorClass { Parse, Math, Internal };
ErrorClass error_class(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code), message_(message) {}

    ErrorCode code() const { return code_; }
    const std::string& detail() const { return message_; }

private:
    ErrorCode code_;
    std::string message_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace a1deg
