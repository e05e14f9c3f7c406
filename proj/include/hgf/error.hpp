#pragma once

#include <stdexcept>
#include <string>

namespace hgf {

enum class ErrorKind {
    LengthMismatch,
    NotDisjointModZ,
    NotCoprime,
    NotDivisor,
    DoesNotSplit,
    DivisionByZero,
    ConductorMismatch,
    ConductorNotDividing,
    NotPrime,
    FieldTooLarge,
    NotSubfield,
    ZeroElement,
    NotUnit,
    AssumptionFails,
    ZeroArgument,
    NotPAdicInteger,
    BadPrime,
    ExponentNotIntegral,
    PrecisionTooLarge,
    InternalInconsistency,
    Parse,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotDisjointModZ: return "NotDisjointModZ";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotDivisor: return "NotDivisor";
    case ErrorKind::DoesNotSplit: return "DoesNotSplit";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ConductorMismatch: return "ConductorMismatch";
    case ErrorKind::ConductorNotDividing: return "ConductorNotDividing";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::NotSubfield: return "NotSubfield";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::NotUnit: return "NotUnit";
    case ErrorKind::AssumptionFails: return "AssumptionFails";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::NotPAdicInteger: return "NotPAdicInteger";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::ExponentNotIntegral: return "ExponentNotIntegral";
    case ErrorKind::PrecisionTooLarge: return "PrecisionTooLarge";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Resource limits (field size, p-adic precision) rather than bad input.
    bool is_resource_bound() const noexcept {
        return kind_ == ErrorKind::FieldTooLarge || kind_ == ErrorKind::PrecisionTooLarge;
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& what) { throw Error(k, what); }

} // namespace hgf
