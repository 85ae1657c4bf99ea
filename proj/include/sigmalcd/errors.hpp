#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigmalcd {

enum class ErrorKind {
    NotPrime,
    ReducibleModulus,
    DegreeMismatch,
    FieldTooLarge,
    FieldMismatch,
    DivisionByZero,
    BothZero,
    EmbeddingMissing,
    LengthMismatch,
    DimensionMismatch,
    ImageNotLinear,
    BudgetExceeded,
    NoNonzeroWords,
    GcdNotOne,
    NotShiftClosed,
    DegreeOdd,
    ConstituentNotTrivial,
    NotCyclic,
    NotQuasiCyclic,
    BlocksNotCoprime,
    BlocksNotDistinct,
    ComponentNotLcd,
    InverseMissing,
    GroupMismatch,
    NotAnIdeal,
    ConstructionFailed,
    Parse,
    UnknownSuite,
    Discrepancy,
};

constexpr std::string_view to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::DegreeMismatch: return "DegreeMismatch";
        case ErrorKind::FieldTooLarge: return "FieldTooLarge";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::BothZero: return "BothZero";
        case ErrorKind::EmbeddingMissing: return "EmbeddingMissing";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ImageNotLinear: return "ImageNotLinear";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NoNonzeroWords: return "NoNonzeroWords";
        case ErrorKind::GcdNotOne: return "GcdNotOne";
        case ErrorKind::NotShiftClosed: return "NotShiftClosed";
        case ErrorKind::DegreeOdd: return "DegreeOdd";
        case ErrorKind::ConstituentNotTrivial: return "ConstituentNotTrivial";
        case ErrorKind::NotCyclic: return "NotCyclic";
        case ErrorKind::NotQuasiCyclic: return "NotQuasiCyclic";
        case ErrorKind::BlocksNotCoprime: return "BlocksNotCoprime";
        case ErrorKind::BlocksNotDistinct: return "BlocksNotDistinct";
        case ErrorKind::ComponentNotLcd: return "ComponentNotLcd";
        case ErrorKind::InverseMissing: return "InverseMissing";
        case ErrorKind::GroupMismatch: return "GroupMismatch";
        case ErrorKind::NotAnIdeal: return "NotAnIdeal";
        case ErrorKind::ConstructionFailed: return "ConstructionFailed";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::UnknownSuite: return "UnknownSuite";
        case ErrorKind::Discrepancy: return "Discrepancy";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sigmalcd
