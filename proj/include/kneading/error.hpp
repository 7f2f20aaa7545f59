#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace kneading {

enum class ErrorCode {
    UnknownSymbol,
    AlphabetMix,
    EmptyInput,
    AlphabetMismatch,
    ShiftOutOfRange,
    AmbiguousAfterCritical,
    MalformedKneading,
    NotInD1,
    NotAdmissible,
    UntranslatableBlock,
    TypeMismatch,
    UnsupportedParity,
    ForbiddenSymbol,
    UnsupportedSymbol,
    NotAFactor,
    DuplicatePoint,
    DegeneratePartition,
    BlockMismatch,
    IllegalFactorPair,
    AssemblyMismatch,
    NonConvergence,
    OrderTooLarge,
    DomainExceeded,
    NoBracket,
    ItineraryMismatch,
};

inline const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::UnknownSymbol: return "UnknownSymbol";
        case ErrorCode::AlphabetMix: return "AlphabetMix";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
        case ErrorCode::ShiftOutOfRange: return "ShiftOutOfRange";
        case ErrorCode::AmbiguousAfterCritical: return "AmbiguousAfterCritical";
        case ErrorCode::MalformedKneading: return "MalformedKneading";
        case ErrorCode::NotInD1: return "NotInD1";
        case ErrorCode::NotAdmissible: return "NotAdmissible";
        case ErrorCode::UntranslatableBlock: return "UntranslatableBlock";
        case ErrorCode::TypeMismatch: return "TypeMismatch";
        case ErrorCode::UnsupportedParity: return "UnsupportedParity";
        case ErrorCode::ForbiddenSymbol: return "ForbiddenSymbol";
        case ErrorCode::UnsupportedSymbol: return "UnsupportedSymbol";
        case ErrorCode::NotAFactor: return "NotAFactor";
        case ErrorCode::DuplicatePoint: return "DuplicatePoint";
        case ErrorCode::DegeneratePartition: return "DegeneratePartition";
        case ErrorCode::BlockMismatch: return "BlockMismatch";
        case ErrorCode::IllegalFactorPair: return "IllegalFactorPair";
        case ErrorCode::AssemblyMismatch: return "AssemblyMismatch";
        case ErrorCode::NonConvergence: return "NonConvergence";
        case ErrorCode::OrderTooLarge: return "OrderTooLarge";
        case ErrorCode::DomainExceeded: return "DomainExceeded";
        case ErrorCode::NoBracket: return "NoBracket";
        case ErrorCode::ItineraryMismatch: return "ItineraryMismatch";
    }
    return "Unknown";
}

/// Every failure in the library is reported through this one exception type;
/// callers branch on code() instead of on a class hierarchy.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail,
          std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(compose(code, detail, position)),
          code_(code),
          position_(position) {}

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    static std::string compose(ErrorCode code, const std::string& detail,
                               std::optional<std::size_t> position) {
        std::string out = to_string(code);
        if (position) out += " at position " + std::to_string(*position);
        if (!detail.empty()) out += ": " + detail;
        return out;
    }

    ErrorCode code_;
    std::optional<std::size_t> position_;
};

}  // namespace kneading
