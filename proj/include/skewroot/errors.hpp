#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewroot {

/// Failure conditions surfaced by the library. Each operation documents
/// which of these it can raise.
enum class Errc {
    MixedAlgebras,
    ZeroInverse,
    ZeroDivisorDetected,
    NotConjugate,
    DivisionByZeroPolynomial,
    RightFactorVanishes,
    UnsupportedAlgebra,
    ClassesNotDistinct,
    InternalContradiction,
    CentralFactor,
    CentralFirstFactor,
    MinimalPolynomialTooSmall,
    ElementsCommute,
    WitnessSearchExhausted,
    SyntaxError,
    NoncommutativeAmbiguity,
    InvalidDescriptor,
    InvalidArgument,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::MixedAlgebras: return "MixedAlgebras";
        case Errc::ZeroInverse: return "ZeroInverse";
        case Errc::ZeroDivisorDetected: return "ZeroDivisorDetected";
        case Errc::NotConjugate: return "NotConjugate";
        case Errc::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
        case Errc::RightFactorVanishes: return "RightFactorVanishes";
        case Errc::UnsupportedAlgebra: return "UnsupportedAlgebra";
        case Errc::ClassesNotDistinct: return "ClassesNotDistinct";
        case Errc::InternalContradiction: return "InternalContradiction";
        case Errc::CentralFactor: return "CentralFactor";
        case Errc::CentralFirstFactor: return "CentralFirstFactor";
        case Errc::MinimalPolynomialTooSmall: return "MinimalPolynomialTooSmall";
        case Errc::ElementsCommute: return "ElementsCommute";
        case Errc::WitnessSearchExhausted: return "WitnessSearchExhausted";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::NoncommutativeAmbiguity: return "NoncommutativeAmbiguity";
        case Errc::InvalidDescriptor: return "InvalidDescriptor";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    static constexpr std::size_t no_position = static_cast<std::size_t>(-1);

    Error(Errc code, const std::string& message, std::size_t position = no_position)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code),
          pos_(position) {}

    Errc code() const noexcept { return code_; }

    /// Byte offset into the source text for parse errors; no_position otherwise.
    std::size_t position() const noexcept { return pos_; }

private:
    Errc code_;
    std::size_t pos_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message,
                               std::size_t position = Error::no_position) {
    throw Error(code, message, position);
}

}  // namespace skewroot
