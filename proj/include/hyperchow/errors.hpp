#pragma once

#include <stdexcept>
#include <string>

namespace hyperchow {

enum class Errc {
    NotInImage,
    InfiniteCokernel,
    TorsionGenerator,
    NonGeneric,
    NotACone,
    NotInCone,
    NotRepresentable,
    NotABox,
    NotTopDimensional,
    NotPaired,
    DimensionTooLarge,
    ArrangementMismatch,
    InvalidArrangement,
    ParseError,
    SchemaError,
    ValueError,
    Internal,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotInImage: return "NotInImage";
        case Errc::InfiniteCokernel: return "InfiniteCokernel";
        case Errc::TorsionGenerator: return "TorsionGenerator";
        case Errc::NonGeneric: return "NonGeneric";
        case Errc::NotACone: return "NotACone";
        case Errc::NotInCone: return "NotInCone";
        case Errc::NotRepresentable: return "NotRepresentable";
        case Errc::NotABox: return "NotABox";
        case Errc::NotTopDimensional: return "NotTopDimensional";
        case Errc::NotPaired: return "NotPaired";
        case Errc::DimensionTooLarge: return "DimensionTooLarge";
        case Errc::ArrangementMismatch: return "ArrangementMismatch";
        case Errc::InvalidArrangement: return "InvalidArrangement";
        case Errc::ParseError: return "ParseError";
        case Errc::SchemaError: return "SchemaError";
        case Errc::ValueError: return "ValueError";
        case Errc::Internal: return "Internal";
    }
    return "?";
}

class DomainError : public std::runtime_error {
  public:
    Errc code;
    DomainError(Errc c, const std::string& msg)
        : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) {
    throw DomainError(c, msg);
}

}  // namespace hyperchow
