#ifndef FLAGCODE_ERROR_HPP
#define FLAGCODE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace flagcode {

/// Failure categories raised by the library. The numeric values are part of
/// the C ABI (see flagcode.h) and must not be reordered.
enum class ErrorCode : int {
    InvalidArgument = 1,
    NonPrimeP = 2,
    ModulusNotPrimitive = 3,
    DivisionByZero = 4,
    NotPrimitive = 5,
    IndexOutOfRange = 6,
    DimensionMismatch = 7,
    AmbientMismatch = 8,
    TooLarge = 9,
    TypeMismatch = 10,
    CodeTooSmall = 11,
    NotDivisor = 12,
    NotPlanar = 13,
    RankDeficient = 14,
    TypeNotSubset = 15,
    ShapeMismatch = 16,
    NotDisjoint = 17,
    ParseError = 18,
    FieldMismatch = 19,
    DuplicateFlag = 20,
    IoError = 21,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failures carry the 1-based line number of the offending input line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace flagcode

#endif  // FLAGCODE_ERROR_HPP
