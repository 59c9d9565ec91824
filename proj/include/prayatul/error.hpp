#pragma once

#include <stdexcept>
#include <string>

namespace prayatul {

/// Classifies every failure the library can report. Input validation is
/// strict: nothing is dropped or repaired silently.
enum class ErrorCode {
    LengthMismatch,
    IdMismatch,
    EmptyInput,
    MissingFile,
    BadHeader,
    DuplicateId,
    MalformedRow,
    MissingInstance,
    ExtraInstance,
    SchemaError,
    MissingFold,
    UnknownPrimary,
    UnknownPositiveClass,
    MixedPair,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace prayatul
