#pragma once

#include <stdexcept>
#include <string>

namespace adelic {

/// Failure of a mathematical precondition (not a programming error).
/// `code()` is a stable identifier such as "NotGalois" or "ZeroInverse";
/// the CLI reports it verbatim.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

[[noreturn]] inline void raise(const char* code, const std::string& what) {
    throw DomainError(code, what);
}

}  // namespace adelic
