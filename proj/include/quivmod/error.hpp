#pragma once

#include <stdexcept>
#include <string>

namespace quivmod {

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
    invalid_input = 1,
    precondition = 2,
    consistency = 3,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& message)
        : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Short machine-readable reason tag, e.g. "not_coprime".
    const std::string& code() const noexcept { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

class InvalidInput : public Error {
public:
    InvalidInput(std::string code, const std::string& message)
        : Error(ErrorKind::invalid_input, std::move(code), message) {}
};

class PreconditionError : public Error {
public:
    PreconditionError(std::string code, const std::string& message)
        : Error(ErrorKind::precondition, std::move(code), message) {}
};

class ConsistencyError : public Error {
public:
    ConsistencyError(std::string code, const std::string& message)
        : Error(ErrorKind::consistency, std::move(code), message) {}
};

class BoxGuardExceeded : public PreconditionError {
public:
    BoxGuardExceeded(std::size_t cells, std::size_t limit)
        : PreconditionError("box_guard_exceeded",
                            "enumeration box has " + std::to_string(cells) + " cells, limit is " +
                                std::to_string(limit) + " (raise --max-box)"),
          cells_(cells), limit_(limit) {}

    std::size_t cells() const noexcept { return cells_; }
    std::size_t limit() const noexcept { return limit_; }

private:
    std::size_t cells_;
    std::size_t limit_;
};

}  // namespace quivmod
