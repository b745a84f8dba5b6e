#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boardsat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: tautological clause, out-of-range variable, bad header.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// An engine was handed an instance kind it cannot search (e.g. the
// clause-reading engine on an evaluation-only instance).
class UnsupportedInstance : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// A configured size guard was exceeded (expansion, board width, join rows,
// brute-force width). Never interpreted as an answer.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::string message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line), message_(std::move(message))
    {
    }

    std::size_t line() const noexcept { return line_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::string message_;
};

} // namespace boardsat
