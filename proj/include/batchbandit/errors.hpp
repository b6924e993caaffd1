#pragma once

#include <stdexcept>
#include <string>

namespace batchbandit {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

struct InvalidGrid : Error {
    using Error::Error;
};

struct Infeasible : Error {
    using Error::Error;
};

struct BatchClosed : Error {
    using Error::Error;
};

struct MissingReward : Error {
    using Error::Error;
};

struct UnknownStep : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line)
        : Error(msg + " (line " + std::to_string(line) + ")"), line_number(line) {}
    std::size_t line_number;
};

struct SchemaError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct DegenerateFit : Error {
    using Error::Error;
};

}  // namespace batchbandit
