#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lacalc {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class UnknownVariable : public Error {
public:
    UnknownVariable(const std::string& name, std::size_t position)
        : Error("unknown variable '" + name + "' at position " + std::to_string(position)),
          name_(name), position_(position) {}
    const std::string& name() const { return name_; }
    std::size_t position() const { return position_; }

private:
    std::string name_;
    std::size_t position_;
};

class RankMismatch : public Error {
public:
    using Error::Error;
};

class NonInvertibleVolume : public Error {
public:
    using Error::Error;
};

class SingularMetric : public Error {
public:
    using Error::Error;
};

class NotFiniteDimensional : public Error {
public:
    using Error::Error;
};

class NotClosed : public Error {
public:
    using Error::Error;
};

class ChartMismatch : public Error {
public:
    using Error::Error;
};

class JacobiViolation : public Error {
public:
    using Error::Error;
};

/// Malformed definition file; `path` names the offending field, e.g. `anchor[1][0]`.
class SchemaError : public Error {
public:
    SchemaError(const std::string& path, const std::string& what)
        : Error(path + ": " + what), path_(path) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace lacalc
