#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gf2circ {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class UnsupportedDegree : public Error {
  public:
    using Error::Error;
};

class DegreeMismatch : public Error {
  public:
    using Error::Error;
};

class DegreeTooSmall : public Error {
  public:
    using Error::Error;
};

class NoGnbFound : public Error {
  public:
    using Error::Error;
};

class InvalidParams : public Error {
  public:
    using Error::Error;
};

class ExponentOutOfRange : public Error {
  public:
    using Error::Error;
};

class ConstructionFailed : public Error {
  public:
    using Error::Error;
};

class WidthMismatch : public Error {
  public:
    using Error::Error;
};

class InvalidGate : public Error {
  public:
    using Error::Error;
};

/// Netlist text could not be read. `line()` is 1-based.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

  private:
    std::size_t line_;
    std::string reason_;
};

} // namespace gf2circ
