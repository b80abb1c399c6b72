#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropical {

/// Base of every error raised by the library. Callers that only need to
/// distinguish "bad input" from programming errors catch this.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string &what, std::size_t position)
        : Error(what + " at offset " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

class DimensionError : public Error {
  public:
    using Error::Error;
};

// Raised when every monomial is the tropical zero, i.e. the polynomial is
// identically +inf and has no Newton polyhedron.
class EmptyPolynomialError : public Error {
  public:
    EmptyPolynomialError() : Error("polynomial has no finite monomial") {}
};

class DomainError : public Error {
  public:
    using Error::Error;
};

} // namespace tropical
