#ifndef FGLOCUS_ERROR_HPP
#define FGLOCUS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fglocus {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two operands live in different polynomial rings.
class ContextMismatch : public Error {
public:
  ContextMismatch() : Error("operands belong to different ring contexts") {}
};

/// A precondition on an argument does not hold (unit ideal, non-face, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// An exponent would exceed kMaxExponent.
class ExponentOverflow : public Error {
public:
  using Error::Error;
};

/// The algebraic and combinatorial routes produced different loci.
class MethodDisagreement : public Error {
public:
  using Error::Error;
};

} // namespace fglocus

#endif
