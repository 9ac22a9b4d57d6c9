#pragma once

#include <stdexcept>
#include <string>

namespace liehecke {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (non-prime modulus, r < 2, ...).
class InvalidInput : public Error
{
  public:
    using Error::Error;
};

class DivisionByZero : public Error
{
  public:
    using Error::Error;
};

/// A cyclotomic number was expected to lie in Q(sqrt_star(p)) but does not.
class NotInSubfield : public Error
{
  public:
    using Error::Error;
};

/// lie_project was handed a matrix that is not congruent to I mod p^(r-1).
class NotInKernel : public Error
{
  public:
    using Error::Error;
};

/// Group enumeration would exceed the configured size guard.
class TooLarge : public Error
{
  public:
    using Error::Error;
};

/// An exact quantity that must be integral (or otherwise constrained) is not.
/// Always indicates a bug or a failed identity, never bad user input.
class ConsistencyError : public Error
{
  public:
    using Error::Error;
};

} // namespace liehecke
