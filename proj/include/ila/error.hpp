#ifndef ILA_ERROR_HPP
#define ILA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ila {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// A value that must be finite (or at least not NaN) was not.
class InvalidValue : public Error {
public:
  using Error::Error;
};

/// A box crosses a cut point of the partition, so it has no class.
class StraddlesPartition : public Error {
public:
  using Error::Error;
};

class UnknownState : public Error {
public:
  using Error::Error;
};

/// Malformed or unreadable file contents.
class FormatError : public Error {
public:
  using Error::Error;
};

} // namespace ila

#endif
