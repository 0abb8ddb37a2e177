#pragma once

#include <stdexcept>
#include <string>

namespace bentsmith {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NotBent : public Error {
  public:
    NotBent() : Error("function is not bent: spectrum is not flat, dual undefined") {}
};

class OddN : public Error {
  public:
    explicit OddN(int n) : Error("objective undefined for odd n = " + std::to_string(n)) {}
};

class TooLarge : public Error {
  public:
    using Error::Error;
};

class SizeMismatch : public Error {
  public:
    using Error::Error;
};

class UnboundVariable : public Error {
  public:
    using Error::Error;
};

class MissingSeed : public Error {
  public:
    using Error::Error;
};

class ConfigInvalid : public Error {
  public:
    using Error::Error;
};

/// Text input that does not follow one of the documented grammars.
class ParseError : public Error {
  public:
    using Error::Error;
};

}  // namespace bentsmith
