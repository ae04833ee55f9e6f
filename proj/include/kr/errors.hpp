#pragma once

#include <stdexcept>
#include <string>

namespace kr {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An embedded table failed one of its structural invariants.
class TableCorrupt : public Error {
 public:
  using Error::Error;
};

/// (family, node) is not one of the supported minuscule cases.
class InvalidCase : public Error {
 public:
  using Error::Error;
};

class NotReduced : public Error {
 public:
  using Error::Error;
};

class IllegalMove : public Error {
 public:
  using Error::Error;
};

class NotSimplyBraided : public Error {
 public:
  using Error::Error;
};

/// A computation would materialize more states than the configured budget.
class ScaleExceeded : public Error {
 public:
  using Error::Error;
};

/// Elements of different levels were combined in one crystal.
class LevelMismatch : public Error {
 public:
  using Error::Error;
};

class MinimalMismatch : public Error {
 public:
  using Error::Error;
};

class FormulaMismatch : public Error {
 public:
  using Error::Error;
};

class NoUniqueSource : public Error {
 public:
  using Error::Error;
};

}  // namespace kr
