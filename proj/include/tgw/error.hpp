#pragma once

#include <stdexcept>
#include <string>

namespace tgw {

// Base class for every error raised by the workbench. The CLI maps all of
// them onto exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed fixture text (bad JSON, wrong field types).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A label that was used but never declared.
class ReferenceError : public Error {
 public:
  using Error::Error;
};

// Table dimensions that disagree with |T| or |Gamma|.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (no unit, non-prime ideal, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured caps.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// The base structure fails its axioms and lenient mode was not requested.
class AxiomError : public Error {
 public:
  using Error::Error;
};

}  // namespace tgw
