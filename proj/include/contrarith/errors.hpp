#pragma once

#include <stdexcept>
#include <string>

namespace contrarith {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed numeral / numeric string.
class FormatError : public Error {
public:
  using Error::Error;
};

// Mathematically undefined request (division by zero, k=0 derivations, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

// A sampling/template constraint could not be satisfied.
class ConstraintError : public Error {
public:
  using Error::Error;
};

// Generation gave up (resample budget exhausted, bad config).
class GenerationError : public Error {
public:
  using Error::Error;
};

// File or JSON payload failed to parse/validate on load.
class LoadError : public Error {
public:
  using Error::Error;
};

// Could not write an output file.
class WriteError : public Error {
public:
  using Error::Error;
};

// Rendered text does not fit the image style.
class LayoutError : public Error {
public:
  using Error::Error;
};

// Inconsistent scoring inputs (duplicate ids, unmatched records).
class ScoringError : public Error {
public:
  using Error::Error;
};

} // namespace contrarith
