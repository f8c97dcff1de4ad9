#pragma once

#include <stdexcept>
#include <string>

namespace quandlekit {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input data: bad table shapes, out-of-range entries, unparseable
// documents. The value under construction never existed.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

// An operation was called outside its stated contract (e.g. asking for the
// right inverse of a table that is not a right quasigroup).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// A request exceeded a configured size cap (enumeration order limits).
class CapacityError : public PreconditionError {
 public:
  explicit CapacityError(const std::string& what) : PreconditionError(what) {}
};

}  // namespace quandlekit
