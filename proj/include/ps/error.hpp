#pragma once

#include <stdexcept>
#include <string>

namespace ps {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Exact division was requested but does not hold; `witness` describes the
// first obstruction (e.g. the remainder term).
struct DivisionError : Error {
  explicit DivisionError(const std::string& what, std::string witness_ = "")
      : Error(what), witness(std::move(witness_)) {}
  std::string witness;
};

// Exponent arithmetic left the supported machine range.
struct ExponentOverflow : Error {
  explicit ExponentOverflow(const std::string& what) : Error(what) {}
};

}  // namespace ps
