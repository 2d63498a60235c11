#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

enum class Err {
  NotConvex,
  Degenerate,
  NotSymmetric,
  FacetNotSymmetric,
  IsPrism,
  BadIndex,
  DimensionMismatch,
  TooFew,
  EmptySet,
  ContinuousKind,
  NotNormalized,
  InsufficientWindow,
  Unsupported,
  NotAWindow,
  ExactRequired,
  BadInput,
  Internal,
};

const char* to_string(Err e);

/// Library error. `kind` is stable and machine-checkable; `what()` carries detail.
class Error : public std::runtime_error {
 public:
  Error(Err kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void raise(Err kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace spectra
