#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "spectra/error.hpp"

namespace spectra {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Comparison context for float-mode operations. Every tolerance-based
/// comparison in the library goes through one of these.
struct Tol {
  double abs = 1e-9;
};

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

inline bool is_integer(double x, double tol) { return std::abs(x - std::round(x)) <= tol; }

/// dist(x, Z) <= tol and the nearest integer is nonzero.
inline bool is_nonzero_integer(double x, double tol) {
  return is_integer(x, tol) && std::round(x) != 0.0;
}

inline bool is_nonzero_integer(const Rat& x) { return is_integer(x) && x != 0; }

inline Int rat_floor(const Rat& x) {
  Int q = numerator(x) / denominator(x);  // truncates toward zero
  if (numerator(x) < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

/// Best rational approximation with denominator <= max_den (continued fractions).
/// Returns nothing if no such rational lies within eps of x.
std::optional<Rat> snap_rational(double x, double eps = 1e-12, std::int64_t max_den = 1000000);

Rat rat_from_string(const std::string& s);  // "p/q", "p", decimal strings
std::string rat_to_string(const Rat& x);    // "p" or "p/q"

/// Tagged scalar: exact rational when available, double mirror always.
/// Arithmetic stays exact only while both operands are exact.
class Scalar {
 public:
  Scalar() : d_(0) { q_ = Rat(0); }
  Scalar(int v) : q_(Rat(v)), d_(double(v)) {}
  Scalar(double v) : d_(v) {}
  Scalar(const Rat& q) : q_(q), d_(to_double(q)) {}

  static Scalar fraction(long num, long den) { return Scalar(Rat(num, den)); }

  bool exact() const { return q_.has_value(); }
  const Rat& rat() const {
    if (!q_) raise(Err::ExactRequired, "scalar has no exact value");
    return *q_;
  }
  double value() const { return d_; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.q_ && b.q_) return Scalar(*a.q_ + *b.q_);
    return Scalar(a.d_ + b.d_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.q_ && b.q_) return Scalar(*a.q_ - *b.q_);
    return Scalar(a.d_ - b.d_);
  }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.q_ && b.q_) return Scalar(*a.q_ * *b.q_);
    return Scalar(a.d_ * b.d_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.q_ && b.q_) {
      if (*b.q_ == 0) raise(Err::Degenerate, "scalar division by zero");
      return Scalar(*a.q_ / *b.q_);
    }
    return Scalar(a.d_ / b.d_);
  }
  Scalar operator-() const { return q_ ? Scalar(-*q_) : Scalar(-d_); }

  // Exact when both sides are exact, plain double comparison otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (a.q_ && b.q_) return *a.q_ == *b.q_;
    return a.d_ == b.d_;
  }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    if (a.q_ && b.q_) return *a.q_ < *b.q_;
    return a.d_ < b.d_;
  }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return a < b || a == b; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return b <= a; }

  std::string str() const;

 private:
  std::optional<Rat> q_;
  double d_;
};

/// Parse a numeric token: integer, decimal (snapped to a small rational when
/// within 1e-12), or "p/q". Decimals that do not snap stay float-only.
Scalar scalar_from_token(const std::string& tok);

}  // namespace spectra
