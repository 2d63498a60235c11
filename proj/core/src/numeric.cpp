#include "spectra/numeric.hpp"

#include <cstdlib>
#include <sstream>

namespace spectra {

const char* to_string(Err e) {
  switch (e) {
    case Err::NotConvex: return "NotConvex";
    case Err::Degenerate: return "Degenerate";
    case Err::NotSymmetric: return "NotSymmetric";
    case Err::FacetNotSymmetric: return "FacetNotSymmetric";
    case Err::IsPrism: return "IsPrism";
    case Err::BadIndex: return "BadIndex";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::TooFew: return "TooFew";
    case Err::EmptySet: return "EmptySet";
    case Err::ContinuousKind: return "ContinuousKind";
    case Err::NotNormalized: return "NotNormalized";
    case Err::InsufficientWindow: return "InsufficientWindow";
    case Err::Unsupported: return "Unsupported";
    case Err::NotAWindow: return "NotAWindow";
    case Err::ExactRequired: return "ExactRequired";
    case Err::BadInput: return "BadInput";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

std::optional<Rat> snap_rational(double x, double eps, std::int64_t max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  // Continued-fraction convergents p/q of x with q capped at max_den.
  double a = x;
  std::int64_t p0 = 1, q0 = 0, p1 = (std::int64_t)std::floor(a), q1 = 1;
  double frac = a - std::floor(a);
  for (int it = 0; it < 64; ++it) {
    double approx = double(p1) / double(q1);
    if (std::abs(approx - x) <= eps) return Rat(Int(p1), Int(q1));
    if (frac < 1e-18) break;
    a = 1.0 / frac;
    double fl = std::floor(a);
    if (fl > 9e17) break;
    std::int64_t ai = (std::int64_t)fl;
    frac = a - fl;
    std::int64_t p2 = ai * p1 + p0;
    std::int64_t q2 = ai * q1 + q0;
    if (q2 > max_den || q2 <= 0 || std::abs(double(p2)) > 9e17) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
  }
  if (std::abs(double(p1) / double(q1) - x) <= eps && q1 <= max_den) return Rat(Int(p1), Int(q1));
  return std::nullopt;
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      Int num(s.substr(0, slash));
      Int den(s.substr(slash + 1));
      if (den == 0) raise(Err::BadInput, "zero denominator in '" + s + "'");
      return Rat(num, den);
    }
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos) {
      double v = std::strtod(s.c_str(), nullptr);
      auto snapped = snap_rational(v);
      if (!snapped) raise(Err::ExactRequired, "decimal '" + s + "' has no small rational form");
      return *snapped;
    }
    return Rat(Int(s));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    raise(Err::BadInput, "cannot parse rational '" + s + "'");
  }
}

std::string rat_to_string(const Rat& x) {
  std::ostringstream os;
  os << numerator(x);
  if (denominator(x) != 1) os << "/" << denominator(x);
  return os.str();
}

std::string Scalar::str() const {
  if (q_) return rat_to_string(*q_);
  std::ostringstream os;
  os.precision(17);
  os << d_;
  return os.str();
}

Scalar scalar_from_token(const std::string& tok) {
  if (tok.find('/') != std::string::npos) return Scalar(rat_from_string(tok));
  if (tok.find('.') == std::string::npos && tok.find('e') == std::string::npos &&
      tok.find('E') == std::string::npos) {
    try {
      return Scalar(Rat(Int(tok)));
    } catch (const std::exception&) {
      raise(Err::BadInput, "cannot parse number '" + tok + "'");
    }
  }
  char* end = nullptr;
  double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str()) raise(Err::BadInput, "cannot parse number '" + tok + "'");
  if (auto q = snap_rational(v)) return Scalar(*q);
  return Scalar(v);
}

}  // namespace spectra
