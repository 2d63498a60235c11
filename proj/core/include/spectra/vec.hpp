#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "spectra/numeric.hpp"

namespace spectra {

template <class T>
struct V2 {
  T x{}, y{};
  friend V2 operator+(const V2& a, const V2& b) { return {a.x + b.x, a.y + b.y}; }
  friend V2 operator-(const V2& a, const V2& b) { return {a.x - b.x, a.y - b.y}; }
  V2 operator-() const { return {-x, -y}; }
  friend V2 operator*(const T& s, const V2& v) { return {s * v.x, s * v.y}; }
  friend bool operator==(const V2& a, const V2& b) { return a.x == b.x && a.y == b.y; }
};

template <class T>
struct V3 {
  T x{}, y{}, z{};
  friend V3 operator+(const V3& a, const V3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend V3 operator-(const V3& a, const V3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  V3 operator-() const { return {-x, -y, -z}; }
  friend V3 operator*(const T& s, const V3& v) { return {s * v.x, s * v.y, s * v.z}; }
  friend bool operator==(const V3& a, const V3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
};

using V2d = V2<double>;
using V2q = V2<Rat>;
using V3d = V3<double>;
using V3q = V3<Rat>;

template <class T>
T dot(const V2<T>& a, const V2<T>& b) {
  return a.x * b.x + a.y * b.y;
}
template <class T>
T dot(const V3<T>& a, const V3<T>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
template <class T>
T cross(const V2<T>& a, const V2<T>& b) {
  return a.x * b.y - a.y * b.x;
}
template <class T>
V3<T> cross(const V3<T>& a, const V3<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
template <class T>
T norm2(const V2<T>& a) {
  return dot(a, a);
}
template <class T>
T norm2(const V3<T>& a) {
  return dot(a, a);
}

inline V2d to_d(const V2q& v) { return {to_double(v.x), to_double(v.y)}; }
inline V3d to_d(const V3q& v) { return {to_double(v.x), to_double(v.y), to_double(v.z)}; }

/// 2x2 exact matrix, column-major semantics col(0)=(a,c), col(1)=(b,d).
struct Mat2q {
  Rat a{}, b{}, c{}, d{};  // [[a b],[c d]]
  V2q apply(const V2q& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Rat det() const { return a * d - b * c; }
  Mat2q transpose() const { return {a, c, b, d}; }
  Mat2q inverse() const {
    Rat dt = det();
    if (dt == 0) raise(Err::Degenerate, "singular 2x2 matrix");
    return {d / dt, -b / dt, -c / dt, a / dt};
  }
  friend Mat2q operator*(const Mat2q& m, const Mat2q& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  static Mat2q identity() { return {1, 0, 0, 1}; }
};

/// 3x3 exact matrix, row-major entries m[r][c].
struct Mat3q {
  std::array<std::array<Rat, 3>, 3> m{};
  V3q apply(const V3q& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
  }
  Rat det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
  static Mat3q identity() {
    Mat3q r;
    r.m[0][0] = r.m[1][1] = r.m[2][2] = 1;
    return r;
  }
};

// Dynamic-dimension points for product spaces (dim 1..4 in practice).
using VecXd = std::vector<double>;
using VecXq = std::vector<Rat>;

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace spectra
