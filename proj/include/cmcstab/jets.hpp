#pragma once

// Forward-mode automatic differentiation scalars and small fixed-size
// vector/matrix templates used by the chart metric and immersion code.
// Nesting Jet<Jet<double,N>,N> yields exact second derivatives.

#include <array>
#include <cmath>
#include <cstddef>
#include <type_traits>

namespace cmcstab {

template <class S, int N>
struct Jet {
  S a{};
  std::array<S, N> d{};

  Jet() = default;
  Jet(double x) : a(x) {}  // NOLINT: implicit promotion of constants
  template <class U = S>
    requires(!std::is_same_v<U, double>)
  Jet(const U& x) : a(x) {}  // NOLINT

  static Jet seed(const S& x, int i) {
    Jet j(x);
    j.d[i] = S(1.0);
    return j;
  }

  Jet& operator+=(const Jet& o) {
    a += o.a;
    for (int i = 0; i < N; ++i) d[i] += o.d[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    a -= o.a;
    for (int i = 0; i < N; ++i) d[i] -= o.d[i];
    return *this;
  }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }

  friend Jet operator-(const Jet& x) {
    Jet r;
    r.a = -x.a;
    for (int i = 0; i < N; ++i) r.d[i] = -x.d[i];
    return r;
  }
  friend Jet operator+(const Jet& x, const Jet& y) {
    Jet r = x;
    r += y;
    return r;
  }
  friend Jet operator-(const Jet& x, const Jet& y) {
    Jet r = x;
    r -= y;
    return r;
  }
  friend Jet operator*(const Jet& x, const Jet& y) {
    Jet r;
    r.a = x.a * y.a;
    for (int i = 0; i < N; ++i) r.d[i] = x.d[i] * y.a + x.a * y.d[i];
    return r;
  }
  friend Jet operator/(const Jet& x, const Jet& y) {
    Jet r;
    S inv = S(1.0) / y.a;
    r.a = x.a * inv;
    for (int i = 0; i < N; ++i) r.d[i] = (x.d[i] - r.a * y.d[i]) * inv;
    return r;
  }

  friend Jet operator+(double x, const Jet& y) { return Jet(x) + y; }
  friend Jet operator-(double x, const Jet& y) { return Jet(x) - y; }
  friend Jet operator*(double x, const Jet& y) { return Jet(x) * y; }
  friend Jet operator/(double x, const Jet& y) { return Jet(x) / y; }
  friend Jet operator+(const Jet& x, double y) { return x + Jet(y); }
  friend Jet operator-(const Jet& x, double y) { return x - Jet(y); }
  friend Jet operator*(const Jet& x, double y) { return x * Jet(y); }
  friend Jet operator/(const Jet& x, double y) { return x / Jet(y); }
};

inline double value_of(double x) { return x; }
template <class S, int N>
double value_of(const Jet<S, N>& x) {
  return value_of(x.a);
}

using std::cos;
using std::sin;
using std::sqrt;

template <class S, int N>
Jet<S, N> sqrt(const Jet<S, N>& x) {
  Jet<S, N> r;
  r.a = sqrt(x.a);
  S half_inv = S(0.5) / r.a;
  for (int i = 0; i < N; ++i) r.d[i] = x.d[i] * half_inv;
  return r;
}

template <class S, int N>
Jet<S, N> sin(const Jet<S, N>& x) {
  Jet<S, N> r;
  r.a = sin(x.a);
  S c = cos(x.a);
  for (int i = 0; i < N; ++i) r.d[i] = x.d[i] * c;
  return r;
}

template <class S, int N>
Jet<S, N> cos(const Jet<S, N>& x) {
  Jet<S, N> r;
  r.a = cos(x.a);
  S ms = -sin(x.a);
  for (int i = 0; i < N; ++i) r.d[i] = x.d[i] * ms;
  return r;
}

// --- small dense linear algebra over an arbitrary scalar ---

template <class T>
struct V3 {
  T x{}, y{}, z{};

  T& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  const T& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  friend V3 operator+(const V3& a, const V3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend V3 operator-(const V3& a, const V3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend V3 operator*(const T& s, const V3& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend V3 operator*(const V3& a, const T& s) { return {a.x * s, a.y * s, a.z * s}; }
  friend V3 operator-(const V3& a) { return {-a.x, -a.y, -a.z}; }
};

template <class T>
struct M3 {
  T m[3][3]{};

  T* operator[](int i) { return m[i]; }
  const T* operator[](int i) const { return m[i]; }

  static M3 identity() {
    M3 r;
    for (int i = 0; i < 3; ++i) r.m[i][i] = T(1.0);
    return r;
  }

  V3<T> operator*(const V3<T>& v) const {
    V3<T> r;
    for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v.x + m[i][1] * v.y + m[i][2] * v.z;
    return r;
  }

  T det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  // adjugate-based inverse; valid for any scalar with division
  M3 inverse() const {
    M3 r;
    T id = T(1.0) / det();
    r.m[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) * id;
    r.m[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) * id;
    r.m[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) * id;
    r.m[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) * id;
    r.m[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) * id;
    r.m[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) * id;
    r.m[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) * id;
    r.m[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) * id;
    r.m[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) * id;
    return r;
  }
};

template <class T>
T inner(const M3<T>& g, const V3<T>& a, const V3<T>& b) {
  T s{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += g[i][j] * a[i] * b[j];
  return s;
}

using Vec3d = V3<double>;
using Mat3d = M3<double>;

inline double dot(const Vec3d& a, const Vec3d& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3d& a) { return std::sqrt(dot(a, a)); }
inline Vec3d cross(const Vec3d& a, const Vec3d& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Vec3d normalized(const Vec3d& a) { return (1.0 / norm(a)) * a; }

}  // namespace cmcstab
