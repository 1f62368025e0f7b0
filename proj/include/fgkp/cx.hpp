#pragma once

// Minimal complex type generic over the scalar (double or DD).
// std::complex is only specified for builtin floats, so we carry our own.

#include <cmath>
#include <string>

#include "fgkp/dd.hpp"

namespace fgkp {

template <class R>
struct Cx {
  R re{};
  R im{};

  constexpr Cx() = default;
  constexpr Cx(R r) : re(r), im(R(0.0)) {}
  constexpr Cx(R r, R i) : re(r), im(i) {}
};

template <class R> inline Cx<R> operator+(Cx<R> a, Cx<R> b) { return {a.re + b.re, a.im + b.im}; }
template <class R> inline Cx<R> operator-(Cx<R> a, Cx<R> b) { return {a.re - b.re, a.im - b.im}; }
template <class R> inline Cx<R> operator-(Cx<R> a) { return {-a.re, -a.im}; }

template <class R>
inline Cx<R> operator*(Cx<R> a, Cx<R> b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

template <class R>
inline Cx<R> operator/(Cx<R> a, Cx<R> b) {
  // Smith's algorithm: robust against intermediate over/underflow
  using std::fabs;
  using fgkp::fabs;
  if (fabs(b.re) >= fabs(b.im)) {
    R r = b.im / b.re;
    R d = b.re + b.im * r;
    return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
  }
  R r = b.re / b.im;
  R d = b.im + b.re * r;
  return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}

template <class R> inline Cx<R> operator+(Cx<R> a, R b) { return {a.re + b, a.im}; }
template <class R> inline Cx<R> operator+(R a, Cx<R> b) { return {a + b.re, b.im}; }
template <class R> inline Cx<R> operator-(Cx<R> a, R b) { return {a.re - b, a.im}; }
template <class R> inline Cx<R> operator-(R a, Cx<R> b) { return {a - b.re, -b.im}; }
template <class R> inline Cx<R> operator*(Cx<R> a, R b) { return {a.re * b, a.im * b}; }
template <class R> inline Cx<R> operator*(R a, Cx<R> b) { return {a * b.re, a * b.im}; }
template <class R> inline Cx<R> operator/(Cx<R> a, R b) { return {a.re / b, a.im / b}; }
template <class R> inline Cx<R> operator/(R a, Cx<R> b) { return Cx<R>(a) / b; }

template <class R> inline Cx<R>& operator+=(Cx<R>& a, Cx<R> b) { return a = a + b; }
template <class R> inline Cx<R>& operator-=(Cx<R>& a, Cx<R> b) { return a = a - b; }
template <class R> inline Cx<R>& operator*=(Cx<R>& a, Cx<R> b) { return a = a * b; }
template <class R> inline Cx<R>& operator/=(Cx<R>& a, Cx<R> b) { return a = a / b; }

template <class R> inline bool operator==(Cx<R> a, Cx<R> b) { return a.re == b.re && a.im == b.im; }
template <class R> inline bool operator!=(Cx<R> a, Cx<R> b) { return !(a == b); }

template <class R> inline Cx<R> conj(Cx<R> a) { return {a.re, -a.im}; }

template <class R>
inline R abs(Cx<R> a) {
  using std::fabs;
  using fgkp::fabs;
  using std::sqrt;
  using fgkp::sqrt;
  R x = fabs(a.re), y = fabs(a.im);
  if (!(x > R(0.0)) && !(y > R(0.0))) return R(0.0);
  if (x < y) { R t = x; x = y; y = t; }
  R r = y / x;
  return x * sqrt(R(1.0) + r * r);
}

template <class R>
inline R norm2(Cx<R> a) { return a.re * a.re + a.im * a.im; }

template <class R>
inline Cx<R> sqrt(Cx<R> a) {
  using std::sqrt;
  using fgkp::sqrt;
  using std::fabs;
  using fgkp::fabs;
  R m = abs(a);
  if (!(m > R(0.0))) return Cx<R>(R(0.0));
  R u = sqrt((m + fabs(a.re)) * R(0.5));
  R v = fabs(a.im) / (u * R(2.0));
  if (a.re >= R(0.0)) return {u, a.im >= R(0.0) ? v : -v};
  return {v, a.im >= R(0.0) ? u : -u};
}

template <class R>
inline Cx<R> exp(Cx<R> a) {
  using std::exp;
  using fgkp::exp;
  R m = exp(a.re);
  R s, c;
  if constexpr (std::is_same_v<R, double>) {
    s = std::sin(a.im);
    c = std::cos(a.im);
  } else {
    sincos(a.im, s, c);
  }
  return {m * c, m * s};
}

template <class R>
inline Cx<R> log(Cx<R> a) {
  using std::log;
  using fgkp::log;
  R m = abs(a);
  R arg;
  if constexpr (std::is_same_v<R, double>) {
    arg = std::atan2(a.im, a.re);
  } else {
    arg = atan2(a.im, a.re);
  }
  return {log(m), arg};
}

using CxD = Cx<double>;

}  // namespace fgkp
