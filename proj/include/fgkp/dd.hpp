#pragma once

// Double-double scalar: an unevaluated sum of two doubles giving ~106 bits
// (~31-32 decimal digits). Algorithms follow Dekker/Knuth error-free
// transformations; products use hardware FMA.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>
#include <stdexcept>

namespace fgkp {

struct DD {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DD() = default;
  constexpr DD(double h) : hi(h), lo(0.0) {}
  constexpr DD(double h, double l) : hi(h), lo(l) {}

  explicit operator double() const { return hi + lo; }
};

namespace detail {

inline DD two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

// requires |a| >= |b|
inline DD quick_two_sum(double a, double b) {
  double s = a + b;
  double e = b - (s - a);
  return {s, e};
}

inline DD two_prod(double a, double b) {
  double p = a * b;
  double e = std::fma(a, b, -p);
  return {p, e};
}

}  // namespace detail

inline DD dd_normalize(double hi, double lo) { return detail::quick_two_sum(hi, lo); }

inline DD operator+(DD a, DD b) {
  DD s = detail::two_sum(a.hi, b.hi);
  double e = s.lo + a.lo + b.lo;
  return detail::quick_two_sum(s.hi, e);
}

inline DD operator+(DD a, double b) { return a + DD(b); }
inline DD operator+(double a, DD b) { return DD(a) + b; }

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }
inline DD operator-(DD a, double b) { return a + DD(-b); }
inline DD operator-(double a, DD b) { return DD(a) + (-b); }

inline DD operator*(DD a, DD b) {
  DD p = detail::two_prod(a.hi, b.hi);
  double e = p.lo + a.hi * b.lo + a.lo * b.hi;
  return detail::quick_two_sum(p.hi, e);
}

inline DD operator*(DD a, double b) { return a * DD(b); }
inline DD operator*(double a, DD b) { return DD(a) * b; }

inline DD operator/(DD a, DD b) {
  double q1 = a.hi / b.hi;
  DD r = a - q1 * b;
  double q2 = r.hi / b.hi;
  r = r - q2 * b;
  double q3 = r.hi / b.hi;
  DD q = detail::quick_two_sum(q1, q2);
  return q + DD(q3);
}

inline DD operator/(DD a, double b) { return a / DD(b); }
inline DD operator/(double a, DD b) { return DD(a) / b; }

inline DD& operator+=(DD& a, DD b) { return a = a + b; }
inline DD& operator-=(DD& a, DD b) { return a = a - b; }
inline DD& operator*=(DD& a, DD b) { return a = a * b; }
inline DD& operator/=(DD& a, DD b) { return a = a / b; }

inline bool operator==(DD a, DD b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator!=(DD a, DD b) { return !(a == b); }
inline bool operator<(DD a, DD b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(DD a, DD b) { return b < a; }
inline bool operator<=(DD a, DD b) { return !(b < a); }
inline bool operator>=(DD a, DD b) { return !(a < b); }

inline DD fabs(DD a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }
inline DD abs(DD a) { return fabs(a); }

inline bool isfinite(DD a) { return std::isfinite(a.hi); }

inline DD ldexp(DD a, int n) { return {std::ldexp(a.hi, n), std::ldexp(a.lo, n)}; }

inline DD floor(DD a) {
  double fh = std::floor(a.hi);
  if (fh != a.hi) return {fh, 0.0};
  double fl = std::floor(a.lo);
  return dd_normalize(fh, fl);
}

inline DD round(DD a) { return floor(a + DD(0.5)); }

inline DD sqrt(DD a) {
  if (a.hi == 0.0 && a.lo == 0.0) return DD(0.0);
  if (a.hi < 0.0) throw std::domain_error("dd sqrt of negative value");
  double x = 1.0 / std::sqrt(a.hi);
  double y = a.hi * x;
  // one Newton step on y ~ sqrt(a): y' = y + (a - y^2) * x / 2
  DD y2 = detail::two_prod(y, y);
  DD diff = a - y2;
  return DD(y) + DD(diff.hi * (x * 0.5));
}

// ---- constants (two-limb, exact doubles) ----

inline constexpr DD dd_pi{3.141592653589793116e+00, 1.224646799147353207e-16};
inline constexpr DD dd_2pi{6.283185307179586232e+00, 2.449293598294706414e-16};
inline constexpr DD dd_pi_2{1.570796326794896558e+00, 6.123233995736766036e-17};
inline constexpr DD dd_ln2{6.931471805599452862e-01, 2.319046813846299558e-17};
inline constexpr DD dd_e{2.718281828459045091e+00, 1.445646891729250158e-16};

// ---- elementary functions ----

inline DD exp(DD a) {
  // exp overflow/underflow guards use the double range
  if (a.hi > 709.0) throw std::overflow_error("dd exp overflow");
  if (a.hi < -740.0) return DD(0.0);
  // a = m ln2 + r, |r| <= ln2/2; track s = exp(r 2^-9) - 1 and double it
  // nine times via s <- 2s + s^2, which keeps the relative error tight
  double m = std::floor(a.hi / dd_ln2.hi + 0.5);
  DD r = ldexp(a - dd_ln2 * m, -9);
  DD s = r;
  DD term = r;
  for (int k = 2; k <= 14; ++k) {
    term = term * r / double(k);
    s += term;
    if (std::fabs(term.hi) < 1e-35) break;
  }
  for (int i = 0; i < 9; ++i) s = ldexp(s, 1) + s * s;
  return ldexp(DD(1.0) + s, int(m));
}

inline DD log(DD a) {
  if (a.hi <= 0.0) throw std::domain_error("dd log of non-positive value");
  // Newton on exp(y) = a, seeded from double log
  DD y = DD(std::log(a.hi));
  for (int i = 0; i < 3; ++i) y = y + a * exp(-y) - 1.0;
  return y;
}

namespace detail {

// Taylor sin/cos on |x| <= pi/4
inline void sincos_taylor(DD x, DD& s, DD& c) {
  DD x2 = x * x;
  DD term = x;
  s = x;
  for (int k = 1; k <= 12; ++k) {
    term = term * x2 / double((2 * k) * (2 * k + 1));
    s = (k % 2) ? s - term : s + term;
    if (std::fabs(term.hi) < 1e-35) break;
  }
  term = DD(1.0);
  c = DD(1.0);
  for (int k = 1; k <= 12; ++k) {
    term = term * x2 / double((2 * k - 1) * (2 * k));
    c = (k % 2) ? c - term : c + term;
    if (std::fabs(term.hi) < 1e-35) break;
  }
}

}  // namespace detail

inline void sincos(DD a, DD& s, DD& c) {
  // reduce mod 2pi, then mod pi/2 quadrant; adequate for |a| < ~1e6
  DD x = a - dd_2pi * floor(a / dd_2pi);
  double q = std::floor(x.hi / dd_pi_2.hi + 0.5);
  x = x - dd_pi_2 * q;
  int quad = int(q) & 3;
  DD ss, cc;
  detail::sincos_taylor(x, ss, cc);
  switch (quad) {
    case 0: s = ss; c = cc; break;
    case 1: s = cc; c = -ss; break;
    case 2: s = -ss; c = -cc; break;
    default: s = -cc; c = ss; break;
  }
}

inline DD sin(DD a) { DD s, c; sincos(a, s, c); return s; }
inline DD cos(DD a) { DD s, c; sincos(a, s, c); return c; }

inline DD atan(DD a);

inline DD atan2(DD y, DD x) {
  if (x.hi == 0.0 && y.hi == 0.0) return DD(0.0);
  // Newton on sin/cos: seed from double atan2, refine z s.t. tan(z) = y/x
  DD z = DD(std::atan2(double(y), double(x)));
  DD r = sqrt(x * x + y * y);
  // one correction step: z += sin(dz) ~ (y cos z - x sin z)/r
  for (int i = 0; i < 2; ++i) {
    DD s, c;
    sincos(z, s, c);
    z = z + (y * c - x * s) / r;
  }
  return z;
}

inline DD atan(DD a) { return atan2(a, DD(1.0)); }

// parse a decimal string into DD (enough for config files and literals)
inline DD dd_from_string(const std::string& str) {
  const char* p = str.c_str();
  bool neg = false;
  if (*p == '+' || *p == '-') neg = (*p++ == '-');
  DD acc(0.0);
  int exp10 = 0;
  bool seen_dot = false, any = false;
  for (; *p; ++p) {
    if (*p == '.') {
      if (seen_dot) throw std::invalid_argument("bad dd literal: " + str);
      seen_dot = true;
      continue;
    }
    if (*p == 'e' || *p == 'E') {
      exp10 += std::atoi(p + 1);
      break;
    }
    if (*p < '0' || *p > '9') throw std::invalid_argument("bad dd literal: " + str);
    acc = acc * 10.0 + double(*p - '0');
    if (seen_dot) --exp10;
    any = true;
  }
  if (!any) throw std::invalid_argument("bad dd literal: " + str);
  DD pw(1.0);
  DD ten(10.0);
  int e = exp10 >= 0 ? exp10 : -exp10;
  DD base = ten;
  while (e) {
    if (e & 1) pw = pw * base;
    base = base * base;
    e >>= 1;
  }
  DD v = exp10 >= 0 ? acc * pw : acc / pw;
  return neg ? -v : v;
}

// decimal output with `digits` significant digits (round-trips at 32+)
inline std::string dd_to_string(DD a, int digits = 32) {
  if (a.hi == 0.0 && a.lo == 0.0) return "0";
  if (!std::isfinite(a.hi)) return std::to_string(a.hi);
  std::string out;
  DD x = a;
  if (x.hi < 0.0) {
    out += '-';
    x = -x;
  }
  int e = int(std::floor(std::log10(x.hi)));
  // scale x into [1, 10)
  auto pow10dd = [](int k) {
    DD pw(1.0), base(10.0);
    int n = k >= 0 ? k : -k;
    while (n) {
      if (n & 1) pw = pw * base;
      base = base * base;
      n >>= 1;
    }
    return k >= 0 ? pw : DD(1.0) / pw;
  };
  x = x * pow10dd(-e);
  if (x.hi >= 10.0) { x = x / 10.0; ++e; }
  if (x.hi < 1.0) { x = x * 10.0; --e; }
  std::string mant;
  for (int i = 0; i < digits; ++i) {
    int d = int(std::floor(x.hi));
    if (d < 0) d = 0;
    if (d > 9) d = 9;
    mant += char('0' + d);
    x = (x - double(d)) * 10.0;
  }
  // round last digit by peeking
  if (x.hi >= 5.0) {
    for (int i = int(mant.size()) - 1; i >= 0; --i) {
      if (mant[i] != '9') { ++mant[i]; break; }
      mant[i] = '0';
      if (i == 0) { mant.insert(mant.begin(), '1'); ++e; mant.pop_back(); }
    }
  }
  out += mant.substr(0, 1) + "." + mant.substr(1);
  out += "e" + std::to_string(e);
  return out;
}

}  // namespace fgkp
