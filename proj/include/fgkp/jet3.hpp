#pragma once

// Jet3: truncated multivariate Taylor expansion in (x, y, t), the mechanism
// behind analytic derivatives of theta and log tau. Coefficients are stored
// for all (a, b, c) with a <= nx, b <= ny, c <= nt; value(a,b,c) is the
// Taylor coefficient, i.e. the derivative divided by a! b! c!.

#include <array>
#include <stdexcept>
#include <vector>

#include "fgkp/cx.hpp"
#include "fgkp/real.hpp"

namespace fgkp {

struct JetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class R>
R factorial_r(int n) {
  R f(1.0);
  for (int k = 2; k <= n; ++k) f = f * R(double(k));
  return f;
}

template <class R>
struct Jet3 {
  int nx = 0, ny = 0, nt = 0;
  std::vector<Cx<R>> c;

  Jet3() = default;
  Jet3(int nx_, int ny_, int nt_)
      : nx(nx_), ny(ny_), nt(nt_), c(size_t(nx_ + 1) * (ny_ + 1) * (nt_ + 1), Cx<R>(R(0.0))) {}

  size_t idx(int a, int b, int d) const {
    return (size_t(a) * (ny + 1) + b) * (nt + 1) + d;
  }
  Cx<R>& at(int a, int b, int d) { return c[idx(a, b, d)]; }
  const Cx<R>& at(int a, int b, int d) const { return c[idx(a, b, d)]; }

  Cx<R> constant() const { return c[0]; }

  static Jet3 konst(Cx<R> v, int nx, int ny, int nt) {
    Jet3 j(nx, ny, nt);
    j.c[0] = v;
    return j;
  }
};

template <class R>
Jet3<R> operator+(const Jet3<R>& a, const Jet3<R>& b) {
  Jet3<R> r(a.nx, a.ny, a.nt);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

template <class R>
Jet3<R> operator-(const Jet3<R>& a, const Jet3<R>& b) {
  Jet3<R> r(a.nx, a.ny, a.nt);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

template <class R>
Jet3<R> operator*(const Jet3<R>& a, Cx<R> s) {
  Jet3<R> r = a;
  for (auto& v : r.c) v *= s;
  return r;
}

template <class R>
Jet3<R> jet_mul(const Jet3<R>& a, const Jet3<R>& b) {
  Jet3<R> r(a.nx, a.ny, a.nt);
  for (int ax = 0; ax <= a.nx; ++ax)
    for (int ay = 0; ay <= a.ny; ++ay)
      for (int at = 0; at <= a.nt; ++at) {
        const Cx<R>& va = a.at(ax, ay, at);
        if (va.re == R(0.0) && va.im == R(0.0)) continue;
        for (int bx = 0; ax + bx <= r.nx; ++bx)
          for (int by = 0; ay + by <= r.ny; ++by)
            for (int bt = 0; at + bt <= r.nt; ++bt)
              r.at(ax + bx, ay + by, at + bt) += va * b.at(bx, by, bt);
      }
  return r;
}

namespace detail {

// f = f0 (1 + g); returns g. Total truncation degree bounds the series length.
template <class R>
int jet_total_order(const Jet3<R>& j) { return j.nx + j.ny + j.nt; }

}  // namespace detail

template <class R>
Jet3<R> jet_exp(const Jet3<R>& j) {
  using std::exp; using fgkp::exp;
  Jet3<R> g = j;
  Cx<R> f0 = j.constant();
  g.c[0] = Cx<R>(R(0.0));
  Jet3<R> sum = Jet3<R>::konst(Cx<R>(R(1.0)), j.nx, j.ny, j.nt);
  Jet3<R> pw = sum;
  int n = detail::jet_total_order(j);
  for (int k = 1; k <= n; ++k) {
    pw = jet_mul(pw, g);
    sum = sum + pw * (Cx<R>(R(1.0)) / factorial_r<R>(k));
  }
  return sum * exp(f0);
}

template <class R>
Jet3<R> jet_log(const Jet3<R>& j) {
  using std::log; using fgkp::log;
  Cx<R> f0 = j.constant();
  if (!(to_double_mag(abs(f0)) > 0.0)) throw JetError("jet_log: zero constant term");
  Jet3<R> g = j * (Cx<R>(R(1.0)) / f0);
  g.c[0] = Cx<R>(R(0.0));
  Jet3<R> sum = Jet3<R>::konst(log(f0), j.nx, j.ny, j.nt);
  Jet3<R> pw = Jet3<R>::konst(Cx<R>(R(1.0)), j.nx, j.ny, j.nt);
  int n = detail::jet_total_order(j);
  R sign(1.0);
  for (int k = 1; k <= n; ++k) {
    pw = jet_mul(pw, g);
    sum = sum + pw * Cx<R>(sign / R(double(k)));
    sign = -sign;
  }
  return sum;
}

template <class R>
Jet3<R> jet_inverse(const Jet3<R>& j) {
  Cx<R> f0 = j.constant();
  if (!(to_double_mag(abs(f0)) > 0.0)) throw JetError("jet_inverse: zero constant term");
  Jet3<R> g = j * (Cx<R>(R(1.0)) / f0);
  g.c[0] = Cx<R>(R(0.0));
  Jet3<R> sum = Jet3<R>::konst(Cx<R>(R(1.0)), j.nx, j.ny, j.nt);
  Jet3<R> pw = sum;
  int n = detail::jet_total_order(j);
  R sign(-1.0);
  for (int k = 1; k <= n; ++k) {
    pw = jet_mul(pw, g);
    sum = sum + pw * Cx<R>(sign);
    sign = -sign;
  }
  return sum * (Cx<R>(R(1.0)) / f0);
}

template <class R>
Jet3<R> jet_div(const Jet3<R>& a, const Jet3<R>& b) { return jet_mul(a, jet_inverse(b)); }

// axis: 0 = x, 1 = y, 2 = t. The result keeps the same order box (top
// slots along the axis become meaningless and are zeroed).
template <class R>
Jet3<R> jet_derivative(const Jet3<R>& j, int axis) {
  Jet3<R> r(j.nx, j.ny, j.nt);
  for (int a = 0; a <= j.nx; ++a)
    for (int b = 0; b <= j.ny; ++b)
      for (int d = 0; d <= j.nt; ++d) {
        if (axis == 0 && a + 1 <= j.nx) r.at(a, b, d) = j.at(a + 1, b, d) * R(double(a + 1));
        if (axis == 1 && b + 1 <= j.ny) r.at(a, b, d) = j.at(a, b + 1, d) * R(double(b + 1));
        if (axis == 2 && d + 1 <= j.nt) r.at(a, b, d) = j.at(a, b, d + 1) * R(double(d + 1));
      }
  return r;
}

// derivative value d^a_x d^b_y d^c_t f at the expansion point
template <class R>
Cx<R> jet_deriv_value(const Jet3<R>& j, int a, int b, int d) {
  return j.at(a, b, d) * (factorial_r<R>(a) * factorial_r<R>(b) * factorial_r<R>(d));
}

}  // namespace fgkp
