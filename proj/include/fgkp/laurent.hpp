#pragma once

// Laurent coefficients by uniform sampling on a circle:
//   c_m = (1/2 pi i) \oint f(z) (z - center)^{-m-1} dz
//       = (1/N) sum_k f(center + R w^k) (R w^k)^{-m},  w = e^{2 pi i / N}.
// The discrete sum aliases c_m with c_{m +- N}; callers must keep the
// requested orders inside the anti-aliasing bound N >= 4 (max|order|+1).

#include <map>
#include <stdexcept>
#include <vector>

#include "fgkp/cx.hpp"
#include "fgkp/real.hpp"

namespace fgkp {

struct LaurentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class R>
std::vector<Cx<R>> unit_roots(int n) {
  // generated by repeated multiplication of the primitive root; the
  // accumulated error stays ~n ulps which is fine for our n <= 256
  R ang = R(2.0) * pi_v<R>() / R(double(n));
  R s, c;
  if constexpr (std::is_same_v<R, double>) {
    s = std::sin(ang);
    c = std::cos(ang);
  } else {
    sincos(ang, s, c);
  }
  Cx<R> w(c, s);
  std::vector<Cx<R>> roots(n);
  roots[0] = Cx<R>(R(1.0));
  for (int k = 1; k < n; ++k) roots[k] = roots[k - 1] * w;
  return roots;
}

// orders: inclusive range [order_lo, order_hi]; returns map order -> coefficient
template <class R, class F>
std::map<int, Cx<R>> laurent_coefficients(const F& f, Cx<R> center, R radius, int order_lo,
                                          int order_hi, int samples = 0) {
  if (order_lo > order_hi) throw LaurentError("laurent: empty order range");
  int maxabs = std::max(std::abs(order_lo), std::abs(order_hi));
  int nmin = 8 * (maxabs + 1);
  int n = samples > 0 ? samples : nmin;
  if (n < 4 * (maxabs + 1))
    throw LaurentError("laurent: requested order outside anti-aliasing bound");
  auto roots = unit_roots<R>(n);
  std::vector<Cx<R>> fv(n);
  for (int k = 0; k < n; ++k) fv[k] = f(center + roots[k] * radius);

  std::map<int, Cx<R>> out;
  for (int m = order_lo; m <= order_hi; ++m) {
    Cx<R> acc(R(0.0));
    for (int k = 0; k < n; ++k) {
      // (R w^k)^{-m} = R^{-m} w^{-km}
      int e = ((-int64_t(k) * m) % n + n) % n;
      acc += fv[k] * roots[size_t(e)];
    }
    R rm(1.0);
    for (int i = 0; i < std::abs(m); ++i) rm = rm * radius;
    Cx<R> coeff = acc / R(double(n));
    out[m] = m >= 0 ? coeff / rm : coeff * rm;
  }
  return out;
}

}  // namespace fgkp
