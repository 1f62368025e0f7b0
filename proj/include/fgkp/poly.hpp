#pragma once

// Polynomial roots by Durand-Kerner simultaneous iteration plus Newton
// polish. Acceptance is residual-based: every root r must satisfy
// |p(r)| <= tol * scale(p, r).

#include <stdexcept>
#include <vector>

#include "fgkp/cx.hpp"
#include "fgkp/real.hpp"

namespace fgkp {

struct PolyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// coeffs ascending: p(x) = c[0] + c[1] x + ... + c[d] x^d
template <class R>
Cx<R> poly_eval(const std::vector<Cx<R>>& c, Cx<R> x) {
  Cx<R> acc(R(0.0));
  for (int i = int(c.size()) - 1; i >= 0; --i) acc = acc * x + c[i];
  return acc;
}

template <class R>
Cx<R> poly_eval_deriv(const std::vector<Cx<R>>& c, Cx<R> x) {
  Cx<R> acc(R(0.0));
  for (int i = int(c.size()) - 1; i >= 1; --i) acc = acc * x + c[i] * R(double(i));
  return acc;
}

// residual scale: sum |c_i| |x|^i, floored at |c_d| to avoid a zero scale
template <class R>
R poly_scale(const std::vector<Cx<R>>& c, Cx<R> x) {
  R ax = abs(x);
  R p(1.0), s(0.0);
  for (const auto& ci : c) {
    s += abs(ci) * p;
    p = p * ax;
  }
  return s;
}

template <class R>
std::vector<Cx<R>> solve_polynomial(std::vector<Cx<R>> coeffs, double tol = -1.0) {
  if (tol < 0.0) tol = 64.0 * RealTraits<R>::eps();
  while (coeffs.size() > 1 && abs(coeffs.back()) == R(0.0)) coeffs.pop_back();
  const int d = int(coeffs.size()) - 1;
  if (d < 1) throw PolyError("solve_polynomial: degree must be >= 1");
  Cx<R> lead = coeffs.back();
  std::vector<Cx<R>> c(coeffs);
  for (auto& ci : c) ci = ci / lead;

  // Cauchy bound for the initial circle of guesses
  double rad = 0.0;
  for (int i = 0; i < d; ++i) rad = std::max(rad, to_double_mag(abs(c[i])));
  rad = 1.0 + rad;
  std::vector<Cx<R>> z(d);
  {
    Cx<R> rot(R(0.4), R(0.9));
    Cx<R> cur(R(rad * 0.7071), R(rad * 0.5));
    for (int i = 0; i < d; ++i) {
      z[i] = cur;
      cur = cur * rot;
    }
  }

  const int cap = 600;
  bool converged = false;
  for (int it = 0; it < cap && !converged; ++it) {
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
      Cx<R> denom(R(1.0));
      for (int j = 0; j < d; ++j)
        if (j != i) denom = denom * (z[i] - z[j]);
      Cx<R> dz = poly_eval(c, z[i]) / denom;
      z[i] -= dz;
      double rel = to_double_mag(abs(dz)) / (1.0 + to_double_mag(abs(z[i])));
      worst = std::max(worst, rel);
    }
    converged = worst < 0.25 * tol;
  }

  // Newton polish (falls back to the DK value if the step degrades)
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < 3; ++k) {
      Cx<R> p = poly_eval(c, z[i]);
      Cx<R> dp = poly_eval_deriv(c, z[i]);
      if (!(to_double_mag(abs(dp)) > 0.0)) break;
      z[i] -= p / dp;
    }
  }

  for (int i = 0; i < d; ++i) {
    double res = to_double_mag(abs(poly_eval(coeffs, z[i])));
    double scale = to_double_mag(poly_scale(coeffs, z[i]));
    if (!(res <= tol * std::max(scale, 1e-300)))
      throw PolyError("solve_polynomial: iteration cap without residual convergence");
  }
  return z;
}

// convenience for real coefficient arrays
template <class R>
std::vector<Cx<R>> solve_polynomial_real(const std::vector<R>& coeffs, double tol = -1.0) {
  std::vector<Cx<R>> c(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) c[i] = Cx<R>(coeffs[i]);
  return solve_polynomial(c, tol);
}

}  // namespace fgkp
