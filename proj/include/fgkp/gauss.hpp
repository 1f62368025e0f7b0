#pragma once

// Adaptive Gauss-Legendre quadrature: fixed order-10 panels, recursive
// bisection until the half-panel refinement agrees. Paths in the complex
// lambda plane are line segments or circular arcs with a sheet anchor
// (the mu value at the start point) for curve continuation.

#include <functional>
#include <stdexcept>
#include <vector>

#include "fgkp/cx.hpp"
#include "fgkp/real.hpp"

namespace fgkp {

struct QuadratureError : std::runtime_error {
  QuadratureError(const std::string& msg, Cx<double> best, double err)
      : std::runtime_error(msg), best_estimate(best), achieved_error(err) {}
  Cx<double> best_estimate;
  double achieved_error;
};

inline constexpr int kGaussOrder = 10;

template <class R>
struct GaussRule {
  std::vector<R> x;  // nodes on [-1, 1]
  std::vector<R> w;

  static const GaussRule& get() {
    static const GaussRule rule = make();
    return rule;
  }

 private:
  static GaussRule make() {
    GaussRule r;
    const int n = kGaussOrder;
    r.x.resize(n);
    r.w.resize(n);
    for (int k = 0; k < (n + 1) / 2; ++k) {
      double seed = std::cos(3.14159265358979323846 * (k + 0.75) / (n + 0.5));
      R xk = RealTraits<R>::from_double(seed);
      R dp(1.0);
      for (int it = 0; it < 8; ++it) {
        // Legendre recurrence for P_n and P_{n-1}
        R p0(1.0), p1 = xk;
        for (int m = 2; m <= n; ++m) {
          R p2 = ((R(double(2 * m - 1)) * xk * p1) - R(double(m - 1)) * p0) / R(double(m));
          p0 = p1;
          p1 = p2;
        }
        dp = R(double(n)) * (xk * p1 - p0) / (xk * xk - R(1.0));
        R step = p1 / dp;
        xk = xk - step;
        if (to_double_mag(step) < 4.0 * RealTraits<R>::eps()) break;
      }
      R wk = R(2.0) / ((R(1.0) - xk * xk) * dp * dp);
      r.x[k] = -xk;           // seeds enumerate descending roots
      r.w[k] = wk;
      r.x[n - 1 - k] = xk;
      r.w[n - 1 - k] = wk;
    }
    return r;
  }
};

// ---- path segments ----

template <class R>
struct PathSegment {
  enum class Kind { line, arc };
  Kind kind = Kind::line;
  Cx<R> a, b;          // line: endpoints
  Cx<R> center;        // arc
  R radius{};
  R phi0{}, phi1{};
  Cx<R> sheet_anchor;  // mu at t = 0 (ignored by plain quadrature)

  static PathSegment line(Cx<R> a, Cx<R> b, Cx<R> anchor = Cx<R>()) {
    PathSegment s;
    s.kind = Kind::line;
    s.a = a;
    s.b = b;
    s.sheet_anchor = anchor;
    return s;
  }
  static PathSegment arc(Cx<R> center, R radius, R phi0, R phi1, Cx<R> anchor = Cx<R>()) {
    PathSegment s;
    s.kind = Kind::arc;
    s.center = center;
    s.radius = radius;
    s.phi0 = phi0;
    s.phi1 = phi1;
    s.sheet_anchor = anchor;
    return s;
  }

  Cx<R> point(R t) const {
    if (kind == Kind::line) return a + (b - a) * t;
    R phi = phi0 + (phi1 - phi0) * t;
    R s, c;
    if constexpr (std::is_same_v<R, double>) {
      s = std::sin(phi);
      c = std::cos(phi);
    } else {
      sincos(phi, s, c);
    }
    return center + Cx<R>(c, s) * radius;
  }

  // d(lambda)/dt
  Cx<R> velocity(R t) const {
    if (kind == Kind::line) return b - a;
    Cx<R> rel = point(t) - center;
    return Cx<R>(R(0.0), phi1 - phi0) * rel;
  }

  PathSegment reversed() const {
    PathSegment s = *this;
    if (kind == Kind::line) { s.a = b; s.b = a; }
    else { s.phi0 = phi1; s.phi1 = phi0; }
    s.sheet_anchor = Cx<R>();  // caller re-anchors
    return s;
  }
};

namespace detail {

template <class R, class F>
Cx<R> gauss_panel(const F& f, R t0, R t1) {
  const auto& rule = GaussRule<R>::get();
  R half = (t1 - t0) * R(0.5);
  R mid = (t0 + t1) * R(0.5);
  Cx<R> acc(R(0.0));
  for (int i = 0; i < kGaussOrder; ++i) acc += f(mid + half * rule.x[i]) * rule.w[i];
  return acc * half;
}

template <class R, class F>
Cx<R> adaptive_rec(const F& f, R t0, R t1, double tol, Cx<R> whole, int depth,
                   double& worst) {
  R mid = (t0 + t1) * R(0.5);
  Cx<R> left = gauss_panel(f, t0, mid);
  Cx<R> right = gauss_panel(f, mid, t1);
  double err = to_double_mag(abs(whole - (left + right)));
  if (err <= tol || depth >= 28) {
    if (depth >= 28 && err > tol) worst = std::max(worst, err);
    return left + right;
  }
  return adaptive_rec(f, t0, mid, tol * 0.5, left, depth + 1, worst) +
         adaptive_rec(f, mid, t1, tol * 0.5, right, depth + 1, worst);
}

}  // namespace detail

// Integrate f(t) dt over [0,1] to absolute tolerance tol.
template <class R, class F>
Cx<R> adaptive_gauss_param(const F& f, double tol) {
  R zero(0.0), one(1.0);
  Cx<R> whole = detail::gauss_panel(f, zero, one);
  double worst = 0.0;
  Cx<R> result = detail::adaptive_rec(f, zero, one, tol, whole, 0, worst);
  if (worst > 0.0)
    throw QuadratureError("adaptive_gauss: subdivision cap before tolerance", to_cd(result),
                          worst);
  return result;
}

// Integrate integrand(lambda) d(lambda) along a path segment.
template <class R, class F>
Cx<R> adaptive_gauss(const F& integrand, const PathSegment<R>& seg, double tol) {
  auto g = [&](R t) { return integrand(seg.point(t)) * seg.velocity(t); };
  return adaptive_gauss_param<R>(g, tol);
}

}  // namespace fgkp
