#pragma once

// The plane curve family P(lambda, mu) = P0 + eps (beta^2 - mu^2) built from
// the five-line arrangement
//   G0: mu = 0,  G13: mu = lambda - k1,  G23: mu = lambda - k3,
//   S23: mu = k2 - lambda,  S24: mu = k4 - lambda.
// For eps > 0 the curve is a smooth genus-4 M-curve; the plane model keeps
// two nodes at infinity (directions of the parallel pairs), which the
// s = 1/lambda charts walk through.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgkp/cx.hpp"
#include "fgkp/gauss.hpp"
#include "fgkp/poly.hpp"
#include "fgkp/real.hpp"

namespace fgkp {

struct CurveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class R>
struct SpectralParams {
  std::array<R, 4> kappa;
  R epsilon{};

  SpectralParams() = default;
  SpectralParams(std::array<R, 4> k, R eps) : kappa(k), epsilon(eps) { validate(); }

  void validate() const {
    for (int i = 0; i < 3; ++i)
      if (!(kappa[i] < kappa[i + 1]))
        throw CurveError("SpectralParams: phases must satisfy k1 < k2 < k3 < k4");
    if (epsilon < R(0.0)) throw CurveError("SpectralParams: epsilon must be >= 0");
  }

  bool epsilon_warn() const { return to_d(epsilon) > 0.1; }

  // beta is always derived, never stored
  R beta() const {
    R gap = kappa[1] - kappa[0];
    if (kappa[2] - kappa[1] > gap) gap = kappa[2] - kappa[1];
    if (kappa[3] - kappa[2] > gap) gap = kappa[3] - kappa[2];
    return (kappa[3] - kappa[0]) / R(4.0) + gap / R(4.0);
  }

  R eps_beta2() const { R b = beta(); return epsilon * b * b; }

  static SpectralParams paper(R eps) {
    return SpectralParams({R(-1.5), R(-0.75), R(0.5), R(2.0)}, eps);
  }
};

template <class R>
struct CurvePoint {
  Cx<R> lambda;
  Cx<R> mu;
};

enum class CurvePoly { P0, P, Q, Pmu };

// ---- pointwise evaluation (product forms, total functions) ----

template <class R>
std::array<Cx<R>, 4> line_factors(const SpectralParams<R>& sp, Cx<R> lam, Cx<R> mu) {
  return {mu - lam + sp.kappa[0], mu + lam - sp.kappa[1], mu - lam + sp.kappa[2],
          mu + lam - sp.kappa[3]};
}

template <class R>
Cx<R> eval_P0(const SpectralParams<R>& sp, Cx<R> lam, Cx<R> mu) {
  auto f = line_factors(sp, lam, mu);
  return mu * f[0] * f[1] * f[2] * f[3];
}

template <class R>
Cx<R> eval_P(const SpectralParams<R>& sp, Cx<R> lam, Cx<R> mu) {
  R b = sp.beta();
  return eval_P0(sp, lam, mu) + Cx<R>(sp.epsilon) * (Cx<R>(b * b) - mu * mu);
}

// Q = prod of the four non-G0 factors - eps*mu; on the curve Q = -eps beta^2 / mu
template <class R>
Cx<R> eval_Q(const SpectralParams<R>& sp, Cx<R> lam, Cx<R> mu) {
  auto f = line_factors(sp, lam, mu);
  return f[0] * f[1] * f[2] * f[3] - Cx<R>(sp.epsilon) * mu;
}

template <class R>
Cx<R> eval_Pmu(const SpectralParams<R>& sp, Cx<R> lam, Cx<R> mu) {
  auto f = line_factors(sp, lam, mu);
  Cx<R> sum = f[1] * f[2] * f[3] + f[0] * f[2] * f[3] + f[0] * f[1] * f[3] + f[0] * f[1] * f[2];
  return f[0] * f[1] * f[2] * f[3] + mu * sum - R(2.0) * sp.epsilon * mu;
}

template <class R>
Cx<R> eval_Plambda(const SpectralParams<R>& sp, Cx<R> lam, Cx<R> mu) {
  auto f = line_factors(sp, lam, mu);
  // d/dlambda of the factors: -1, +1, -1, +1
  Cx<R> sum = -f[1] * f[2] * f[3] + f[0] * f[2] * f[3] - f[0] * f[1] * f[3] + f[0] * f[1] * f[2];
  return mu * sum;
}

template <class R>
Cx<R> eval_Pmumu(const SpectralParams<R>& sp, Cx<R> lam, Cx<R> mu) {
  auto f = line_factors(sp, lam, mu);
  Cx<R> s1 = f[1] * f[2] * f[3] + f[0] * f[2] * f[3] + f[0] * f[1] * f[3] + f[0] * f[1] * f[2];
  Cx<R> s2 = f[0] * f[1] + f[0] * f[2] + f[0] * f[3] + f[1] * f[2] + f[1] * f[3] + f[2] * f[3];
  return R(2.0) * s1 + R(2.0) * mu * s2 - R(2.0) * sp.epsilon;
}

template <class R>
Cx<R> eval_Pmulambda(const SpectralParams<R>& sp, Cx<R> lam, Cx<R> mu) {
  auto f = line_factors(sp, lam, mu);
  const double sgn[4] = {-1.0, 1.0, -1.0, 1.0};
  // d/dlambda prod f
  Cx<R> dprod(R(0.0));
  for (int i = 0; i < 4; ++i) {
    Cx<R> p(R(1.0));
    for (int j = 0; j < 4; ++j)
      if (j != i) p *= f[j];
    dprod += p * R(sgn[i]);
  }
  // d/dlambda sum_i prod_{j != i} f_j
  Cx<R> dsum(R(0.0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      Cx<R> p(R(1.0));
      for (int k = 0; k < 4; ++k)
        if (k != i && k != j) p *= f[k];
      dsum += p * R(sgn[j]);
    }
  return dprod + mu * dsum;
}

template <class R>
Cx<R> eval_curve(CurvePoly which, const SpectralParams<R>& sp, const CurvePoint<R>& pt) {
  switch (which) {
    case CurvePoly::P0: return eval_P0(sp, pt.lambda, pt.mu);
    case CurvePoly::P: return eval_P(sp, pt.lambda, pt.mu);
    case CurvePoly::Q: return eval_Q(sp, pt.lambda, pt.mu);
    default: return eval_Pmu(sp, pt.lambda, pt.mu);
  }
}

// magnitude scale of P near (lam, mu), used for on-curve tolerances
template <class R>
double curve_scale(const SpectralParams<R>& sp, Cx<R> lam, Cx<R> mu) {
  auto f = line_factors(sp, lam, mu);
  double s = to_double_mag(abs(mu));
  for (auto& fi : f) s = std::max(s, to_double_mag(abs(fi)));
  s = std::max(s, 1.0);
  double p = 1.0;
  for (int i = 0; i < 5; ++i) p *= s;
  return p;
}

// ---- the quintic in mu over a fixed lambda ----

template <class R>
std::vector<Cx<R>> mu_quintic_coeffs(const SpectralParams<R>& sp, Cx<R> lam) {
  std::array<Cx<R>, 5> roots = {Cx<R>(R(0.0)), lam - sp.kappa[0], sp.kappa[1] - lam,
                                lam - sp.kappa[2], sp.kappa[3] - lam};
  std::vector<Cx<R>> c = {Cx<R>(R(1.0))};
  for (auto& r : roots) {
    std::vector<Cx<R>> next(c.size() + 1, Cx<R>(R(0.0)));
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = next;
  }
  c[0] += Cx<R>(sp.eps_beta2());
  c[2] -= Cx<R>(sp.epsilon);
  return c;
}

template <class R>
std::vector<Cx<R>> mu_branches(const SpectralParams<R>& sp, Cx<R> lam, double tol = -1.0) {
  return solve_polynomial(mu_quintic_coeffs(sp, lam), tol);
}

// Newton on P(lam, .) from a seed; the workhorse of sheet tracking
template <class R>
Cx<R> polish_mu(const SpectralParams<R>& sp, Cx<R> lam, Cx<R> mu, int iters = 40) {
  for (int i = 0; i < iters; ++i) {
    Cx<R> p = eval_P(sp, lam, mu);
    Cx<R> dp = eval_Pmu(sp, lam, mu);
    if (!(to_double_mag(abs(dp)) > 0.0)) break;
    Cx<R> step = p / dp;
    mu -= step;
    if (to_double_mag(abs(step)) < 0.25 * RealTraits<R>::eps() * (1.0 + to_double_mag(abs(mu))))
      break;
  }
  return mu;
}

// ---- the distinguished branch through P0 ----

// For |lambda| large the branch through P0 behaves like
// mu ~ -eps beta^2 / prod(lambda - kappa_i).
template <class R>
Cx<R> p0_branch(const SpectralParams<R>& sp, Cx<R> lam) {
  Cx<R> prod(R(1.0));
  for (int i = 0; i < 4; ++i) prod *= (lam - sp.kappa[i]);
  Cx<R> seed = -Cx<R>(sp.eps_beta2()) / prod;
  if (!(to_d(sp.epsilon) > 0.0)) return Cx<R>(R(0.0));
  Cx<R> mu = polish_mu(sp, lam, seed);
  // ambiguity guard: the polished root must stay the clear nearest to the seed
  auto all = mu_branches(sp, lam);
  double d1 = 1e300, d2 = 1e300;
  Cx<R> best{};
  for (auto& r : all) {
    double d = to_double_mag(abs(r - seed));
    if (d < d1) { d2 = d1; d1 = d; best = r; }
    else if (d < d2) d2 = d;
  }
  if (!(d1 < 0.5 * d2))
    throw CurveError("p0_branch: ambiguous branch (two roots equally near the leading term)");
  (void)best;
  return mu;
}

// ---- analytic continuation of mu(lambda) along a path ----

template <class R>
struct ContinuationOptions {
  double max_step = 0.05;
  double min_step = 1e-9;
  double guard_radius = 0.0;  // 0: derived from params
};

template <class R>
double default_guard_radius(const SpectralParams<R>& sp) {
  double e = to_d(sp.epsilon);
  return std::max(1e-3, 10.0 * std::sqrt(std::max(e, 0.0)) * 1e-1);
}

// Continue the root of P(lambda, .) from `mu0` along the segment; returns mu
// at the end point. Steps halve whenever Newton leaves the basin, detected by
// the nearest-root jump guard: a step is rejected if the tracked root moves
// more than half the distance to the next-nearest root.
template <class R>
Cx<R> continue_branch(const SpectralParams<R>& sp, const PathSegment<R>& seg, Cx<R> mu0,
                      const ContinuationOptions<R>& opt = {}) {
  double t = 0.0;
  double h = opt.max_step;
  Cx<R> mu = mu0;
  Cx<R> lam = seg.point(R(0.0));
  {
    double res = to_double_mag(abs(eval_P(sp, lam, mu)));
    if (res > 1e-6 * curve_scale(sp, lam, mu))
      throw CurveError("continue_branch: start point not on the curve");
    mu = polish_mu(sp, lam, mu);
  }
  int stall = 0;
  while (t < 1.0) {
    double hnow = std::min(h, 1.0 - t);
    R t1 = RealTraits<R>::from_double(t + hnow);
    Cx<R> lam1 = seg.point(t1);
    // first-order predictor along d(mu)/d(lambda) = -P_lambda / P_mu
    Cx<R> dmu = -eval_Plambda(sp, lam, mu) / eval_Pmu(sp, lam, mu);
    Cx<R> pred = mu + dmu * (lam1 - lam);
    Cx<R> cand = polish_mu(sp, lam1, pred, 30);

    bool ok = to_double_mag(abs(eval_P(sp, lam1, cand))) <
              1e-8 * curve_scale(sp, lam1, cand) + 1e-280;
    if (ok) {
      // jump guard against switching sheets mid-step
      auto roots = mu_branches(sp, lam1);
      double dnear = 1e300;
      for (auto& r : roots) {
        double d = to_double_mag(abs(r - cand));
        if (d > 1e-12 * (1.0 + to_double_mag(abs(cand))) && d < dnear) dnear = d;
      }
      double moved = to_double_mag(abs(cand - pred));
      if (moved > 0.5 * dnear) ok = false;
    }
    if (!ok) {
      h *= 0.5;
      if (++stall > 60 || h < opt.min_step)
        throw CurveError("continue_branch: near-critical path (stuck at a branch point)");
      continue;
    }
    stall = 0;
    t += hnow;
    lam = lam1;
    mu = cand;
    if (h < opt.max_step) h *= 1.9;
  }
  return mu;
}

// ---- arrangement skeleton (eps = 0 closed forms) ----

enum class Line { G0, G13, G23, S23, S24 };

template <class R>
Cx<R> line_mu(Line l, const SpectralParams<R>& sp, Cx<R> lam) {
  switch (l) {
    case Line::G0: return Cx<R>(R(0.0));
    case Line::G13: return lam - sp.kappa[0];
    case Line::G23: return lam - sp.kappa[2];
    case Line::S23: return sp.kappa[1] - lam;
    default: return sp.kappa[3] - lam;
  }
}

struct ArrangementNode {
  int id;           // R1..R8 as 1..8
  Line a, b;
  double lambda, mu;
  bool on_axis;
};

// The 8 finite nodes of the eps = 0 arrangement, paper numbering:
// R1 = G13^S23, R2 = G23^S23, R3 = G23^S24, R4 = G13^S24,
// R5 = G13^G0,  R6 = S23^G0,  R7 = G23^G0,  R8 = S24^G0.
template <class R>
std::vector<ArrangementNode> arrangement_nodes(const SpectralParams<R>& sp) {
  double k1 = to_d(sp.kappa[0]), k2 = to_d(sp.kappa[1]), k3 = to_d(sp.kappa[2]),
         k4 = to_d(sp.kappa[3]);
  return {
      {1, Line::G13, Line::S23, 0.5 * (k1 + k2), 0.5 * (k2 - k1), false},
      {2, Line::G23, Line::S23, 0.5 * (k2 + k3), 0.5 * (k2 - k3), false},
      {3, Line::G23, Line::S24, 0.5 * (k3 + k4), 0.5 * (k4 - k3), false},
      {4, Line::G13, Line::S24, 0.5 * (k1 + k4), 0.5 * (k4 - k1), false},
      {5, Line::G13, Line::G0, k1, 0.0, true},
      {6, Line::S23, Line::G0, k2, 0.0, true},
      {7, Line::G23, Line::G0, k3, 0.0, true},
      {8, Line::S24, Line::G0, k4, 0.0, true},
  };
}

// ---- branch points of the lambda projection ----

template <class R>
struct BranchPoint {
  Cx<R> lambda;
  Cx<R> mu;
  bool real;
  int node;  // nearest arrangement node id, 0 if unmatched
};

namespace detail {

// eliminant sample: discriminant-like product over root pairs at fixed lambda
inline double eliminant_sample(const SpectralParams<double>& sp, double lam) {
  auto roots = mu_branches(sp, CxD(lam));
  CxD prod(1.0);
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j) {
      CxD d = roots[i] - roots[j];
      prod *= d * d;
    }
  return prod.re;  // real for real lambda (conjugate-symmetric roots)
}

}  // namespace detail

// All 16 branch points (P = P_mu = 0): eliminant fit over Chebyshev samples,
// roots, then 2x2 Newton polish on (P, P_mu). eps = 0 is a nodal curve and
// rejected.
template <class R>
std::vector<BranchPoint<R>> branch_points(const SpectralParams<R>& sp) {
  if (!(to_d(sp.epsilon) > 0.0)) throw CurveError("branch_points: curve is nodal (eps = 0)");

  SpectralParams<double> spd({to_d(sp.kappa[0]), to_d(sp.kappa[1]), to_d(sp.kappa[2]),
                              to_d(sp.kappa[3])},
                             to_d(sp.epsilon));
  const double lo = to_d(sp.kappa[0]) - 2.0, hi = to_d(sp.kappa[3]) + 2.0;
  const int deg = 16;
  const int ns = 48;
  // Chebyshev least squares in the mapped variable u in [-1, 1]
  std::vector<double> us(ns), vals(ns);
  for (int i = 0; i < ns; ++i) {
    us[i] = std::cos(3.14159265358979323846 * (i + 0.5) / ns);
    double lam = 0.5 * (lo + hi) + 0.5 * (hi - lo) * us[i];
    vals[i] = detail::eliminant_sample(spd, lam);
  }
  double scale = 0.0;
  for (double v : vals) scale = std::max(scale, std::fabs(v));
  for (double& v : vals) v /= scale;
  // normal equations on the Chebyshev basis (diagonal-dominant, fine at deg 16)
  Mat<double> ata = mat_zero<double>(deg + 1, deg + 1);
  std::vector<double> atb(deg + 1, 0.0);
  std::vector<double> tk(deg + 1);
  for (int i = 0; i < ns; ++i) {
    tk[0] = 1.0;
    tk[1] = us[i];
    for (int k = 2; k <= deg; ++k) tk[k] = 2.0 * us[i] * tk[k - 1] - tk[k - 2];
    for (int a = 0; a <= deg; ++a) {
      atb[a] += tk[a] * vals[i];
      for (int b = 0; b <= deg; ++b) ata[a][b] += tk[a] * tk[b];
    }
  }
  auto cheb = lu_solve(ata, atb);
  // convert Chebyshev to monomial coefficients in u
  std::vector<std::vector<double>> T(deg + 1);
  T[0] = {1.0};
  T[1] = {0.0, 1.0};
  for (int k = 2; k <= deg; ++k) {
    T[k].assign(k + 1, 0.0);
    for (size_t j = 0; j < T[k - 1].size(); ++j) T[k][j + 1] += 2.0 * T[k - 1][j];
    for (size_t j = 0; j < T[k - 2].size(); ++j) T[k][j] -= T[k - 2][j];
  }
  std::vector<double> mono(deg + 1, 0.0);
  for (int k = 0; k <= deg; ++k)
    for (size_t j = 0; j < T[k].size(); ++j) mono[j] += cheb[k] * T[k][j];

  auto u_roots = solve_polynomial_real<double>(mono, 1e-6);

  // Newton polish each candidate on the 2x2 system (P, P_mu) in target precision
  std::vector<BranchPoint<R>> out;
  for (auto ur : u_roots) {
    CxD lam_d(0.5 * (lo + hi) + 0.5 * (hi - lo) * ur.re, 0.5 * (hi - lo) * ur.im);
    // seed mu: the double root of the mu-quintic = closest pair midpoint
    auto roots = mu_branches(spd, lam_d);
    double best = 1e300;
    CxD mu_d{};
    for (size_t i = 0; i < roots.size(); ++i)
      for (size_t j = i + 1; j < roots.size(); ++j) {
        double d = abs(roots[i] - roots[j]);
        if (d < best) { best = d; mu_d = (roots[i] + roots[j]) * 0.5; }
      }
    Cx<R> lam{RealTraits<R>::from_double(lam_d.re), RealTraits<R>::from_double(lam_d.im)};
    Cx<R> mu{RealTraits<R>::from_double(mu_d.re), RealTraits<R>::from_double(mu_d.im)};
    bool converged = false;
    for (int it = 0; it < 60; ++it) {
      Cx<R> f1 = eval_P(sp, lam, mu);
      Cx<R> f2 = eval_Pmu(sp, lam, mu);
      Cx<R> pl = eval_Plambda(sp, lam, mu);
      Cx<R> pm = f2;
      Cx<R> pml = eval_Pmulambda(sp, lam, mu);
      Cx<R> pmm = eval_Pmumu(sp, lam, mu);
      Mat<Cx<R>> J = {{pl, pm}, {pml, pmm}};
      std::vector<Cx<R>> rhs = {-f1, -f2};
      std::vector<Cx<R>> d;
      try {
        d = lu_solve(J, rhs);
      } catch (const std::exception&) {
        break;
      }
      lam += d[0];
      mu += d[1];
      double step = to_double_mag(abs(d[0])) + to_double_mag(abs(d[1]));
      if (step < 8.0 * RealTraits<R>::eps() * (1.0 + to_double_mag(abs(lam)))) {
        converged = true;
        break;
      }
    }
    if (!converged) continue;
    double res = to_double_mag(abs(eval_P(sp, lam, mu))) +
                 to_double_mag(abs(eval_Pmu(sp, lam, mu)));
    if (res > 1e-10 * curve_scale(sp, lam, mu)) continue;
    out.push_back({lam, mu, false, 0});
  }

  // dedupe
  std::vector<BranchPoint<R>> uniq;
  for (auto& b : out) {
    bool dup = false;
    for (auto& u : uniq)
      if (to_double_mag(abs(u.lambda - b.lambda)) < 1e-7 &&
          to_double_mag(abs(u.mu - b.mu)) < 1e-7)
        dup = true;
    if (!dup) uniq.push_back(b);
  }

  // classify real, attach nodes
  auto nodes = arrangement_nodes(sp);
  double se = std::sqrt(to_d(sp.epsilon));
  for (auto& b : uniq) {
    double iml = std::fabs(to_d(b.lambda.im));
    b.real = iml < 1e-9 * (1.0 + std::fabs(to_d(b.lambda.re)));
    double bestd = 1e300;
    for (auto& n : nodes) {
      double d = std::hypot(to_d(b.lambda.re) - n.lambda, to_d(b.mu.re) - n.mu);
      if (d < bestd) { bestd = d; b.node = n.id; }
    }
    if (bestd > std::max(0.3, 10.0 * se)) b.node = 0;
  }
  return uniq;
}

// Deformation-threshold guard: branch points from different nodes must not
// approach within 10% of the node separation.
template <class R>
void check_deformation_threshold(const SpectralParams<R>& sp,
                                 const std::vector<BranchPoint<R>>& bps) {
  auto nodes = arrangement_nodes(sp);
  auto node_pos = [&](int id) {
    for (auto& n : nodes)
      if (n.id == id) return CxD(n.lambda, n.mu);
    return CxD(0.0);
  };
  for (size_t i = 0; i < bps.size(); ++i)
    for (size_t j = i + 1; j < bps.size(); ++j) {
      if (bps[i].node == bps[j].node || bps[i].node == 0 || bps[j].node == 0) continue;
      double sep = abs(node_pos(bps[i].node) - node_pos(bps[j].node));
      double d = std::hypot(to_d(bps[i].lambda.re) - to_d(bps[j].lambda.re),
                            to_d(bps[i].lambda.im) - to_d(bps[j].lambda.im));
      if (d < 0.1 * sep)
        throw CurveError("epsilon too large: branch points of different nodes nearly collide");
    }
}

// ---- charts through infinity ----

// family of an unbounded real branch: flat (mu ~ 0 via P0), plus (mu ~ lambda),
// minus (mu ~ -lambda)
enum class InfChart { flat, plus, minus };

// F(s, nu) = s^w P with lambda = 1/s and mu = nu (flat), nu + 1/s (plus),
// nu - 1/s (minus); F is polynomial and regular through s = 0.
template <class R>
Cx<R> chart_F(InfChart fam, const SpectralParams<R>& sp, Cx<R> s, Cx<R> nu) {
  const R k1 = sp.kappa[0], k2 = sp.kappa[1], k3 = sp.kappa[2], k4 = sp.kappa[3];
  Cx<R> eb2(sp.eps_beta2());
  Cx<R> eps(sp.epsilon);
  if (fam == InfChart::flat) {
    Cx<R> f1 = s * nu - R(1.0) + s * k1;
    Cx<R> f2 = s * nu + R(1.0) - s * k2;
    Cx<R> f3 = s * nu - R(1.0) + s * k3;
    Cx<R> f4 = s * nu + R(1.0) - s * k4;
    Cx<R> s4 = (s * s) * (s * s);
    return nu * f1 * f2 * f3 * f4 + s4 * (eb2 - eps * nu * nu);
  }
  if (fam == InfChart::plus) {
    Cx<R> m = R(1.0) + s * nu;  // = s * mu
    Cx<R> F = m * (nu + k1) * (R(2.0) + s * (nu - k2)) * (nu + k3) *
              (R(2.0) + s * (nu - k4));
    return F + eb2 * s * s * s - eps * s * m * m;
  }
  Cx<R> m = s * nu - R(1.0);  // = s * mu
  Cx<R> F = m * (s * (nu + k1) - R(2.0)) * (nu - k2) * (s * (nu + k3) - R(2.0)) *
            (nu - k4);
  return F + eb2 * s * s * s - eps * s * m * m;
}

template <class R>
Cx<R> chart_F_nu(InfChart fam, const SpectralParams<R>& sp, Cx<R> s, Cx<R> nu) {
  const R k1 = sp.kappa[0], k2 = sp.kappa[1], k3 = sp.kappa[2], k4 = sp.kappa[3];
  Cx<R> eps(sp.epsilon);
  if (fam == InfChart::flat) {
    Cx<R> f1 = s * nu - R(1.0) + s * k1;
    Cx<R> f2 = s * nu + R(1.0) - s * k2;
    Cx<R> f3 = s * nu - R(1.0) + s * k3;
    Cx<R> f4 = s * nu + R(1.0) - s * k4;
    Cx<R> s4 = (s * s) * (s * s);
    Cx<R> dsum = s * (f2 * f3 * f4 + f1 * f3 * f4 + f1 * f2 * f4 + f1 * f2 * f3);
    return f1 * f2 * f3 * f4 + nu * dsum - R(2.0) * eps * s4 * nu;
  }
  if (fam == InfChart::plus) {
    Cx<R> m = R(1.0) + s * nu;
    Cx<R> a = nu + k1, b = nu + k3;
    Cx<R> g2 = R(2.0) + s * (nu - k2), g4 = R(2.0) + s * (nu - k4);
    return s * a * g2 * b * g4 + m * g2 * b * g4 + m * a * s * b * g4 + m * a * g2 * g4 +
           m * a * g2 * b * s - R(2.0) * eps * s * s * m;
  }
  Cx<R> m = s * nu - R(1.0);
  Cx<R> h1 = s * (nu + k1) - R(2.0), h3 = s * (nu + k3) - R(2.0);
  Cx<R> a2 = nu - k2, a4 = nu - k4;
  return s * h1 * a2 * h3 * a4 + m * s * a2 * h3 * a4 + m * h1 * h3 * a4 +
         m * h1 * a2 * s * a4 + m * h1 * a2 * h3 - R(2.0) * eps * s * s * m;
}

template <class R>
Cx<R> chart_mu(InfChart fam, Cx<R> s, Cx<R> nu) {
  if (fam == InfChart::flat) return nu;
  if (fam == InfChart::plus) return nu + Cx<R>(R(1.0)) / s;
  return nu - Cx<R>(R(1.0)) / s;
}

}  // namespace fgkp
