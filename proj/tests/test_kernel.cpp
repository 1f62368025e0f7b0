// Numeric kernel: double-double scalar, polynomial roots, adaptive Gauss,
// jets, Laurent extraction.

#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "fgkp/gauss.hpp"
#include "fgkp/jet3.hpp"
#include "fgkp/laurent.hpp"
#include "fgkp/linalg.hpp"
#include "fgkp/poly.hpp"
#include "fgkp/real.hpp"

using namespace fgkp;

namespace {
double dmag(DD x) { return std::fabs(double(x)); }
}  // namespace

TEST_CASE("dd arithmetic hits ~31 digits") {
  DD a = dd_from_string("1.2345678901234567890123456789012");
  DD b = dd_from_string("9.8765432109876543210987654321098e-3");
  DD s = a + b;
  CHECK(dmag(s - b - a) < 1e-30);
  DD p = a * b;
  CHECK(dmag(p / b - a) < 1e-30);

  DD r2 = sqrt(DD(2.0));
  CHECK(dmag(r2 * r2 - 2.0) < 1e-31);

  CHECK(dmag(exp(DD(1.0)) - dd_e) < 1e-30);
  DD x = dd_from_string("0.73");
  CHECK(dmag(log(exp(x)) - x) < 1e-30);

  DD sn, cs;
  sincos(dd_from_string("2.5"), sn, cs);
  CHECK(dmag(sn * sn + cs * cs - 1.0) < 1e-30);
  CHECK(dmag(sin(dd_pi)) < 1e-31);

  // decimal round trip
  DD y = dd_from_string("3.1415926535897932384626433832795");
  CHECK(dmag(dd_from_string(dd_to_string(y)) - y) < 1e-30);
}

TEST_CASE("solve_polynomial: factorable quadratic") {
  auto roots = solve_polynomial_real<double>({-1.0, 0.0, 1.0});
  REQUIRE(roots.size() == 2);
  std::sort(roots.begin(), roots.end(),
            [](CxD a, CxD b) { return a.re < b.re; });
  CHECK(std::abs(roots[0].re + 1.0) < 1e-14);
  CHECK(std::abs(roots[1].re - 1.0) < 1e-14);
  CHECK(std::abs(roots[0].im) < 1e-14);
}

TEST_CASE("solve_polynomial: nodal quintic in mu at lambda = 0") {
  // product of the five line factors mu * (mu-1.5)(mu+0.75)(mu+0.5)(mu-2),
  // built by convolution as an independent oracle
  const double kappa[4] = {-1.5, -0.75, 0.5, 2.0};
  double lam = 0.0;
  std::vector<double> line_roots = {0.0, lam - kappa[0], kappa[1] - lam, lam - kappa[2],
                                    kappa[3] - lam};
  std::vector<double> coef = {1.0};
  for (double r : line_roots) {
    std::vector<double> next(coef.size() + 1, 0.0);
    for (size_t i = 0; i < coef.size(); ++i) {
      next[i + 1] += coef[i];
      next[i] -= r * coef[i];
    }
    coef = next;
  }
  auto roots = solve_polynomial_real<double>(coef);
  REQUIRE(roots.size() == 5);
  std::vector<double> re;
  for (auto z : roots) {
    CHECK(std::abs(z.im) < 1e-10);
    re.push_back(z.re);
  }
  std::sort(re.begin(), re.end());
  std::vector<double> expect = {-0.75, -0.5, 0.0, 1.5, 2.0};
  for (int i = 0; i < 5; ++i) CHECK(std::abs(re[i] - expect[i]) < 1e-10);
}

TEST_CASE("solve_polynomial: random quintics, residual + re-expansion + Vieta") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<CxD> c(6);
    for (auto& ci : c) ci = CxD(u(rng), u(rng));
    if (abs(c[5]) < 0.1) c[5] = CxD(1.0, 0.3);
    auto roots = solve_polynomial(c);
    REQUIRE(roots.size() == 5);

    CxD sum(0.0), prod(1.0);
    for (auto r : roots) {
      CHECK(abs(poly_eval(c, r)) < 1e-10 * to_double_mag(poly_scale(c, r)));
      sum += r;
      prod *= r;
    }
    // Vieta: sum = -c4/c5, product = (-1)^5 c0/c5
    CHECK(abs(sum + c[4] / c[5]) < 1e-10 * (1.0 + abs(sum)));
    CHECK(abs(prod + c[0] / c[5]) < 1e-10 * (1.0 + abs(prod)));

    // re-expansion of prod (x - r_i) against normalized coefficients
    std::vector<CxD> re = {CxD(1.0)};
    for (auto r : roots) {
      std::vector<CxD> next(re.size() + 1, CxD(0.0));
      for (size_t i = 0; i < re.size(); ++i) {
        next[i + 1] += re[i];
        next[i] -= r * re[i];
      }
      re = next;
    }
    for (int i = 0; i <= 5; ++i)
      CHECK(abs(re[i] - c[i] / c[5]) < 1e-9 * (1.0 + abs(c[i] / c[5])));
  }
}

TEST_CASE("solve_polynomial: degree 0 rejected") {
  CHECK_THROWS_AS(solve_polynomial_real<double>({3.0}), PolyError);
  CHECK_THROWS_AS(solve_polynomial_real<double>({3.0, 0.0}), PolyError);
}

TEST_CASE("adaptive_gauss: constants and the residue circle") {
  auto one = [](CxD) { return CxD(1.0); };
  auto seg = PathSegment<double>::line(CxD(0.0), CxD(1.0));
  CHECK(abs(adaptive_gauss(one, seg, 1e-12) - CxD(1.0)) < 1e-12);

  auto inv = [](CxD z) { return CxD(1.0) / z; };
  CxD total(0.0);
  for (int q = 0; q < 4; ++q) {
    auto arc = PathSegment<double>::arc(CxD(0.0), 1.0, q * 1.5707963267948966,
                                        (q + 1) * 1.5707963267948966);
    total += adaptive_gauss(inv, arc, 1e-13);
  }
  CHECK(std::abs(total.re) < 1e-12);
  CHECK(std::abs(total.im - 2.0 * 3.14159265358979323846) < 1e-12);
}

TEST_CASE("adaptive_gauss: additive over pieces, sign-reverses on flip") {
  auto f = [](CxD z) { return exp(z * CxD(0.0, 2.0)) + z * z; };
  auto whole = PathSegment<double>::line(CxD(-1.0, 0.2), CxD(2.0, -0.4));
  auto first = PathSegment<double>::line(CxD(-1.0, 0.2), CxD(0.5, -0.1));
  auto second = PathSegment<double>::line(CxD(0.5, -0.1), CxD(2.0, -0.4));
  CxD iw = adaptive_gauss(f, whole, 1e-13);
  CxD ip = adaptive_gauss(f, first, 1e-13) + adaptive_gauss(f, second, 1e-13);
  CHECK(abs(iw - ip) < 1e-12);
  CxD ir = adaptive_gauss(f, whole.reversed(), 1e-13);
  CHECK(abs(iw + ir) < 1e-12);
}

TEST_CASE("adaptive_gauss: trapezoid oracle on a sharp but smooth integrand") {
  auto f = [](CxD z) { return CxD(1.0) / (z * z + CxD(1e-2)); };
  auto seg = PathSegment<double>::line(CxD(-1.0), CxD(1.0));
  CxD val = adaptive_gauss(f, seg, 1e-12);
  // composite trapezoid with 2e6 panels as the independent oracle
  const int n = 2000000;
  double acc = 0.0;
  for (int i = 0; i <= n; ++i) {
    double x = -1.0 + 2.0 * i / n;
    double v = 1.0 / (x * x + 1e-2);
    acc += (i == 0 || i == n) ? 0.5 * v : v;
  }
  acc *= 2.0 / n;
  CHECK(std::abs(val.re - acc) < 1e-8 * std::abs(acc));
  CHECK(std::abs(val.im) < 1e-12);
}

TEST_CASE("adaptive_gauss: failure carries best estimate") {
  auto f = [](CxD z) { return CxD(1.0) / (z - CxD(0.5, 1e-14)); };
  auto seg = PathSegment<double>::line(CxD(0.0), CxD(1.0));
  CHECK_THROWS_AS(adaptive_gauss(f, seg, 1e-13), QuadratureError);
  try {
    adaptive_gauss(f, seg, 1e-13);
  } catch (const QuadratureError& e) {
    CHECK(e.achieved_error > 1e-13);
    CHECK(std::isfinite(e.best_estimate.re));
  }
}

TEST_CASE("gauss rule stays exact in extended precision") {
  // degree-19 monomial is integrated exactly by 10-point Gauss-Legendre
  auto f = [](Cx<DD> z) {
    Cx<DD> p(DD(1.0));
    for (int i = 0; i < 19; ++i) p *= z;
    return p;
  };
  auto seg = PathSegment<DD>::line(Cx<DD>(DD(0.0)), Cx<DD>(DD(1.0)));
  auto v = adaptive_gauss(f, seg, 1e-28);
  CHECK(dmag(v.re - DD(1.0) / DD(20.0)) < 1e-29);
}

TEST_CASE("jet algebra") {
  // j = a linear-phase exponential times a polynomial, an analytically known jet
  Jet3<double> j(4, 2, 1);
  j.at(0, 0, 0) = CxD(1.3, 0.0);
  j.at(1, 0, 0) = CxD(0.7);
  j.at(0, 1, 0) = CxD(-0.4);
  j.at(0, 0, 1) = CxD(0.25);
  j.at(2, 0, 0) = CxD(0.11);
  j.at(1, 1, 0) = CxD(-0.05);

  SUBCASE("constant jet log") {
    auto k = Jet3<double>::konst(CxD(2.0), 3, 1, 1);
    auto lk = jet_log(k);
    CHECK(abs(lk.constant() - CxD(std::log(2.0))) < 1e-15);
    for (size_t i = 1; i < lk.c.size(); ++i) CHECK(abs(lk.c[i]) < 1e-15);
  }

  SUBCASE("log(exp(j)) == j") {
    auto r = jet_log(jet_exp(j));
    for (size_t i = 0; i < j.c.size(); ++i) CHECK(abs(r.c[i] - j.c[i]) < 1e-12);
  }

  SUBCASE("d(log j) == dj / j") {
    auto lhs = jet_derivative(jet_log(j), 0);
    auto rhs = jet_div(jet_derivative(j, 0), j);
    // top x-slot of the derivative is truncation garbage in rhs; skip a == nx
    for (int a = 0; a < j.nx; ++a)
      for (int b = 0; b <= j.ny; ++b)
        for (int d = 0; d <= j.nt; ++d)
          CHECK(abs(lhs.at(a, b, d) - rhs.at(a, b, d)) < 1e-12);
  }

  SUBCASE("zero constant term rejected") {
    Jet3<double> z(2, 1, 1);
    z.at(1, 0, 0) = CxD(1.0);
    CHECK_THROWS_AS(jet_log(z), JetError);
  }

  SUBCASE("finite-difference oracle for a scalar field") {
    // f(x,y,t) = exp(ax+by+ct) * (1 + x^2/4), jets and 5-point FD at 0
    auto field = [](double x, double y, double t) {
      return std::exp(0.6 * x - 0.3 * y + 0.2 * t) * (1.0 + 0.25 * x * x);
    };
    Jet3<double> f(4, 2, 1);
    // assemble as jet: exp part times polynomial part
    Jet3<double> lin(4, 2, 1);
    lin.at(1, 0, 0) = CxD(0.6);
    lin.at(0, 1, 0) = CxD(-0.3);
    lin.at(0, 0, 1) = CxD(0.2);
    Jet3<double> pol = Jet3<double>::konst(CxD(1.0), 4, 2, 1);
    pol.at(2, 0, 0) = CxD(0.25);
    f = jet_mul(jet_exp(lin), pol);

    double h = 1e-4;
    double fd2 =
        (field(h, 0, 0) - 2.0 * field(0, 0, 0) + field(-h, 0, 0)) / (h * h);
    CxD j2 = jet_deriv_value(f, 2, 0, 0);
    CHECK(std::abs(j2.re - fd2) < 1e-6 * std::abs(fd2));
    double fdy =
        (field(0, h, 0) - 2.0 * field(0, 0, 0) + field(0, -h, 0)) / (h * h);
    CxD jy = jet_deriv_value(f, 0, 2, 0);
    CHECK(std::abs(jy.re - fdy) < 1e-6 * std::abs(fdy));
  }
}

TEST_CASE("laurent: exact finite Laurent polynomials") {
  auto f1 = [](CxD z) { return CxD(1.0) / z; };
  auto c1 = laurent_coefficients<double>(f1, CxD(0.0), 2.0, -3, 2);
  CHECK(abs(c1[-1] - CxD(1.0)) < 1e-14);
  for (int m : {-3, -2, 0, 1, 2}) CHECK(abs(c1[m]) < 1e-14);

  auto f2 = [](CxD z) { return z + CxD(2.0) / (z * z * z); };
  auto c2 = laurent_coefficients<double>(f2, CxD(0.0), 1.5, -4, 2);
  CHECK(abs(c2[1] - CxD(1.0)) < 1e-13);
  CHECK(abs(c2[-3] - CxD(2.0)) < 1e-13);
  for (int m : {-4, -2, -1, 0, 2}) CHECK(abs(c2[m]) < 1e-13);
}

TEST_CASE("laurent: anti-aliasing guard") {
  auto f = [](CxD z) { return z; };
  CHECK_THROWS_AS(laurent_coefficients<double>(f, CxD(0.0), 1.0, -8, 8, 16), LaurentError);
}

TEST_CASE("linalg: lu and jacobi") {
  Mat<double> a = {{2.0, 1.0, 0.0}, {1.0, 3.0, 1.0}, {0.0, 1.0, 4.0}};
  auto x = lu_solve(a, std::vector<double>{1.0, 2.0, 3.0});
  // residual
  auto r = mat_vec(a, x);
  CHECK(std::abs(r[0] - 1.0) + std::abs(r[1] - 2.0) + std::abs(r[2] - 3.0) < 1e-12);

  auto ev = symmetric_eigenvalues(a);
  // eigenvalues of that tridiagonal matrix: all positive, trace preserved
  CHECK(ev[0] > 0.0);
  CHECK(std::abs(ev[0] + ev[1] + ev[2] - 9.0) < 1e-10);
}
