#pragma once

// Small dense solvers, generic over the scalar so extended precision flows
// through. Everything here is 4x4-to-9x9 scale; no BLAS needed.

#include <array>
#include <stdexcept>
#include <vector>

#include "fgkp/cx.hpp"
#include "fgkp/real.hpp"

namespace fgkp {

template <class T>
using Mat = std::vector<std::vector<T>>;

template <class T>
Mat<T> mat_zero(int n, int m) {
  return Mat<T>(n, std::vector<T>(m, T(0.0)));
}

// Solve A x = b by partial-pivot LU; A square, overwritten copies inside.
// T is Cx<R> or R. Magnitude functor lets both share the pivot logic.
template <class T, class MagF>
std::vector<T> lu_solve_impl(Mat<T> a, std::vector<T> b, MagF mag) {
  const int n = int(a.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    auto best = mag(a[col][col]);
    for (int r = col + 1; r < n; ++r) {
      auto m = mag(a[r][col]);
      if (m > best) { best = m; piv = r; }
    }
    if (!(best > decltype(best)(0.0))) throw std::runtime_error("lu_solve: singular matrix");
    if (piv != col) { std::swap(a[piv], a[col]); std::swap(b[piv], b[col]); }
    for (int r = col + 1; r < n; ++r) {
      T f = a[r][col] / a[col][col];
      a[r][col] = f;
      for (int c = col + 1; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<T> x(n);
  for (int r = n - 1; r >= 0; --r) {
    T s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

template <class R>
std::vector<R> lu_solve(const Mat<R>& a, const std::vector<R>& b) {
  return lu_solve_impl(a, b, [](R v) { using std::fabs; using fgkp::fabs; return fabs(v); });
}

template <class R>
std::vector<Cx<R>> lu_solve(const Mat<Cx<R>>& a, const std::vector<Cx<R>>& b) {
  return lu_solve_impl(a, b, [](Cx<R> v) { return norm2(v); });
}

template <class T>
Mat<T> mat_inverse(const Mat<T>& a) {
  const int n = int(a.size());
  Mat<T> inv = mat_zero<T>(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<T> e(n, T(0.0));
    e[j] = T(1.0);
    auto col = lu_solve(a, e);
    for (int i = 0; i < n; ++i) inv[i][j] = col[i];
  }
  return inv;
}

template <class T>
std::vector<T> mat_vec(const Mat<T>& a, const std::vector<T>& x) {
  std::vector<T> y(a.size(), T(0.0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

template <class T>
Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
  const int n = int(a.size()), m = int(b[0].size()), k = int(b.size());
  Mat<T> c = mat_zero<T>(n, m);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l)
      for (int j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
// Input is symmetrized; returns eigenvalues ascending.
template <class R>
std::vector<R> symmetric_eigenvalues(Mat<R> a) {
  using std::fabs; using fgkp::fabs;
  using std::sqrt; using fgkp::sqrt;
  const int n = int(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = (a[i][j] + a[j][i]) * R(0.5);
  for (int sweep = 0; sweep < 60; ++sweep) {
    R off(0.0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (!(to_double_mag(off) > 1e-64)) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (fabs(a[p][q]) == R(0.0)) continue;
        R theta = (a[q][q] - a[p][p]) / (R(2.0) * a[p][q]);
        R t = R(1.0) / (fabs(theta) + sqrt(theta * theta + R(1.0)));
        if (theta < R(0.0)) t = -t;
        R c = R(1.0) / sqrt(t * t + R(1.0));
        R s = t * c;
        for (int k = 0; k < n; ++k) {
          R akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          R apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<R> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a[i][i];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (ev[j] < ev[i]) std::swap(ev[i], ev[j]);
  return ev;
}

}  // namespace fgkp
