#pragma once

#include <array>
#include <cmath>
#include <string>

#include "lipdyn/common.hpp"

namespace lipdyn {

// Points/vectors of R^n, n in {1,2,3}.  The norm is the maximum norm
// throughout; balls are axis-aligned boxes by construction.
struct Vec {
  std::array<double, 3> a{0.0, 0.0, 0.0};
  int n = 0;

  Vec() = default;
  explicit Vec(int dim) : n(dim) {}
  Vec(double x) : a{x, 0.0, 0.0}, n(1) {}
  Vec(double x, double y) : a{x, y, 0.0}, n(2) {}
  Vec(double x, double y, double z) : a{x, y, z}, n(3) {}

  static Vec zero(int dim) { return Vec(dim); }

  double& operator[](int i) { return a[std::size_t(i)]; }
  double operator[](int i) const { return a[std::size_t(i)]; }

  Vec& operator+=(const Vec& o) {
    for (int i = 0; i < n; ++i) a[std::size_t(i)] += o[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (int i = 0; i < n; ++i) a[std::size_t(i)] -= o[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (int i = 0; i < n; ++i) a[std::size_t(i)] *= s;
    return *this;
  }

  bool finite() const {
    for (int i = 0; i < n; ++i)
      if (!std::isfinite(a[std::size_t(i)])) return false;
    return true;
  }
};

inline Vec operator+(Vec a, const Vec& b) { return a += b; }
inline Vec operator-(Vec a, const Vec& b) { return a -= b; }
inline Vec operator*(double s, Vec a) { return a *= s; }
inline Vec operator*(Vec a, double s) { return a *= s; }
inline Vec operator-(Vec a) { return a *= -1.0; }

inline double norm_inf(const Vec& v) {
  double m = 0.0;
  for (int i = 0; i < v.n; ++i) m = std::max(m, std::fabs(v[i]));
  return m;
}

inline double dist_inf(const Vec& a, const Vec& b) { return norm_inf(a - b); }

std::string to_string(const Vec& v);

// Dense n x n matrix, row-major, n <= 3.
struct Mat {
  std::array<double, 9> a{};
  int n = 0;

  Mat() = default;
  explicit Mat(int dim) : n(dim) {}

  static Mat identity(int dim) {
    Mat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }
  static Mat diag(const Vec& d) {
    Mat m(d.n);
    for (int i = 0; i < d.n; ++i) m(i, i) = d[i];
    return m;
  }

  double& operator()(int i, int j) { return a[std::size_t(i * n + j)]; }
  double operator()(int i, int j) const { return a[std::size_t(i * n + j)]; }

  Vec apply(const Vec& v) const {
    Vec r(n);
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += (*this)(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  Mat times(const Mat& o) const {
    Mat r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int k = 0; k < n; ++k) s += (*this)(i, k) * o(k, j);
        r(i, j) = s;
      }
    return r;
  }

  // Operator norm induced by the max norm: max absolute row sum.
  double norm_inf() const {
    double m = 0.0;
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      for (int j = 0; j < n; ++j) row += std::fabs((*this)(i, j));
      m = std::max(m, row);
    }
    return m;
  }

  // Gauss-Jordan with partial pivoting; throws Singular.
  Mat inverse() const;
};

// Mininorm inf{|Av| : |v| = 1} in the max norm; equals 1/|A^{-1}|.
inline double mininorm(const Mat& A) { return 1.0 / A.inverse().norm_inf(); }

// Max-norm ball B_r(center): an axis-aligned cube/interval.
struct Box {
  Vec center;
  double radius = 0.0;

  Box() = default;
  Box(const Vec& c, double r) : center(c), radius(r) {
    if (!(r > 0.0)) fail(ErrorCode::domain, "Box radius must be positive");
    if (!c.finite()) fail(ErrorCode::domain, "Box center must be finite");
  }

  int dim() const { return center.n; }
  double lo(int i) const { return center[i] - radius; }
  double hi(int i) const { return center[i] + radius; }

  bool contains(const Vec& x, double tol = 0.0) const {
    for (int i = 0; i < center.n; ++i)
      if (std::fabs(x[i] - center[i]) > radius + tol) return false;
    return true;
  }

  bool contains(const Box& inner, double tol = 0.0) const {
    for (int i = 0; i < center.n; ++i) {
      if (inner.lo(i) < lo(i) - tol) return false;
      if (inner.hi(i) > hi(i) + tol) return false;
    }
    return true;
  }

  // Coordinate-wise clamp: a 1-Lipschitz retraction onto the box in the
  // max norm, so it preserves Lipschitz constants of maps composed with it.
  Vec clamp(const Vec& x) const {
    Vec r = x;
    for (int i = 0; i < center.n; ++i)
      r[i] = std::min(std::max(r[i], lo(i)), hi(i));
    return r;
  }
};

}  // namespace lipdyn
