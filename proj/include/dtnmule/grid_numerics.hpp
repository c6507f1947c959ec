#pragma once

#include <Eigen/Core>
#include <array>
#include <cstddef>

// Quadrature and differentiation on (possibly non-uniform) 1-D grids.

namespace dtnmule::numerics {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename DerivedX, typename DerivedY>
typename DerivedX::Scalar trapezoid(const Eigen::MatrixBase<DerivedX>& x,
                                    const Eigen::MatrixBase<DerivedY>& y) {
  const Eigen::Index n = x.size();
  if (n < 2) return typename DerivedX::Scalar(0);
  const auto dx = x.tail(n - 1) - x.head(n - 1);
  const auto mid = (y.tail(n - 1) + y.head(n - 1)) / 2;
  return dx.cwiseProduct(mid).sum();
}

/// out[i] = integral of y from x[0] to x[i].
template <typename DerivedX, typename DerivedY>
Vector<typename DerivedX::Scalar> cumulative_trapezoid(const Eigen::MatrixBase<DerivedX>& x,
                                                       const Eigen::MatrixBase<DerivedY>& y) {
  using Scalar = typename DerivedX::Scalar;
  Vector<Scalar> out(x.size());
  if (x.size() == 0) return out;
  out(0) = Scalar(0);
  for (Eigen::Index i = 1; i < x.size(); ++i) {
    out(i) = out(i - 1) + (x(i) - x(i - 1)) * (y(i) + y(i - 1)) / 2;
  }
  return out;
}

/// out[i] = integral of y from x[i] to x[last].
template <typename DerivedX, typename DerivedY>
Vector<typename DerivedX::Scalar> tail_trapezoid(const Eigen::MatrixBase<DerivedX>& x,
                                                 const Eigen::MatrixBase<DerivedY>& y) {
  using Scalar = typename DerivedX::Scalar;
  const Eigen::Index n = x.size();
  Vector<Scalar> out(n);
  if (n == 0) return out;
  out(n - 1) = Scalar(0);
  for (Eigen::Index i = n - 2; i >= 0; --i) {
    out(i) = out(i + 1) + (x(i + 1) - x(i)) * (y(i + 1) + y(i)) / 2;
  }
  return out;
}

namespace detail {

// Weights w such that f'(t) ~ sum_j w[j] f(p[j]) for the quadratic through p.
template <typename Scalar>
std::array<Scalar, 3> lagrange_derivative_weights(const std::array<Scalar, 3>& p, Scalar t) {
  std::array<Scalar, 3> w{};
  for (std::size_t j = 0; j < 3; ++j) {
    Scalar sum(0);
    for (std::size_t k = 0; k < 3; ++k) {
      if (k == j) continue;
      Scalar term = Scalar(1) / (p[j] - p[k]);
      for (std::size_t m = 0; m < 3; ++m) {
        if (m == j || m == k) continue;
        term *= (t - p[m]) / (p[j] - p[m]);
      }
      sum += term;
    }
    w[j] = sum;
  }
  return w;
}

}  // namespace detail

/// Second-order derivative estimate: central three-point stencil inside the
/// grid, one-sided three-point stencils at both ends. Requires >= 3 points.
template <typename DerivedX, typename DerivedY>
Vector<typename DerivedX::Scalar> derivative(const Eigen::MatrixBase<DerivedX>& x,
                                             const Eigen::MatrixBase<DerivedY>& y) {
  using Scalar = typename DerivedX::Scalar;
  const Eigen::Index n = x.size();
  Vector<Scalar> out(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index c = i == 0 ? 1 : (i == n - 1 ? n - 2 : i);
    const std::array<Scalar, 3> p{x(c - 1), x(c), x(c + 1)};
    const auto w = detail::lagrange_derivative_weights(p, x(i));
    out(i) = w[0] * y(c - 1) + w[1] * y(c) + w[2] * y(c + 1);
  }
  return out;
}

template <typename Derived>
bool strictly_increasing(const Eigen::MatrixBase<Derived>& x) {
  for (Eigen::Index i = 1; i < x.size(); ++i) {
    if (!(x(i) > x(i - 1))) return false;
  }
  return true;
}

}  // namespace dtnmule::numerics
