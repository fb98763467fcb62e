#pragma once

// Independent oracles and fixtures for the unit and acceptance tests. The
// oracles avoid the library's numerical routines on purpose: plain loops,
// Gauss-Jordan elimination and dense inverses.

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "birs/score_engine.hpp"

namespace birs::testing {

using Mat = std::vector<std::vector<double>>;

// Solves A z = b by Gauss-Jordan elimination with partial pivoting.
inline std::vector<double> gauss_solve(Mat a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    if (std::abs(a[piv][c]) < 1e-300) throw std::runtime_error("singular system");
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t c = 0; c < n; ++c) b[c] /= a[c][c];
  return b;
}

inline Mat to_rows(const Eigen::MatrixXd& x) {
  Mat m(static_cast<std::size_t>(x.rows()), std::vector<double>(static_cast<std::size_t>(x.cols())));
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j) m[i][j] = x(i, j);
  return m;
}

// OLS through the normal equations X^T X g = X^T y.
inline std::vector<double> ols_normal_equations(const Mat& x, const std::vector<double>& y) {
  const std::size_t n = x.size(), q = x[0].size();
  Mat xtx(q, std::vector<double>(q, 0.0));
  std::vector<double> xty(q, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < q; ++a) {
      xty[a] += x[i][a] * y[i];
      for (std::size_t b = 0; b < q; ++b) xtx[a][b] += x[i][a] * x[i][b];
    }
  }
  return gauss_solve(xtx, xty);
}

// Plain Newton-Raphson on the logistic log-likelihood, started from zero.
inline std::vector<double> newton_logistic(const Mat& x, const std::vector<double>& y,
                                           int max_iter = 100, double tol = 1e-13) {
  const std::size_t n = x.size(), q = x[0].size();
  std::vector<double> g(q, 0.0);
  for (int it = 0; it < max_iter; ++it) {
    Mat hess(q, std::vector<double>(q, 0.0));
    std::vector<double> grad(q, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double eta = 0.0;
      for (std::size_t a = 0; a < q; ++a) eta += x[i][a] * g[a];
      const double mu = 1.0 / (1.0 + std::exp(-eta));
      const double w = mu * (1.0 - mu);
      for (std::size_t a = 0; a < q; ++a) {
        grad[a] += x[i][a] * (y[i] - mu);
        for (std::size_t b = 0; b < q; ++b) hess[a][b] += w * x[i][a] * x[i][b];
      }
    }
    const std::vector<double> step = gauss_solve(hess, grad);
    double size = 0.0;
    for (std::size_t a = 0; a < q; ++a) {
      g[a] += step[a];
      size = std::max(size, std::abs(step[a]));
    }
    if (size < tol) return g;
  }
  return g;
}

// Explicit null residual covariance P = L - L X (X^T L X)^{-1} X^T L with
// L = diag(lambda), built with a dense inverse.
inline Eigen::MatrixXd explicit_projection(const Eigen::MatrixXd& x, const Eigen::VectorXd& lambda) {
  const Eigen::MatrixXd lx = lambda.asDiagonal() * x;
  const Eigen::MatrixXd inner = (x.transpose() * lx).inverse();
  Eigen::MatrixXd p = -lx * inner * lx.transpose();
  p.diagonal() += lambda;
  return p;
}

// G^T P G / n.
inline Eigen::MatrixXd explicit_sigma(const Eigen::MatrixXd& g, const Eigen::MatrixXd& p) {
  return g.transpose() * p * g / static_cast<double>(g.rows());
}

inline ScoreSet make_scores(const Eigen::VectorXd& u, const Eigen::MatrixXd& boot,
                            std::uint64_t seed = 0) {
  ScoreSet s;
  s.u = u;
  s.boot = boot;
  s.seed = seed;
  return s;
}

// Bootstrap matrix whose replicate maxima are all at most `scale`.
inline Eigen::MatrixXd small_boot(Eigen::Index p, Eigen::Index n_boot, double scale,
                                  std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-scale, scale);
  Eigen::MatrixXd b(p, n_boot);
  for (Eigen::Index j = 0; j < p; ++j)
    for (Eigen::Index k = 0; k < n_boot; ++k) b(j, k) = unif(rng);
  return b;
}

inline Eigen::MatrixXd gaussian_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> z;
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = z(rng);
  return m;
}

}  // namespace birs::testing
