#include "ilr/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ilr {

namespace {

// grad of loss(W x, y) with respect to vec(W), row-major.
Vec weight_gradient(const Mat& W, const Vec& x, const Vec& y) {
  Vec gz = loss_gradient(W.apply(x), y);
  Vec g(static_cast<size_t>(W.rows) * W.cols);
  for (int r = 0; r < W.rows; ++r)
    for (int c = 0; c < W.cols; ++c)
      g[static_cast<size_t>(r) * W.cols + c] = gz[r] * x[c];
  return g;
}

}  // namespace

OgdLearner::OgdLearner(OgdConfig cfg)
    : cfg_(std::move(cfg)),
      W_(cfg_.decision_set.rows(), cfg_.decision_set.cols()) {
  if (cfg_.step_constant <= 0.0)
    cfg_.step_constant = cfg_.decision_set.B / (2.0 * cfg_.R * std::sqrt(2.0));
  W_ = cfg_.decision_set.project(std::move(W_));
}

Vec OgdLearner::step(const Vec& x, const Vec& y) {
  Vec pred = W_.apply(x);
  Vec g = weight_gradient(W_, x, y);
  double eta = cfg_.step_constant / std::sqrt(static_cast<double>(t_));
  for (size_t j = 0; j < W_.a.size(); ++j) W_.a[j] -= eta * g[j];
  W_ = cfg_.decision_set.project(std::move(W_));
  ++t_;
  return pred;
}

OnsLearner::OnsLearner(OnsConfig cfg)
    : cfg_(std::move(cfg)),
      W_(cfg_.decision_set.rows(), cfg_.decision_set.cols()),
      dim_(cfg_.decision_set.rows() * cfg_.decision_set.cols()) {
  double D = cfg_.decision_set.diameter();
  double G = 2.0 * cfg_.R;  // one-hot labels: |grad_z|_2 <= 2
  if (cfg_.gamma <= 0.0) {
    double alpha = std::exp(-2.0 * cfg_.decision_set.B * cfg_.R);
    cfg_.gamma = 0.5 * std::min(1.0 / (4.0 * G * D), alpha);
  }
  if (cfg_.epsilon <= 0.0) {
    // 1/(gamma^2 D^2) can overflow when gamma ~ exp(-2BR) underflows; the
    // clamp keeps A_0 finite (the step stays numerically a no-op either way).
    cfg_.epsilon = std::min(1.0 / (cfg_.gamma * cfg_.gamma * D * D), 1e300);
  }
  A_.assign(static_cast<size_t>(dim_) * dim_, 0.0);
  for (int i = 0; i < dim_; ++i) A_[static_cast<size_t>(i) * dim_ + i] = cfg_.epsilon;
  W_ = cfg_.decision_set.project(std::move(W_));
}

Vec OnsLearner::solve(const Vec& rhs) const {
  // Cholesky with on-failure reconditioning by epsilon I.
  Vec L = A_;
  double bump = 0.0;
  for (int attempt = 0; attempt < 4; ++attempt) {
    bool ok = true;
    for (int i = 0; i < dim_ && ok; ++i) {
      for (int j = 0; j <= i; ++j) {
        double s = L[static_cast<size_t>(i) * dim_ + j];
        for (int k = 0; k < j; ++k)
          s -= L[static_cast<size_t>(i) * dim_ + k] * L[static_cast<size_t>(j) * dim_ + k];
        if (i == j) {
          if (s <= 0.0) {
            ok = false;
            break;
          }
          L[static_cast<size_t>(i) * dim_ + j] = std::sqrt(s);
        } else {
          L[static_cast<size_t>(i) * dim_ + j] = s / L[static_cast<size_t>(j) * dim_ + j];
        }
      }
    }
    if (ok) {
      Vec y(dim_), u(dim_);
      for (int i = 0; i < dim_; ++i) {
        double s = rhs[i];
        for (int k = 0; k < i; ++k) s -= L[static_cast<size_t>(i) * dim_ + k] * y[k];
        y[i] = s / L[static_cast<size_t>(i) * dim_ + i];
      }
      for (int i = dim_ - 1; i >= 0; --i) {
        double s = y[i];
        for (int k = i + 1; k < dim_; ++k)
          s -= L[static_cast<size_t>(k) * dim_ + i] * u[k];
        u[i] = s / L[static_cast<size_t>(i) * dim_ + i];
      }
      return u;
    }
    bump = bump == 0.0 ? cfg_.epsilon : bump * 10.0;
    L = A_;
    for (int i = 0; i < dim_; ++i) L[static_cast<size_t>(i) * dim_ + i] += bump;
  }
  throw std::runtime_error("ONS hessian proxy numerically singular");
}

Mat OnsLearner::a_norm_project(const Mat& target) const {
  // Projected gradient on u -> (u - v)^T A (u - v); exact A-norm projection
  // onto row-norm balls has no closed form.
  Mat u = cfg_.decision_set.project(target);
  // Gershgorin upper bound on lambda_max(A).
  double lmax = 0.0;
  for (int i = 0; i < dim_; ++i) {
    double row = 0.0;
    for (int j = 0; j < dim_; ++j) row += std::abs(A_[static_cast<size_t>(i) * dim_ + j]);
    lmax = std::max(lmax, row);
  }
  double eta = 1.0 / lmax;
  for (int it = 0; it < cfg_.projection_iters; ++it) {
    Vec grad(dim_, 0.0);
    for (int i = 0; i < dim_; ++i) {
      double s = 0.0;
      for (int j = 0; j < dim_; ++j)
        s += A_[static_cast<size_t>(i) * dim_ + j] * (u.a[j] - target.a[j]);
      grad[i] = 2.0 * s;
    }
    Mat next = u;
    for (int j = 0; j < dim_; ++j) next.a[j] -= eta * grad[j];
    next = cfg_.decision_set.project(std::move(next));
    double delta = 0.0;
    for (int j = 0; j < dim_; ++j) delta = std::max(delta, std::abs(next.a[j] - u.a[j]));
    u = std::move(next);
    if (delta < cfg_.projection_tol) break;
  }
  return u;
}

Vec OnsLearner::step(const Vec& x, const Vec& y) {
  Vec pred = W_.apply(x);
  Vec g = weight_gradient(W_, x, y);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      A_[static_cast<size_t>(i) * dim_ + j] += g[i] * g[j];
  Vec dir = solve(g);
  Mat target = W_;
  for (int j = 0; j < dim_; ++j) target.a[j] -= dir[j] / cfg_.gamma;
  W_ = a_norm_project(target);
  return pred;
}

}  // namespace ilr
