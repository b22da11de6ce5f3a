#pragma once

#include "ilr/sampler.hpp"

// Proper online learners for empirical contrast: Online Gradient Descent with
// eta_t = c/sqrt(t), and Online Newton Step with generalized projection in the
// A-norm. Predictions are always W_t x for the pre-update iterate.

namespace ilr {

struct OgdConfig {
  Constraint decision_set;
  double R = 1.0;
  double step_constant = 0.0;  // c; 0 selects B / (2 R sqrt(2))
};

class OgdLearner {
 public:
  explicit OgdLearner(OgdConfig cfg);

  Vec predict(const Vec& x) const { return W_.apply(x); }
  // Predict W_t x, then W <- project(W - eta_t grad loss(W x, y)).
  Vec step(const Vec& x, const Vec& y);

  const Mat& weights() const { return W_; }

 private:
  OgdConfig cfg_;
  Mat W_;
  int t_ = 1;
};

struct OnsConfig {
  Constraint decision_set;
  double R = 1.0;
  double gamma = 0.0;    // 0 selects 0.5 min{1/(4 G D), exp(-2BR)}
  double epsilon = 0.0;  // A_0 = epsilon I; 0 selects 1/(gamma^2 D^2)
  int projection_iters = 50;
  double projection_tol = 1e-8;
};

class OnsLearner {
 public:
  explicit OnsLearner(OnsConfig cfg);

  Vec predict(const Vec& x) const { return W_.apply(x); }
  // g = vec(grad), A <- A + g g^T, W <- Pi^A_W(W - (1/gamma) A^{-1} g).
  Vec step(const Vec& x, const Vec& y);

  const Mat& weights() const { return W_; }
  const Vec& hessian_proxy() const { return A_; }  // row-major (Kd)x(Kd)

 private:
  Vec solve(const Vec& rhs) const;  // A u = rhs via Cholesky
  Mat a_norm_project(const Mat& target) const;

  OnsConfig cfg_;
  Mat W_;
  Vec A_;  // dense symmetric positive definite
  int dim_;
};

}  // namespace ilr
