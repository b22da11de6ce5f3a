#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "ilr/sampler.hpp"

// Online multiclass boosting: N cost-sensitive weak learners, one improper
// logistic weight-fitter per learner over W = {(alpha I, I) : alpha in [-2,2]},
// and Hedge with learning rate 1 over the per-prefix expert predictions.

namespace ilr {

// Auxiliary cost matrix: Chat(y, k) = d loss(z, y)/d z_k at z = s, i.e.
// softmax(s)_k for k != y and softmax(s)_y - 1 on the diagonal. Rows sum to 0.
Mat aux_cost_matrix(const Vec& s);

// C(y, k) = (Chat(y, k) - Chat(y, y)) / K: zero diagonal, nonnegative,
// row l1 norm <= 1.
Mat cost_matrix(const Vec& s);

bool cost_matrix_in_class(const Mat& C, double tol = 1e-12);

// Baseline that puts gamma extra weight on the true class.
Vec wlc_baseline(double gamma, int y, int K);

// Stateful cost-sensitive weak learner. predict must not mutate state.
class WeakLearner {
 public:
  virtual ~WeakLearner() = default;
  virtual int predict(const Vec& x, const Mat& C) = 0;
  virtual void update(const Vec& x, const Mat& C, int y) = 0;
};

// Test double satisfying the weak learning condition by construction: draws
// its prediction from u_{gamma, y_t}, peeking at the upcoming true label
// through the supplied callback.
class CheatingWeakLearner : public WeakLearner {
 public:
  CheatingWeakLearner(double gamma, std::function<int()> peek_label,
                      std::uint64_t seed);
  int predict(const Vec& x, const Mat& C) override;
  void update(const Vec&, const Mat&, int) override {}

 private:
  double gamma_;
  std::function<int()> peek_label_;
  std::mt19937_64 rng_;
};

// Honest variant: cost-sensitive one-vs-all linear scorer trained online.
class LinearWeakLearner : public WeakLearner {
 public:
  LinearWeakLearner(int K, int d, double lr = 0.1);
  int predict(const Vec& x, const Mat& C) override;
  void update(const Vec& x, const Mat& C, int y) override;

 private:
  Mat W_;
  double lr_;
};

// One-dimensional improper logistic weight-fitter: exact exponential weights
// over an alpha grid, predicting smooth-mixed scores for s + alpha e_l.
class AlphaGridLogistic {
 public:
  AlphaGridLogistic(int K, int horizon, int grid_points = 65);

  Vec predict(int l, const Vec& s) const;  // score vector s^i
  void update(int l, const Vec& s, int y);

  double best_alpha_loss() const;  // comparator over the grid

 private:
  int K_;
  double mu_;
  Vec alphas_;
  Vec cumloss_;
};

struct BoostRoundResult {
  int predicted;
  bool mistake;
  int sampled_expert;
  std::vector<int> weak_predictions;    // l_t^i
  std::vector<int> expert_predictions;  // yhat_t^i
};

class Booster {
 public:
  Booster(std::vector<std::unique_ptr<WeakLearner>> learners, int K, int horizon,
          std::uint64_t seed, int alpha_grid_points = 65);

  BoostRoundResult round(const Vec& x, int true_label);

  int num_learners() const { return static_cast<int>(learners_.size()); }
  int mistakes() const { return mistakes_; }
  const std::vector<int>& expert_mistakes() const { return expert_mistakes_; }
  // Empirical edge gamma_i = sum_t Chat(y,l) / sum_t Chat(y,y); degenerate
  // (zero denominator) ledgers report 0 and set *degenerate.
  double empirical_edge(int i, bool* degenerate = nullptr) const;
  double max_score_inf() const { return max_score_inf_; }

 private:
  std::vector<std::unique_ptr<WeakLearner>> learners_;
  std::vector<AlphaGridLogistic> logistics_;
  int K_;
  Vec log_hedge_;  // log v^i
  std::mt19937_64 rng_;
  std::vector<int> expert_mistakes_;
  Vec edge_num_, edge_den_;
  int mistakes_ = 0;
  double max_score_inf_ = 0.0;
};

}  // namespace ilr
