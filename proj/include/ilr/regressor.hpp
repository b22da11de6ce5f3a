#pragma once

#include <cstdint>
#include <vector>

#include "ilr/sampler.hpp"

// The improper online multiclass logistic learner: predict
//   z_t = sigma^+(smooth_mu(E_{W ~ P_t}[softmax(W x_t)]))
// and update the posterior P_{t+1}(W) ~ exp(-(1/L) sum_{s<=t} loss(W x_s, y_s)).
//
// Two execution modes share the interface. Grid-exact keeps exact exponential
// weights over a fixed grid (incrementally, one loss evaluation per grid point
// per update) and is the validation oracle; Langevin draws one fresh batch of
// m posterior samples per prediction.

namespace ilr {

struct RegressorConfig {
  Constraint decision_set;
  double mu = 0.0;  // smoothing parameter in [0, 1/2]
  double L = 1.0;   // mixability scale (max |y|_1)
  double R = 1.0;   // instance norm bound
  SamplerConfig sampler;
};

class AggregatingRegressor {
 public:
  explicit AggregatingRegressor(RegressorConfig cfg);

  // Logits for instance x; |result|_inf <= log(K/mu) when mu > 0.
  Vec predict(const Vec& x) const;
  // softmax(predict(x)) without the extra pinv/softmax round trip.
  Vec predict_prob(const Vec& x) const;

  void update(const Vec& x, const Vec& y);
  void update(const Vec& x, int label);  // one-hot convenience

  int round() const { return t_; }
  const RegressorConfig& config() const { return cfg_; }
  const PosteriorSpec& posterior() const { return spec_; }

  // Grid-exact mode only: the grid and cumulative (1/L)-scaled losses, and the
  // total loss of the best grid point (the finite comparator).
  const std::vector<Mat>& grid() const { return grid_; }
  double best_grid_loss() const;
  Mat best_grid_point() const;

 private:
  RegressorConfig cfg_;
  PosteriorSpec spec_;  // history (also kept in grid mode, for oracles)
  int t_ = 1;
  bool grid_mode_;
  std::vector<Mat> grid_;
  Vec grid_cumloss_;   // sum_s loss(W_i x_s, y_s) / L per grid point
  Vec grid_rawloss_;   // unscaled cumulative loss per grid point
};

// Eq.-style bound 5 L D_W log(BRn/D_W + e) + 2 mu sum_t |y_t|_1.
double theoretical_regret_bound(double dim_w, double L, double B, double R,
                                double n, double mu, double sum_y1);

// Exponential weights with rate 1 over a finite class of prediction
// sequences, mixed prediction plus smoothing at mu = 1/n. Regret vs the best
// expert is at most log(#experts) + 2 on any one-hot outcome sequence.
class FiniteAggregation {
 public:
  FiniteAggregation(int num_experts, int horizon);

  // expert_logits[i] is expert i's prediction for this round.
  Vec predict(const std::vector<Vec>& expert_logits) const;
  void update(const std::vector<Vec>& expert_logits, int label);

  const Vec& cumulative_losses() const { return cumloss_; }
  double mu() const { return mu_; }

 private:
  Vec cumloss_;
  double mu_;
};

}  // namespace ilr
