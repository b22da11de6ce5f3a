#pragma once

#include <cstdint>
#include <random>

#include "ilr/regressor.hpp"

// Bandit multiclass learning with importance-weighted feedback fed to an
// internal aggregating regressor. Only the indicator 1[yhat == y] of the true
// label is consumed by the learning path.

namespace ilr {

struct BanditConfig {
  Constraint decision_set;
  double mu = 0.0;
  double R = 1.0;
  SamplerConfig sampler;
  std::uint64_t decision_seed = 0;  // separate from sampler RNG streams
};

// L = K / ((1 - mu) exp(-2BR) + mu), the importance-weight cap implied by the
// softmax prediction floor.
double obama_weight_cap(int K, double B, double R, double mu);

struct BanditRoundResult {
  int predicted;    // sampled class
  bool mistake;     // predicted != true label
  Vec probs;        // p_t = softmax(z_t), after floor enforcement
  Vec feedback;     // importance-weighted label vector passed to the inner learner
};

class BanditLearner {
 public:
  explicit BanditLearner(BanditConfig cfg);

  // Predict p_t, sample yhat ~ p_t, build the importance-weighted feedback
  // 1[k = yhat] 1[yhat = y] / p_t(yhat), and update the inner learner.
  BanditRoundResult round(const Vec& x, int true_label);

  const AggregatingRegressor& inner() const { return inner_; }
  double weight_cap() const { return L_; }
  double probability_floor() const { return floor_; }
  int mistakes() const { return mistakes_; }

 private:
  BanditConfig cfg_;
  double L_;
  double floor_;
  AggregatingRegressor inner_;
  std::mt19937_64 decision_rng_;
  int mistakes_ = 0;
};

struct ObamaMuSettings {
  double mu_exp;     // 0
  double mu_sqrt;    // sqrt(d K^2 log(BRn/dK + e) / n)
  double bound_exp;  // 5 d K^2 exp(2BR) log(BRn/dK + e)
  double bound_sqrt; // 5 d K^2 log(.) / mu_sqrt + 2 mu_sqrt n
  double chosen_mu() const { return bound_exp <= bound_sqrt ? mu_exp : mu_sqrt; }
  double chosen_bound() const { return bound_exp <= bound_sqrt ? bound_exp : bound_sqrt; }
};

ObamaMuSettings obama_mu_settings(double d, double K, double B, double R, double n);

}  // namespace ilr
