#include "ilr/bandit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ilr {

double obama_weight_cap(int K, double B, double R, double mu) {
  return K / ((1.0 - mu) * std::exp(-2.0 * B * R) + mu);
}

namespace {

RegressorConfig make_inner_config(const BanditConfig& cfg) {
  RegressorConfig rc;
  rc.decision_set = cfg.decision_set;
  rc.mu = cfg.mu;
  rc.R = cfg.R;
  rc.L = obama_weight_cap(cfg.decision_set.K, cfg.decision_set.B, cfg.R, cfg.mu);
  rc.sampler = cfg.sampler;
  return rc;
}

}  // namespace

BanditLearner::BanditLearner(BanditConfig cfg)
    : cfg_(std::move(cfg)),
      L_(obama_weight_cap(cfg_.decision_set.K, cfg_.decision_set.B, cfg_.R, cfg_.mu)),
      floor_(((1.0 - cfg_.mu) * std::exp(-2.0 * cfg_.decision_set.B * cfg_.R) + cfg_.mu) /
             cfg_.decision_set.K),
      inner_(make_inner_config(cfg_)),
      decision_rng_(cfg_.decision_seed) {}

BanditRoundResult BanditLearner::round(const Vec& x, int true_label) {
  const int K = cfg_.decision_set.rows();
  if (true_label < 0 || true_label >= K)
    throw std::invalid_argument("label out of range");

  Vec p = inner_.predict_prob(x);
  // The floor holds analytically for the exact posterior mean; Monte Carlo
  // error can dent it, in which case we re-mix toward uniform just enough to
  // restore it, keeping |feedback|_1 <= L unconditionally.
  double lambda = 0.0;
  for (int k = 0; k < K; ++k) {
    if (p[k] < floor_) lambda = std::max(lambda, (floor_ - p[k]) / (1.0 / K - p[k]));
  }
  if (lambda > 0.0) {
    for (int k = 0; k < K; ++k) p[k] = (1.0 - lambda) * p[k] + lambda / K;
  }

  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double u = unif(decision_rng_);
  int yhat = K - 1;
  double acc = 0.0;
  for (int k = 0; k < K; ++k) {
    acc += p[k];
    if (u < acc) {
      yhat = k;
      break;
    }
  }

  // Bandit feedback contract: the true label is read only through this
  // indicator.
  bool correct = (yhat == true_label);
  Vec feedback(K, 0.0);
  if (correct) feedback[yhat] = 1.0 / p[yhat];
  inner_.update(x, feedback);

  BanditRoundResult res;
  res.predicted = yhat;
  res.mistake = !correct;
  res.probs = std::move(p);
  res.feedback = std::move(feedback);
  if (res.mistake) ++mistakes_;
  return res;
}

ObamaMuSettings obama_mu_settings(double d, double K, double B, double R, double n) {
  if (d <= 0 || K < 2 || n <= 0 || B < 0 || R <= 0)
    throw std::invalid_argument("bad obama parameters");
  double logterm = std::log(B * R * n / (d * K) + std::exp(1.0));
  ObamaMuSettings s;
  s.mu_exp = 0.0;
  s.mu_sqrt = std::min(0.5, std::sqrt(d * K * K * logterm / n));
  s.bound_exp = 5.0 * d * K * K * std::exp(2.0 * B * R) * logterm;
  s.bound_sqrt = 5.0 * d * K * K * logterm / s.mu_sqrt + 2.0 * s.mu_sqrt * n;
  return s;
}

}  // namespace ilr
