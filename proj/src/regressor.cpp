#include "ilr/regressor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ilr {

AggregatingRegressor::AggregatingRegressor(RegressorConfig cfg)
    : cfg_(std::move(cfg)),
      grid_mode_(cfg_.sampler.method == SamplerMethod::GridExact) {
  if (cfg_.mu < 0.0 || cfg_.mu > 0.5) throw std::invalid_argument("mu out of range");
  if (cfg_.L <= 0.0) throw std::invalid_argument("L must be positive");
  spec_.constraint = cfg_.decision_set;
  spec_.L = cfg_.L;
  spec_.R = cfg_.R;
  if (grid_mode_) {
    grid_ = make_grid(cfg_.decision_set, cfg_.sampler.grid_points);
    grid_cumloss_.assign(grid_.size(), 0.0);
    grid_rawloss_.assign(grid_.size(), 0.0);
  }
}

Vec AggregatingRegressor::predict_prob(const Vec& x) const {
  if (static_cast<int>(x.size()) != cfg_.decision_set.cols())
    throw std::invalid_argument("instance dimension mismatch");
  double xn = 0.0;
  for (double v : x) xn += v * v;
  if (std::sqrt(xn) > cfg_.R + 1e-9) throw std::invalid_argument("|x| exceeds R");

  const int K = cfg_.decision_set.rows();
  Vec pbar(K, 0.0);
  if (grid_mode_) {
    Vec neg(grid_cumloss_.size());
    for (size_t i = 0; i < neg.size(); ++i) neg[i] = -grid_cumloss_[i];
    double lse = log_sum_exp(neg);
    for (size_t i = 0; i < grid_.size(); ++i) {
      double w = std::exp(neg[i] - lse);
      Vec p = softmax(grid_[i].apply(x));
      for (int k = 0; k < K; ++k) pbar[k] += w * p[k];
    }
  } else {
    SamplerConfig sc = cfg_.sampler;
    // Fresh per-round batch; decorrelate chain streams across rounds.
    sc.seed = cfg_.sampler.seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(t_);
    SampleSet set = draw_samples(spec_, sc);
    for (size_t i = 0; i < set.samples.size(); ++i) {
      Vec p = softmax(set.samples[i].apply(x));
      for (int k = 0; k < K; ++k) pbar[k] += set.weights[i] * p[k];
    }
  }
  return smooth(pbar, cfg_.mu);
}

Vec AggregatingRegressor::predict(const Vec& x) const {
  Vec p = predict_prob(x);
  for (double& v : p) v = std::max(v, 1e-300);
  return softmax_pinv(p);
}

void AggregatingRegressor::update(const Vec& x, const Vec& y) {
  spec_.append(x, y);
  if (grid_mode_) {
    for (size_t i = 0; i < grid_.size(); ++i) {
      double loss = weighted_logistic_loss(grid_[i].apply(x), y);
      grid_rawloss_[i] += loss;
      grid_cumloss_[i] += loss / cfg_.L;
    }
  }
  ++t_;
}

void AggregatingRegressor::update(const Vec& x, int label) {
  Vec y(cfg_.decision_set.rows(), 0.0);
  if (label < 0 || label >= static_cast<int>(y.size()))
    throw std::invalid_argument("label out of range");
  y[label] = 1.0;
  update(x, y);
}

double AggregatingRegressor::best_grid_loss() const {
  if (!grid_mode_) throw std::logic_error("best_grid_loss requires grid-exact mode");
  return *std::min_element(grid_rawloss_.begin(), grid_rawloss_.end());
}

Mat AggregatingRegressor::best_grid_point() const {
  if (!grid_mode_) throw std::logic_error("best_grid_point requires grid-exact mode");
  size_t i = std::min_element(grid_rawloss_.begin(), grid_rawloss_.end()) -
             grid_rawloss_.begin();
  return grid_[i];
}

double theoretical_regret_bound(double dim_w, double L, double B, double R,
                                double n, double mu, double sum_y1) {
  return 5.0 * L * dim_w * std::log(B * R * n / dim_w + std::exp(1.0)) +
         2.0 * mu * sum_y1;
}

FiniteAggregation::FiniteAggregation(int num_experts, int horizon)
    : cumloss_(num_experts, 0.0), mu_(1.0 / horizon) {
  if (num_experts < 1) throw std::invalid_argument("need at least one expert");
  if (horizon < 2) throw std::invalid_argument("horizon too short");
}

Vec FiniteAggregation::predict(const std::vector<Vec>& expert_logits) const {
  if (expert_logits.size() != cumloss_.size())
    throw std::invalid_argument("expert count mismatch");
  Vec neg(cumloss_.size());
  for (size_t i = 0; i < neg.size(); ++i) neg[i] = -cumloss_[i];
  double lse = log_sum_exp(neg);
  Vec w(neg.size());
  for (size_t i = 0; i < neg.size(); ++i) w[i] = std::exp(neg[i] - lse);
  Vec mixed = mix_prediction(expert_logits, w);
  return softmax_pinv(smooth(softmax(mixed), mu_));
}

void FiniteAggregation::update(const std::vector<Vec>& expert_logits, int label) {
  if (expert_logits.size() != cumloss_.size())
    throw std::invalid_argument("expert count mismatch");
  for (size_t i = 0; i < cumloss_.size(); ++i)
    cumloss_[i] += logistic_loss(expert_logits[i], label);
}

}  // namespace ilr
