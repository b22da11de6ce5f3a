#pragma once

#include <vector>

// Softmax machinery and the weighted multiclass logistic loss. Everything in
// here is a pure function over length-K score/probability vectors.
//
// Conventions: logits are unconstrained score vectors z in R^K and are treated
// as equivalence classes under constant shifts (only softmax images are ever
// compared); probability vectors are nonnegative and sum to 1.

namespace ilr {

using Vec = std::vector<double>;

// Numerically stable log(sum_k exp(z_k)) via max-subtraction.
double log_sum_exp(const Vec& z);

// p_k = exp(z_k) / sum_j exp(z_j). Throws std::invalid_argument on non-finite
// input or K < 2.
Vec softmax(const Vec& z);

// log softmax(z)_k = z_k - logsumexp(z), computed without exponentiating.
Vec log_softmax(const Vec& z);

// sigma^+(p)_k = log(p_k). Right inverse of softmax on the simplex:
// softmax(softmax_pinv(p)) == p and sum_k exp(()_k) == 1.
// Throws std::domain_error if any entry is <= 0 (smooth first).
Vec softmax_pinv(const Vec& p);

// smooth_mu(p) = (1-mu) p + mu 1/K. Requires mu in [0, 1/2]; floors every
// entry at mu/K, which bounds |softmax_pinv(smooth(p))|_inf by log(K/mu).
Vec smooth(const Vec& p, double mu);

// Weighted multiclass logistic loss -sum_k y_k log softmax(z)_k with y >= 0.
double weighted_logistic_loss(const Vec& z, const Vec& y);

// Unweighted loss -log softmax(z)_y for a class label y in [0, K).
double logistic_loss(const Vec& z, int y);

// Binary logistic loss log(1 + exp(-y z)) for y in {-1, +1}. Equals the K=2
// multiclass loss under the embedding z -> (z, 0), +1 -> class 0, -1 -> class 1.
double binary_logistic_loss(double z, int y);

// grad_z of weighted_logistic_loss: (sum_k y_k) softmax(z) - y.
// Satisfies |grad|_1 <= 2 |y|_1.
Vec loss_gradient(const Vec& z, const Vec& y);

// Mixed prediction sigma^+(sum_i w_i softmax(z_i)) over a weighted finite
// support. Certifies 1/L-mixability of the weighted loss: for one-hot
// outcomes E_pi[exp(-loss)] = exp(-loss(z_pi, y)) exactly. Averaged
// probabilities below 1e-300 are clamped before the log.
Vec mix_prediction(const std::vector<Vec>& support, const Vec& weights);

}  // namespace ilr
