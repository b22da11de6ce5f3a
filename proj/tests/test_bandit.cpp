#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "ilr/bandit.hpp"

using namespace ilr;

namespace {

BanditConfig small_config(int K, int d, double B, double mu, int grid_points) {
  BanditConfig cfg;
  cfg.decision_set = Constraint{ConstraintKind::RowBall, K, d, B};
  cfg.mu = mu;
  cfg.R = 1.0;
  cfg.sampler.method = SamplerMethod::GridExact;
  cfg.sampler.grid_points = grid_points;
  cfg.decision_seed = 99;
  return cfg;
}

}  // namespace

TEST_CASE("weight cap formula") {
  CHECK(obama_weight_cap(3, 1.0, 1.0, 0.1) ==
        doctest::Approx(3.0 / (0.9 * std::exp(-2.0) + 0.1)).epsilon(1e-12));
  CHECK(obama_weight_cap(2, 0.0, 1.0, 0.0) == doctest::Approx(2.0).epsilon(1e-12));
  // mu = 1 floor: L = K.
  CHECK(obama_weight_cap(5, 3.0, 1.0, 1.0) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("round mechanics: zero feedback on mistakes, importance weight on hits") {
  auto cfg = small_config(3, 1, 1.0, 0.1, 7);
  BanditLearner bl(cfg);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int hits = 0;
  for (int t = 0; t < 300; ++t) {
    Vec x = {u(rng)};
    int y = t % 3;
    BanditRoundResult r = bl.round(x, y);
    double fs = 0.0;
    for (double v : r.feedback) fs += v;
    if (r.predicted != y) {
      CHECK(fs == 0.0);
      CHECK(r.mistake);
    } else {
      ++hits;
      CHECK(r.feedback[r.predicted] ==
            doctest::Approx(1.0 / r.probs[r.predicted]).epsilon(1e-12));
      CHECK(fs == doctest::Approx(1.0 / r.probs[r.predicted]).epsilon(1e-12));
    }
    CHECK_FALSE(r.mistake == (r.predicted == y));
  }
  CHECK(hits > 0);
  CHECK(bl.mistakes() == 300 - hits);
  CHECK_THROWS_AS(bl.round({0.5}, 7), std::invalid_argument);
}

TEST_CASE("probability floor and |feedback|_1 <= L on random rounds") {
  auto cfg = small_config(3, 2, 1.0, 0.05, 5);
  BanditLearner bl(cfg);
  double floor = ((1 - 0.05) * std::exp(-2.0) + 0.05) / 3.0;
  CHECK(bl.probability_floor() == doctest::Approx(floor).epsilon(1e-12));
  CHECK(bl.weight_cap() == doctest::Approx(1.0 / floor).epsilon(1e-12));
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int t = 0; t < 400; ++t) {
    Vec x = {u(rng), u(rng)};
    BanditRoundResult r = bl.round(x, t % 3);
    double s = 0.0, f1 = 0.0;
    for (double v : r.probs) {
      CHECK(v >= floor - 1e-12);
      s += v;
    }
    CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    for (double v : r.feedback) f1 += std::abs(v);
    CHECK(f1 <= bl.weight_cap() + 1e-12);
  }
}

TEST_CASE("importance weighting is exactly unbiased given the played probabilities") {
  auto cfg = small_config(3, 1, 1.0, 0.1, 7);
  BanditLearner bl(cfg);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    int y = t % 3;
    BanditRoundResult r = bl.round({u(rng)}, y);
    // Enumerate all K outcomes under the played distribution.
    Vec expect(3, 0.0);
    for (int k = 0; k < 3; ++k)
      if (k == y) expect[k] += r.probs[k] * (1.0 / r.probs[k]);
    for (int k = 0; k < 3; ++k)
      CHECK(expect[k] == doctest::Approx(k == y ? 1.0 : 0.0).epsilon(1e-12));
  }
}

TEST_CASE("decision stream is reproducible and separate from the sampler") {
  auto cfg = small_config(3, 1, 1.0, 0.1, 7);
  BanditLearner a(cfg), b(cfg);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 50; ++t) {
    Vec x = {u(rng)};
    CHECK(a.round(x, t % 3).predicted == b.round(x, t % 3).predicted);
  }
}

TEST_CASE("mu settings: pinned value, limits, monotonicity") {
  ObamaMuSettings s = obama_mu_settings(2, 3, 1, 1, 1e4);
  double e = std::exp(1.0);
  double expect = std::sqrt(18.0 * std::log(1e4 / 6.0 + e) / 1e4);
  CHECK(s.mu_sqrt == doctest::Approx(expect).epsilon(1e-12));
  CHECK(s.mu_sqrt == doctest::Approx(0.117).epsilon(0.02));
  CHECK(s.mu_exp == 0.0);

  ObamaMuSettings z = obama_mu_settings(2, 3, 0, 1, 100);
  CHECK(z.bound_exp == doctest::Approx(5.0 * 18.0 * std::log(e)).epsilon(1e-12));

  double prev = 1.0;
  for (double n : {1e3, 1e4, 1e5, 1e6}) {
    double mu = obama_mu_settings(2, 3, 1, 1, n).mu_sqrt;
    CHECK(mu < prev);
    prev = mu;
  }
  // Large-B regimes prefer the sqrt branch, tiny-n prefers exp.
  CHECK(obama_mu_settings(2, 3, 3, 1, 1e6).chosen_mu() > 0.0);
}

TEST_CASE("learns a realizable stream better than uniform guessing") {
  auto cfg = small_config(3, 1, 1.0, 0.05, 9);
  BanditLearner bl(cfg);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int n = 1500;
  for (int t = 0; t < n; ++t) {
    Vec x = {u(rng)};
    int y = x[0] < -0.33 ? 0 : (x[0] < 0.33 ? 1 : 2);
    bl.round(x, y);
  }
  // Uniform guessing makes ~2n/3 mistakes; the learner should beat that.
  CHECK(bl.mistakes() < 2 * n / 3 - 100);
}
