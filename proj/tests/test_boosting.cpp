#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "ilr/boosting.hpp"
#include "ilr/core.hpp"

using namespace ilr;

namespace {

std::vector<std::unique_ptr<WeakLearner>> cheaters(int N, double gamma, int* label,
                                                   std::uint64_t seed) {
  std::vector<std::unique_ptr<WeakLearner>> v;
  for (int i = 0; i < N; ++i)
    v.push_back(std::make_unique<CheatingWeakLearner>(
        gamma, [label] { return *label; }, seed + i));
  return v;
}

}  // namespace

TEST_CASE("auxiliary cost matrix") {
  Mat c = aux_cost_matrix({0.0, 0.0});
  CHECK(c(0, 0) == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(c(0, 1) == doctest::Approx(0.5).epsilon(1e-12));

  for (int K : {2, 3, 4, 7}) {
    Vec s(K, 0.0);
    Mat chat = aux_cost_matrix(s);
    for (int y = 0; y < K; ++y) {
      CHECK(-chat(y, y) == doctest::Approx((K - 1.0) / K).epsilon(1e-12));
      double row = 0.0;
      for (int k = 0; k < K; ++k) row += chat(y, k);
      CHECK(std::abs(row) <= 1e-12);
    }
  }

  Mat c3 = aux_cost_matrix({1.0, 0.0, 0.0});
  Vec sig = softmax({1.0, 0.0, 0.0});
  CHECK(c3(1, 0) == doctest::Approx(sig[0]).epsilon(1e-12));
  CHECK(c3(1, 1) == doctest::Approx(sig[1] - 1.0).epsilon(1e-12));
  CHECK(c3(1, 2) == doctest::Approx(sig[2]).epsilon(1e-12));
}

TEST_CASE("scaled cost matrix lies in the admissible class") {
  Mat c = cost_matrix({0.0, 0.0, 0.0});
  for (int y = 0; y < 3; ++y) {
    CHECK(c(y, y) == 0.0);
    double row = 0.0;
    for (int k = 0; k < 3; ++k) {
      if (k != y) CHECK(c(y, k) == doctest::Approx(1.0 / 3).epsilon(1e-12));
      row += c(y, k);
    }
    CHECK(row <= 1.0);
  }
  CHECK(cost_matrix_in_class(c));

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int it = 0; it < 500; ++it) {
    int K = 2 + it % 4;
    Vec s(K);
    for (auto& v : s) v = u(rng);
    CHECK(cost_matrix_in_class(cost_matrix(s)));
  }

  Mat bad(2, 2);
  bad(0, 0) = 0.1;
  CHECK_FALSE(cost_matrix_in_class(bad));
}

TEST_CASE("weak learning baseline distribution") {
  Vec u0 = wlc_baseline(0.0, 1, 3);
  for (double v : u0) CHECK(v == doctest::Approx(1.0 / 3).epsilon(1e-12));
  Vec u1 = wlc_baseline(1.0, 2, 4);
  CHECK(u1[2] == doctest::Approx(1.0).epsilon(1e-12));
  Vec u4 = wlc_baseline(0.4, 1, 4);
  CHECK(u4[0] == doctest::Approx(0.15).epsilon(1e-12));
  CHECK(u4[1] == doctest::Approx(0.55).epsilon(1e-12));
  CHECK(u4[2] == doctest::Approx(0.15).epsilon(1e-12));
  CHECK_THROWS_AS(wlc_baseline(1.5, 0, 3), std::invalid_argument);
}

TEST_CASE("cheating weak learner honors its edge") {
  int label = 1;
  CheatingWeakLearner perfect(1.0, [&] { return label; }, 7);
  Mat c = cost_matrix({0.0, 0.0, 0.0});
  for (int t = 0; t < 50; ++t) CHECK(perfect.predict({0.0}, c) == 1);

  CheatingWeakLearner random(0.0, [&] { return label; }, 7);
  int counts[3] = {0, 0, 0};
  for (int t = 0; t < 3000; ++t) ++counts[random.predict({0.0}, c)];
  for (int k = 0; k < 3; ++k) {
    CHECK(counts[k] > 800);
    CHECK(counts[k] < 1200);
  }
}

TEST_CASE("cheating learner satisfies the weak learning condition empirically") {
  // Cumulative cost <= baseline expected cost + S with S = 3 sqrt(n log 20),
  // over 20 seeds on the booster's own cost-matrix sequence.
  const double gamma = 0.3;
  const int n = 2000;
  std::mt19937_64 env(11);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  int violations = 0;
  for (int seed = 0; seed < 20; ++seed) {
    CheatingWeakLearner wl(
        gamma, [&] { return 0; }, 100 + seed);
    double cost = 0.0, base = 0.0;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < n; ++t) {
      Vec s = {u(rng), u(rng), u(rng)};
      Mat C = cost_matrix(s);
      int y = std::uniform_int_distribution<int>(0, 2)(rng);
      // peek callback: rebuild a learner-visible label via closure variable
      CheatingWeakLearner round_wl(
          gamma, [&] { return y; }, 1000 * seed + t);
      int l = round_wl.predict({0.0}, C);
      cost += C(y, l);
      Vec ub = wlc_baseline(gamma, y, 3);
      for (int k = 0; k < 3; ++k) base += ub[k] * C(y, k);
    }
    if (cost > base + 3 * std::sqrt(n * std::log(20.0))) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("booster with a perfect oracle drives errors to zero") {
  int label = 2;
  Booster b(cheaters(1, 1.0, &label, 5), 3, 400, 17);
  int late_mistakes = 0;
  for (int t = 0; t < 400; ++t) {
    BoostRoundResult r = b.round({1.0, 0.0, 0.0}, label);
    if (t >= 200 && r.mistake) ++late_mistakes;
    CHECK(std::abs(b.max_score_inf()) <= std::log(400.0 * 3) + 1e-10);
  }
  CHECK(late_mistakes == 0);
  bool degenerate = false;
  CHECK(b.empirical_edge(0, &degenerate) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_FALSE(degenerate);
}

TEST_CASE("identical experts keep Hedge symmetric") {
  int label = 0;
  Booster b(cheaters(4, 1.0, &label, 9), 3, 200, 3);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    label = std::uniform_int_distribution<int>(0, 2)(rng);
    b.round({0.5, -0.2, 0.1}, label);
  }
  // Perfect oracles make every expert identical, so mistake ledgers agree.
  for (int i = 1; i < 4; ++i)
    CHECK(b.expert_mistakes()[i] == b.expert_mistakes()[0]);
}

TEST_CASE("empirical edge: uniformly wrong learner at s=0, K=2 has edge -1") {
  // l != y every round at s = 0: numerator sums 1/2, denominator sums -1/2.
  Vec s = {0.0, 0.0};
  Mat chat = aux_cost_matrix(s);
  double num = 0.0, den = 0.0;
  for (int t = 0; t < 10; ++t) {
    num += chat(0, 1);
    den += chat(0, 0);
  }
  CHECK(num / den == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("more weak learners do not hurt on a hard stream") {
  const int n = 1200;
  const double gamma = 0.25;
  auto run = [&](int N, std::uint64_t seed) {
    int label = 0;
    Booster b(cheaters(N, gamma, &label, seed), 3, n, seed + 1);
    std::mt19937_64 rng(seed + 2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int mistakes = 0;
    for (int t = 0; t < n; ++t) {
      Vec x = {u(rng), u(rng)};
      label = std::uniform_int_distribution<int>(0, 2)(rng);
      if (b.round(x, label).mistake) ++mistakes;
    }
    return static_cast<double>(mistakes) / n;
  };
  double e1 = 0.0, e8 = 0.0;
  for (int s = 0; s < 3; ++s) {
    e1 += run(1, 40 + s);
    e8 += run(8, 40 + s);
  }
  CHECK(e8 <= e1 + 0.02);
}

TEST_CASE("linear weak learner beats chance on a separable stream") {
  LinearWeakLearner wl(3, 2, 0.2);
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int correct = 0;
  const int n = 3000;
  for (int t = 0; t < n; ++t) {
    Vec x = {u(rng), u(rng)};
    int y = x[0] > 0.2 ? 0 : (x[0] < -0.2 ? 1 : 2);
    Mat C = cost_matrix({0.0, 0.0, 0.0});
    if (t >= n / 2 && wl.predict(x, C) == y) ++correct;
    wl.update(x, C, y);
  }
  CHECK(correct > n / 2 / 3 + 150);
}
