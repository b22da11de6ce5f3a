// Benchmark runner. Wires the stream generators, learners, and ledgers and
// emits, per run: a per-round ledger CSV for every seed, a summary CSV whose
// realized totals are column sums of the ledgers next to the relevant bound
// formula values, and a metadata JSON record of every hyperparameter and seed.
//
// Determinism contract: identical (config, seed) produces byte-identical
// output files. ILR_THREADS caps the seed fan-out (and the sampler's internal
// chain pool).

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ilr/bandit.hpp"
#include "ilr/baselines.hpp"
#include "ilr/batch.hpp"
#include "ilr/boosting.hpp"
#include "ilr/core.hpp"
#include "ilr/datagen.hpp"
#include "ilr/regressor.hpp"
#include "ilr/sampler.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using ilr::Constraint;
using ilr::ConstraintKind;
using ilr::Mat;
using ilr::Vec;

namespace {

struct Options {
  std::string experiment;
  std::string config_path;
  int d = 1;
  int K = 2;
  double B = 1.0;
  double R = 1.0;
  double L = 1.0;
  int n = 500;
  double mu = -1.0;     // < 0 selects 1/n
  double delta = 0.05;
  int N = 4;            // boosting: weak learner count
  double gamma = 0.1;   // boosting edge / lower-bound margin
  std::string sampler = "grid";
  int m = 256;          // Langevin sample count
  int steps = 200;      // Langevin chain length
  double eta = 0.0;     // Langevin step size (0 = default)
  int grid_points = 33; // grid-exact resolution per free dimension
  std::string seeds = "0";
  std::string out;
};

[[noreturn]] void usage_error(const std::string& msg, const CLI::App& app) {
  std::cerr << "error: " << msg << "\n\n" << app.help() << std::endl;
  std::exit(2);
}

std::vector<std::uint64_t> parse_seeds(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoull(tok));
  }
  return out;
}

// Flat key=value config file; '#' starts a comment. Flags override.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::map<std::string, std::string> kv;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (!key.empty()) kv[key] = val;
  }
  return kv;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

int worker_count() {
  if (const char* env = std::getenv("ILR_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(int count, const std::function<void(int)>& fn) {
  int workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

ilr::SamplerConfig sampler_config(const Options& opt, std::uint64_t seed) {
  ilr::SamplerConfig cfg;
  cfg.method = opt.sampler == "grid" ? ilr::SamplerMethod::GridExact
                                     : ilr::SamplerMethod::ProjectedLangevin;
  cfg.m = opt.m;
  cfg.steps = opt.steps;
  cfg.step_size = opt.eta;
  cfg.grid_points = opt.grid_points;
  cfg.seed = seed;
  return cfg;
}

struct SeedRow {
  std::uint64_t seed;
  std::map<std::string, double> cols;  // insertion-independent (map = sorted)
};

void write_summary(const fs::path& dir, const std::vector<std::string>& cols,
                   const std::vector<SeedRow>& rows) {
  std::ofstream out(dir / "summary.csv");
  out << "seed";
  for (const auto& c : cols) out << "," << c;
  out << "\n";
  for (const auto& r : rows) {
    out << r.seed;
    for (const auto& c : cols) out << "," << fmt(r.cols.at(c));
    out << "\n";
  }
}

// ---------------------------------------------------------------------------
// regret: aggregating learner on a stochastic realizable stream; ledger has
// one row per round, summary compares realized regret to the bound formulas.
SeedRow run_regret(const Options& opt, std::uint64_t seed, const fs::path& dir) {
  Constraint c{opt.K == 2 ? ConstraintKind::Binary : ConstraintKind::RowBall,
               opt.K, opt.d, opt.B};
  double mu = opt.mu >= 0 ? opt.mu : 1.0 / opt.n;

  std::mt19937_64 rng(seed);
  Mat Wstar = c.sample_uniform(rng);
  auto stream = ilr::stochastic_stream(Wstar, opt.R, opt.n, seed ^ 0x5bd1e995ULL);

  ilr::RegressorConfig cfg;
  cfg.decision_set = c;
  cfg.mu = mu;
  cfg.L = opt.L;
  cfg.R = opt.R;
  cfg.sampler = sampler_config(opt, seed);
  ilr::AggregatingRegressor learner(cfg);

  // Comparator candidates: a fixed grid over the decision set (the learner's
  // own grid in grid-exact mode), plus the proper learners' final iterates.
  auto comp_grid = ilr::make_grid(c, opt.grid_points);
  Vec comp_loss(comp_grid.size(), 0.0);
  ilr::OgdLearner ogd(ilr::OgdConfig{c, opt.R, 0.0});
  ilr::OnsLearner ons(ilr::OnsConfig{c, opt.R});
  double ogd_total = 0.0, ons_total = 0.0;

  std::ofstream ledger(dir / ("regret_seed" + std::to_string(seed) + "_ledger.csv"));
  ledger << "t,y,loss,cum_loss,pred_max_abs\n";
  double total = 0.0;
  for (int t = 0; t < opt.n; ++t) {
    const auto& ex = stream[t];
    Vec z = learner.predict(ex.x);
    double loss = ilr::logistic_loss(z, ex.y);
    total += loss;
    double zmax = 0.0;
    for (double v : z) zmax = std::max(zmax, std::abs(v));
    ledger << (t + 1) << "," << ex.y << "," << fmt(loss) << "," << fmt(total)
           << "," << fmt(zmax) << "\n";
    learner.update(ex.x, ex.y);
    Vec y(opt.K, 0.0);
    y[ex.y] = 1.0;
    ogd_total += ilr::logistic_loss(ogd.step(ex.x, y), ex.y);
    ons_total += ilr::logistic_loss(ons.step(ex.x, y), ex.y);
    for (size_t i = 0; i < comp_grid.size(); ++i)
      comp_loss[i] += ilr::logistic_loss(comp_grid[i].apply(ex.x), ex.y);
  }
  double comparator = *std::min_element(comp_loss.begin(), comp_loss.end());
  double grid_size = 1.0;
  for (int i = 0; i < c.free_dim(); ++i) grid_size *= opt.grid_points;
  double eq1 = ilr::theoretical_regret_bound(c.free_dim(), opt.L, opt.B, opt.R,
                                             opt.n, mu, opt.n);

  SeedRow row{seed, {}};
  row.cols["total_loss"] = total;
  row.cols["comparator_loss"] = comparator;
  row.cols["regret"] = total - comparator;
  row.cols["eq1_bound_plus_grid_slack"] = eq1 + std::log(grid_size);
  row.cols["finite_class_bound"] = std::log(grid_size) + 2.0 + 2.0 * mu * opt.n;
  row.cols["ogd_regret"] = ogd_total - comparator;
  row.cols["ons_regret"] = ons_total - comparator;
  return row;
}

// ---------------------------------------------------------------------------
// bandit: OBAMA on a realizable stream; summary compares mistakes to the
// comparator loss plus the chosen Thm-2-style bound value.
SeedRow run_bandit(const Options& opt, std::uint64_t seed, const fs::path& dir) {
  Constraint c{ConstraintKind::RowBall, opt.K, opt.d, opt.B};
  auto settings = ilr::obama_mu_settings(opt.d, opt.K, opt.B, opt.R, opt.n);
  double mu = opt.mu >= 0 ? opt.mu : settings.chosen_mu();

  std::mt19937_64 rng(seed);
  Mat Wstar = c.sample_uniform(rng);
  auto stream = ilr::stochastic_stream(Wstar, opt.R, opt.n, seed ^ 0x5bd1e995ULL);

  ilr::BanditConfig cfg;
  cfg.decision_set = c;
  cfg.mu = mu;
  cfg.R = opt.R;
  cfg.sampler = sampler_config(opt, seed);
  cfg.decision_seed = seed ^ 0x9e3779b9ULL;
  ilr::BanditLearner learner(cfg);

  auto comp_grid = ilr::make_grid(c, opt.grid_points);
  Vec comp_loss(comp_grid.size(), 0.0);

  std::ofstream ledger(dir / ("bandit_seed" + std::to_string(seed) + "_ledger.csv"));
  ledger << "t,y,predicted,mistake,cum_mistakes,p_predicted\n";
  for (int t = 0; t < opt.n; ++t) {
    const auto& ex = stream[t];
    auto res = learner.round(ex.x, ex.y);
    ledger << (t + 1) << "," << ex.y << "," << res.predicted << ","
           << (res.mistake ? 1 : 0) << "," << learner.mistakes() << ","
           << fmt(res.probs[res.predicted]) << "\n";
    for (size_t i = 0; i < comp_grid.size(); ++i)
      comp_loss[i] += ilr::logistic_loss(comp_grid[i].apply(ex.x), ex.y);
  }
  SeedRow row{seed, {}};
  row.cols["mistakes"] = learner.mistakes();
  row.cols["comparator_loss"] =
      *std::min_element(comp_loss.begin(), comp_loss.end());
  row.cols["mu"] = mu;
  row.cols["weight_cap"] = learner.weight_cap();
  row.cols["thm2_bound_value"] = settings.chosen_bound();
  return row;
}

// ---------------------------------------------------------------------------
// boosting: N weak learners on a realizable stream. gamma > 0 selects
// cheating weak learners with that edge; gamma <= 0 selects honest online
// linear weak learners.
SeedRow run_boosting(const Options& opt, std::uint64_t seed, const fs::path& dir) {
  Constraint c{ConstraintKind::RowBall, opt.K, opt.d, std::max(opt.B, 1.0)};
  std::mt19937_64 rng(seed);
  Mat Wstar = c.sample_uniform(rng);
  auto stream = ilr::stochastic_stream(Wstar, opt.R, opt.n, seed ^ 0x5bd1e995ULL);

  int cursor = 0;
  std::vector<std::unique_ptr<ilr::WeakLearner>> learners;
  for (int i = 0; i < opt.N; ++i) {
    if (opt.gamma > 0.0) {
      learners.push_back(std::make_unique<ilr::CheatingWeakLearner>(
          opt.gamma, [&stream, &cursor] { return stream[cursor].y; },
          seed * 101 + static_cast<std::uint64_t>(i)));
    } else {
      learners.push_back(std::make_unique<ilr::LinearWeakLearner>(opt.K, opt.d));
    }
  }
  ilr::Booster booster(std::move(learners), opt.K, opt.n, seed ^ 0x2545f491ULL);

  std::ofstream ledger(dir / ("boosting_seed" + std::to_string(seed) + "_ledger.csv"));
  ledger << "t,y,predicted,mistake,cum_mistakes,sampled_expert\n";
  for (cursor = 0; cursor < opt.n; ++cursor) {
    const auto& ex = stream[cursor];
    auto res = booster.round(ex.x, ex.y);
    ledger << (cursor + 1) << "," << ex.y << "," << res.predicted << ","
           << (res.mistake ? 1 : 0) << "," << booster.mistakes() << ","
           << res.sampled_expert << "\n";
  }
  int min_expert = *std::min_element(booster.expert_mistakes().begin(),
                                     booster.expert_mistakes().end());
  double mean_edge = 0.0;
  for (int i = 0; i < opt.N; ++i) mean_edge += booster.empirical_edge(i) / opt.N;

  SeedRow row{seed, {}};
  row.cols["mistakes"] = booster.mistakes();
  row.cols["error_rate"] = static_cast<double>(booster.mistakes()) / opt.n;
  row.cols["min_expert_mistakes"] = min_expert;
  row.cols["hedge_bound"] =
      4.0 * min_expert + 2.0 * std::log(opt.N / opt.delta);
  row.cols["mean_empirical_edge"] = mean_edge;
  row.cols["max_score_inf"] = booster.max_score_inf();
  return row;
}

// ---------------------------------------------------------------------------
// batch: high-probability conversion on a realizable distribution; excess
// risk is estimated on a fresh held-out sample from the same distribution.
SeedRow run_batch(const Options& opt, std::uint64_t seed, const fs::path& dir) {
  Constraint c{opt.K == 2 ? ConstraintKind::Binary : ConstraintKind::RowBall,
               opt.K, opt.d, opt.B};
  std::mt19937_64 rng(seed);
  Mat Wstar = c.sample_uniform(rng);
  auto train = ilr::stochastic_stream(Wstar, opt.R, opt.n, seed ^ 0x5bd1e995ULL);
  auto test = ilr::stochastic_stream(Wstar, opt.R, 20000, seed ^ 0x7f4a7c15ULL);

  int M = ilr::chunk_count(opt.delta);
  int m = opt.n / (2 * M);
  if (m < 1) throw std::runtime_error("n too small for 2*ceil(log(2/delta)) chunks");
  double grid_size = 1.0;
  for (int i = 0; i < c.free_dim(); ++i) grid_size *= opt.grid_points;
  auto regret_bound = [&](std::size_t len) {
    double mu_inner = 1.0 / static_cast<double>(len);
    return std::log(grid_size) + 2.0 + 2.0 * mu_inner * static_cast<double>(len);
  };
  ilr::LearnerFactory factory = [&, m] {
    ilr::RegressorConfig cfg;
    cfg.decision_set = c;
    cfg.mu = 1.0 / m;
    cfg.L = opt.L;
    cfg.R = opt.R;
    cfg.sampler = sampler_config(opt, seed);
    return ilr::AggregatingRegressor(cfg);
  };
  auto result = ilr::boost_confidence(std::vector<ilr::Example>(train.begin(), train.end()),
                                      opt.delta, factory, regret_bound,
                                      seed ^ 0x94d049bbULL);

  // Ledger: the conversion's view of each training example.
  std::ofstream ledger(dir / ("batch_seed" + std::to_string(seed) + "_ledger.csv"));
  ledger << "t,phase,y,g_loss\n";
  double train_loss = 0.0;
  for (int t = 0; t < opt.n; ++t) {
    const auto& ex = train[t];
    int chunk = t / m;
    std::string phase = chunk < M ? ("chunk" + std::to_string(chunk)) : "ewoo";
    Vec p = result.g(ex.x);
    double loss = -std::log(std::max(p[ex.y], 1e-300));
    train_loss += loss;
    ledger << (t + 1) << "," << phase << "," << ex.y << "," << fmt(loss) << "\n";
  }

  double g_risk = 0.0, star_risk = 0.0;
  for (const auto& ex : test) {
    Vec p = result.g(ex.x);
    g_risk += -std::log(std::max(p[ex.y], 1e-300)) / test.size();
    star_risk += ilr::logistic_loss(Wstar.apply(ex.x), ex.y) / test.size();
  }
  double log1d = std::log(1.0 / opt.delta);
  double shape = (log1d * regret_bound(static_cast<std::size_t>(
                              opt.n / std::max(log1d, 1.0))) +
                  std::log(static_cast<double>(opt.K) * opt.n) *
                      std::log(std::log(static_cast<double>(opt.n)) / opt.delta)) /
                 opt.n;

  SeedRow row{seed, {}};
  row.cols["train_loss_of_g"] = train_loss;
  row.cols["test_risk_of_g"] = g_risk;
  row.cols["reference_risk"] = star_risk;
  row.cols["excess_risk_vs_reference"] = g_risk - star_risk;
  row.cols["chunks"] = M;
  row.cols["mu"] = result.mu;
  row.cols["thm_shape_value"] = shape;
  return row;
}

// ---------------------------------------------------------------------------
// lowerbound: margin adversary against a uniform-random learner.
SeedRow run_lowerbound(const Options& opt, std::uint64_t seed, const fs::path& dir) {
  std::mt19937_64 rng(seed);
  std::mt19937_64 guess_rng(seed ^ 0x6c62272eULL);
  ilr::OnlineBinaryLearner learner;
  std::ofstream ledger(dir / ("lowerbound_seed" + std::to_string(seed) + "_ledger.csv"));
  ledger << "t,y,predicted,mistake,cum_mistakes\n";
  int t = 0, mistakes = 0;
  std::vector<int> preds;
  learner.predict = [&guess_rng, &preds](const Vec&) {
    int p = std::uniform_int_distribution<int>(0, 1)(guess_rng) == 0 ? 1 : -1;
    preds.push_back(p);
    return p;
  };
  learner.update = [&](const Vec&, int y) {
    int p = preds.back();
    if (p != y) ++mistakes;
    ++t;
    ledger << t << "," << y << "," << p << "," << (p != y ? 1 : 0) << ","
           << mistakes << "\n";
  };
  auto [inst, count] = ilr::margin_adversary(opt.d, opt.gamma, learner, rng);

  SeedRow row{seed, {}};
  row.cols["rounds"] = static_cast<double>(inst.xs.size());
  row.cols["mistakes"] = count;
  row.cols["mistake_bound"] = ilr::margin_mistake_bound(opt.d, opt.gamma);
  row.cols["verified_shattering"] = ilr::verify_shattering(inst) ? 1.0 : 0.0;
  // Thm-3-style comparator arithmetic: at B = log(rounds)/gamma the
  // gamma-margin comparator's total loss is at most 1.
  double nrounds = static_cast<double>(inst.xs.size());
  double Bstar = std::log(std::max(nrounds, 2.0)) / opt.gamma;
  row.cols["comparator_B"] = Bstar;
  row.cols["comparator_loss_at_B"] =
      nrounds * std::log(1.0 + std::exp(-opt.gamma * Bstar));
  return row;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online logistic learning benchmark runner"};
  app.get_formatter()->column_width(28);
  Options opt;
  app.add_option("--experiment", opt.experiment,
                 "regret | bandit | boosting | batch | lowerbound");
  app.add_option("--config", opt.config_path, "key=value config file");
  app.add_option("--d", opt.d, "instance dimension");
  app.add_option("--K", opt.K, "class count");
  app.add_option("--B", opt.B, "weight row norm bound");
  app.add_option("--R", opt.R, "instance norm bound");
  app.add_option("--L", opt.L, "label weight cap");
  app.add_option("--n", opt.n, "round / sample count");
  app.add_option("--mu", opt.mu, "smoothing parameter (default: per-experiment)");
  app.add_option("--delta", opt.delta, "confidence parameter");
  app.add_option("--N", opt.N, "weak learner count (boosting)");
  app.add_option("--gamma", opt.gamma, "edge (boosting) / margin (lowerbound)");
  app.add_option("--sampler", opt.sampler, "grid | langevin");
  app.add_option("--m", opt.m, "Langevin sample count");
  app.add_option("--steps", opt.steps, "Langevin chain length");
  app.add_option("--eta", opt.eta, "Langevin step size (0 = default)");
  app.add_option("--grid-points", opt.grid_points,
                 "grid resolution per free dimension");
  app.add_option("--seeds", opt.seeds, "comma-separated seed list");
  app.add_option("--out", opt.out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help() << std::endl;
    return 2;
  }

  // Config file fills in anything not given on the command line.
  if (!opt.config_path.empty()) {
    std::map<std::string, std::string> kv;
    try {
      kv = read_config(opt.config_path);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << std::endl;
      return 2;
    }
    auto take = [&](const char* key, auto& field) {
      auto it = kv.find(key);
      if (it == kv.end() || app.count(std::string("--") + key) > 0) return;
      std::istringstream is(it->second);
      is >> field;
    };
    take("experiment", opt.experiment);
    take("d", opt.d);
    take("K", opt.K);
    take("B", opt.B);
    take("R", opt.R);
    take("L", opt.L);
    take("n", opt.n);
    take("mu", opt.mu);
    take("delta", opt.delta);
    take("N", opt.N);
    take("gamma", opt.gamma);
    take("sampler", opt.sampler);
    take("m", opt.m);
    take("steps", opt.steps);
    take("eta", opt.eta);
    take("grid-points", opt.grid_points);
    take("seeds", opt.seeds);
    take("out", opt.out);
  }

  if (opt.experiment.empty()) usage_error("--experiment is required", app);
  if (opt.out.empty()) usage_error("--out is required", app);
  const std::set<std::string> kinds{"regret", "bandit", "boosting", "batch",
                                    "lowerbound"};
  if (!kinds.count(opt.experiment))
    usage_error("unknown experiment kind: " + opt.experiment, app);
  if (opt.sampler != "grid" && opt.sampler != "langevin")
    usage_error("unknown sampler: " + opt.sampler, app);
  if (opt.d < 1 || opt.K < 2 || opt.n < 1 || opt.B < 0 || opt.R <= 0 ||
      opt.L <= 0 || opt.N < 1 || opt.delta <= 0 || opt.delta >= 1 ||
      opt.grid_points < 2 || opt.m < 1 || opt.steps < 1)
    usage_error("invalid parameter value", app);
  auto seeds = parse_seeds(opt.seeds);
  if (seeds.empty()) usage_error("--seeds must list at least one seed", app);

  fs::path dir(opt.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    std::cerr << "error: cannot create output directory: " << ec.message()
              << std::endl;
    return 1;
  }

  using Runner = SeedRow (*)(const Options&, std::uint64_t, const fs::path&);
  std::map<std::string, Runner> runners{{"regret", run_regret},
                                        {"bandit", run_bandit},
                                        {"boosting", run_boosting},
                                        {"batch", run_batch},
                                        {"lowerbound", run_lowerbound}};
  Runner runner = runners.at(opt.experiment);

  std::vector<SeedRow> rows(seeds.size());
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex fail_mu;
  parallel_for(static_cast<int>(seeds.size()), [&](int i) {
    try {
      rows[i] = runner(opt, seeds[i], dir);
    } catch (const std::exception& e) {
      std::lock_guard<std::mutex> lock(fail_mu);
      failed = true;
      failure = e.what();
    }
  });
  if (failed) {
    std::cerr << "error: " << failure << std::endl;
    return 1;
  }

  std::vector<std::string> cols;
  for (const auto& kv : rows.front().cols) cols.push_back(kv.first);
  write_summary(dir, cols, rows);

  json meta;
  meta["experiment"] = opt.experiment;
  meta["d"] = opt.d;
  meta["K"] = opt.K;
  meta["B"] = opt.B;
  meta["R"] = opt.R;
  meta["L"] = opt.L;
  meta["n"] = opt.n;
  meta["mu"] = opt.mu;
  meta["delta"] = opt.delta;
  meta["N"] = opt.N;
  meta["gamma"] = opt.gamma;
  meta["sampler"] = opt.sampler;
  meta["m"] = opt.m;
  meta["steps"] = opt.steps;
  meta["eta"] = opt.eta;
  meta["grid_points"] = opt.grid_points;
  meta["seeds"] = seeds;
  std::ofstream(dir / "metadata.json") << meta.dump(2) << "\n";

  std::cout << "wrote " << seeds.size() << " ledger file(s), summary.csv and "
            << "metadata.json to " << dir.string() << std::endl;
  return 0;
}
