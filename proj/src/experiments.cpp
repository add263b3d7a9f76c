#include "stablemanip/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "stablemanip/deciders.hpp"
#include "stablemanip/errors.hpp"
#include "stablemanip/instance.hpp"

namespace stablemanip {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomStream::RandomStream(uint64_t seed) : engine_(splitmix64(seed)) {}

RandomStream RandomStream::ForTrial(uint64_t seed, uint64_t trial) {
  return RandomStream(seed + 0x9e3779b97f4a7c15ULL * (trial + 1));
}

uint64_t RandomStream::below(uint64_t bound) {
  if (bound == 0) throw InputError("RandomStream::below: zero bound");
  // Reject the low residue class so every value mod bound is equally likely.
  const uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const uint64_t x = next();
    if (x >= threshold) return x % bound;
  }
}

Profile random_profile(int m, int n, RandomStream& stream) {
  if (m < 1 || n < 1) throw InputError("random_profile needs m >= 1 and n >= 1");
  std::vector<Ranking> rankings;
  rankings.reserve(n);
  std::vector<AltId> order(m);
  for (int i = 0; i < n; ++i) {
    std::iota(order.begin(), order.end(), 0);
    for (int j = m - 1; j > 0; --j) {
      std::swap(order[j], order[stream.below(static_cast<uint64_t>(j) + 1)]);
    }
    rankings.emplace_back(order);
  }
  return Profile(m, std::move(rankings));
}

bool is_stably_manipulable(const Profile& p, int delta, int manipulators,
                           const Rule& rule,
                           const ManipulabilityOptions& options) {
  std::vector<AltId> current;
  if (options.exclude_winners) current = winners(p, rule);
  const bool polynomial = has_polynomial_decider(rule, manipulators);
  for (AltId c = 0; c < p.num_alternatives(); ++c) {
    if (std::binary_search(current.begin(), current.end(), c)) continue;
    const Instance inst = Instance::Uniform(p, c, delta, manipulators, rule);
    const Decision d =
        polynomial ? decide(inst) : decide_exhaustive(inst, options.budget);
    if (d.yes()) return true;
  }
  return false;
}

std::vector<ExperimentRow> run_grid(const std::vector<ExperimentConfig>& configs,
                                    const GridOptions& options) {
  struct Task {
    size_t config;
    int trial;
  };
  std::vector<Task> tasks;
  std::vector<std::vector<char>> outcome(configs.size());
  for (size_t i = 0; i < configs.size(); ++i) {
    if (configs[i].trials < 1) throw InputError("experiment needs trials >= 1");
    outcome[i].assign(configs[i].trials, 0);
    for (int t = 0; t < configs[i].trials; ++t) tasks.push_back({i, t});
  }
  // First failing trial per config, so the message is schedule-free.
  std::vector<std::optional<std::pair<int, std::string>>> errors(configs.size());
  std::mutex error_mutex;
  std::atomic<size_t> next_task{0};

  auto worker = [&] {
    while (true) {
      const size_t idx = next_task.fetch_add(1);
      if (idx >= tasks.size()) return;
      const Task& task = tasks[idx];
      const ExperimentConfig& cfg = configs[task.config];
      try {
        RandomStream stream = RandomStream::ForTrial(cfg.seed, task.trial);
        const Profile p = random_profile(cfg.m, cfg.n, stream);
        outcome[task.config][task.trial] =
            is_stably_manipulable(p, cfg.delta, cfg.manipulators, cfg.rule,
                                  options.manipulability)
                ? 1
                : 0;
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        auto& slot = errors[task.config];
        if (!slot || task.trial < slot->first) {
          slot.emplace(task.trial,
                       "trial " + std::to_string(task.trial) + ": " + e.what());
        }
        outcome[task.config][task.trial] = -1;
      }
    }
  };

  const int jobs = std::max(1, options.jobs);
  std::vector<std::thread> threads;
  for (int j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();

  std::vector<ExperimentRow> rows;
  for (size_t i = 0; i < configs.size(); ++i) {
    const ExperimentConfig& cfg = configs[i];
    ExperimentRow row;
    row.rule = cfg.rule.name();
    row.m = cfg.m;
    row.n = cfg.n;
    row.delta = cfg.delta;
    row.trials = cfg.trials;
    row.seed = cfg.seed;
    row.yes_count = static_cast<int>(
        std::count(outcome[i].begin(), outcome[i].end(), 1));
    row.fraction = static_cast<double>(row.yes_count) / cfg.trials;
    if (errors[i]) row.error = errors[i]->second;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace stablemanip
