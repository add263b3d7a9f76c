#ifndef STABLEMANIP_EXPERIMENTS_HPP_
#define STABLEMANIP_EXPERIMENTS_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stablemanip/oracle.hpp"
#include "stablemanip/ranking.hpp"
#include "stablemanip/rules.hpp"

namespace stablemanip {

// Seedable stream with a platform-independent output sequence: std::mt19937_64
// (fully specified by the standard) seeded through SplitMix64, with bounded
// draws by rejection sampling rather than std::uniform_int_distribution.
class RandomStream {
 public:
  explicit RandomStream(uint64_t seed);

  // Independent stream for one trial of a run.
  static RandomStream ForTrial(uint64_t seed, uint64_t trial);

  uint64_t next() { return engine_(); }
  // Uniform in [0, bound).
  uint64_t below(uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

inline constexpr const char* kRngDescription =
    "mt19937_64 seeded with splitmix64(seed + 0x9e3779b97f4a7c15*(trial+1)); "
    "Fisher-Yates shuffle with rejection-sampled bounds";

// n independent uniformly random rankings (Fisher-Yates).
Profile random_profile(int m, int n, RandomStream& stream);

struct ManipulabilityOptions {
  // Only consider c outside the current co-winners.
  bool exclude_winners = false;
  OracleBudget budget;
};

// Is there some c that one (or `manipulators`) extra ballots keep a co-winner
// against every perturbation of each voter within `delta` swaps? Uses the
// polynomial decider when the rule has one, the exhaustive oracle otherwise.
bool is_stably_manipulable(const Profile& p, int delta, int manipulators,
                           const Rule& rule,
                           const ManipulabilityOptions& options = {});

struct ExperimentConfig {
  Rule rule = Rule::Plurality();
  int m = 0;
  int n = 0;
  int delta = 0;
  int manipulators = 1;
  int trials = 100;
  uint64_t seed = 1;
};

struct ExperimentRow {
  std::string rule;
  int m = 0;
  int n = 0;
  int delta = 0;
  int trials = 0;
  uint64_t seed = 0;
  int yes_count = 0;
  double fraction = 0;
  // Set when some trial failed (e.g. an oracle budget); the row is then
  // incomplete.
  std::optional<std::string> error;
};

struct GridOptions {
  int jobs = 1;
  ManipulabilityOptions manipulability;
};

// One row per config, in input order. Trial t of every config draws its
// profile from RandomStream::ForTrial(seed, t), so configs that differ only
// in rule or delta see the same profiles and results do not depend on jobs.
std::vector<ExperimentRow> run_grid(const std::vector<ExperimentConfig>& configs,
                                    const GridOptions& options = {});

}  // namespace stablemanip

#endif  // STABLEMANIP_EXPERIMENTS_HPP_
