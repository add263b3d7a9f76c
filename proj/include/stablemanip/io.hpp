#ifndef STABLEMANIP_IO_HPP_
#define STABLEMANIP_IO_HPP_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "stablemanip/experiments.hpp"
#include "stablemanip/instance.hpp"
#include "stablemanip/ranking.hpp"
#include "stablemanip/rules.hpp"

namespace stablemanip {

inline constexpr const char* kToolVersion = "0.1.0";

// Text instance format:
//
//   rule=borda
//   c=c
//   delta=1          (or one value per voter: delta=1,0,2)
//   l=1
//
//   a b c            (one ballot per line, most preferred first)
//   c a b
//
// The header block is optional (profile-only files for `winners`); every
// key in it is optional too. Lines starting with '#' are ignored.
struct InstanceFile {
  std::optional<std::string> rule;
  std::optional<std::string> c;
  // Broadcast value or one entry per ballot.
  std::optional<std::vector<int>> deltas;
  bool uniform_delta = false;
  std::optional<int> manipulators;

  AlternativeSet alternatives;
  Profile profile;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

// Throws InputError whose message starts with "line N:" for any malformed
// line.
InstanceFile parse_instance_file(std::string_view text);

// Canonical rendering; parse_instance_file(format_instance_file(f)) == f.
std::string format_instance_file(const InstanceFile& file);

// Needs rule, c and delta in the header; l defaults to 1.
Instance to_instance(const InstanceFile& file);

std::string format_ranking(const Ranking& r, const AlternativeSet& labels);

// Results CSV: two '#' lines (tool version, RNG), the header
// `rule,m,n,delta,trials,seed,yes_count,fraction`, then rows sorted by
// (rule, m, n, delta) with fraction to 4 decimals. Rows carrying an error
// become '#' lines instead of data.
void write_results_csv(std::ostream& out, std::vector<ExperimentRow> rows);

}  // namespace stablemanip

#endif  // STABLEMANIP_IO_HPP_
