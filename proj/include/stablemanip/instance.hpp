#ifndef STABLEMANIP_INSTANCE_HPP_
#define STABLEMANIP_INSTANCE_HPP_

#include <vector>

#include "stablemanip/ranking.hpp"
#include "stablemanip/rules.hpp"

namespace stablemanip {

// One stable-manipulation question: can `manipulators` extra ballots keep c
// a co-winner under `rule` whatever each voter i's ballot turns out to be
// within Kendall-Tau distance deltas[i] of the reported one?
class Instance {
 public:
  // Throws InputError when the pieces do not fit together.
  Instance(Profile profile, AltId c, std::vector<int> deltas, int manipulators,
           Rule rule);

  // Same budget for every voter.
  static Instance Uniform(Profile profile, AltId c, int delta,
                          int manipulators, Rule rule);

  const Profile& profile() const { return profile_; }
  AltId c() const { return c_; }
  const std::vector<int>& deltas() const { return deltas_; }
  int delta(int voter) const { return deltas_[voter]; }
  int manipulators() const { return manipulators_; }
  const Rule& rule() const { return rule_; }

  int num_alternatives() const { return profile_.num_alternatives(); }
  int num_voters() const { return profile_.num_voters(); }

  Instance with_deltas(std::vector<int> deltas) const;
  Instance with_rule(Rule rule) const;

 private:
  Profile profile_;
  AltId c_;
  std::vector<int> deltas_;
  int manipulators_;
  Rule rule_;
};

}  // namespace stablemanip

#endif  // STABLEMANIP_INSTANCE_HPP_
