#include "stablemanip/instance.hpp"

#include <string>

#include "stablemanip/errors.hpp"

namespace stablemanip {

Instance::Instance(Profile profile, AltId c, std::vector<int> deltas,
                   int manipulators, Rule rule)
    : profile_(std::move(profile)),
      c_(c),
      deltas_(std::move(deltas)),
      manipulators_(manipulators),
      rule_(std::move(rule)) {
  const int m = profile_.num_alternatives();
  if (c_ < 0 || c_ >= m) {
    throw InputError("distinguished alternative id " + std::to_string(c_) +
                     " out of range");
  }
  if (static_cast<int>(deltas_.size()) != profile_.num_voters()) {
    throw InputError("got " + std::to_string(deltas_.size()) +
                     " perturbation budgets for " +
                     std::to_string(profile_.num_voters()) + " voters");
  }
  for (int d : deltas_) {
    if (d < 0 || d > max_kendall_tau(m)) {
      throw InputError("perturbation budget " + std::to_string(d) +
                       " outside [0, " + std::to_string(max_kendall_tau(m)) +
                       "]");
    }
  }
  if (manipulators_ < 1) throw InputError("need at least one manipulator");
}

Instance Instance::Uniform(Profile profile, AltId c, int delta,
                           int manipulators, Rule rule) {
  std::vector<int> deltas(profile.num_voters(), delta);
  return Instance(std::move(profile), c, std::move(deltas), manipulators,
                  std::move(rule));
}

Instance Instance::with_deltas(std::vector<int> deltas) const {
  return Instance(profile_, c_, std::move(deltas), manipulators_, rule_);
}

Instance Instance::with_rule(Rule rule) const {
  return Instance(profile_, c_, deltas_, manipulators_, std::move(rule));
}

}  // namespace stablemanip
