#ifndef STABLEMANIP_ORACLE_HPP_
#define STABLEMANIP_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include "stablemanip/deciders.hpp"
#include "stablemanip/instance.hpp"
#include "stablemanip/ranking.hpp"
#include "stablemanip/rules.hpp"

namespace stablemanip {

struct OracleBudget {
  // Upper bound on (manipulator profiles) x (adversary profiles) examined.
  uint64_t max_nodes = 400'000'000;
  // Anonymous enumeration ranges over m! ballot kinds; beyond this m it is
  // refused outright.
  int anonymous_max_alternatives = 3;
};

// Every ranking within Kendall-Tau distance `radius` of `center`, sorted
// lexicographically.
struct KTBall {
  Ranking center;
  int radius = 0;
  std::vector<Ranking> members;
};

KTBall kt_ball(const Ranking& center, int radius);

// All m! rankings in lexicographic order.
std::vector<Ranking> all_rankings(int m);

// A profile up to voter names: multiplicity of each ranking.
struct AnonymousProfile {
  std::map<Ranking, int> counts;

  int total() const;
};

// Can each voter i be sent to a target ballot within distance deltas[i]
// while using every ranking exactly as often as `target` says? Solved as a
// bipartite flow.
bool feasible_assignment(const Profile& p, const std::vector<int>& deltas,
                         const AnonymousProfile& target);

// Exact decider for any anonymous rule with few alternatives: enumerates
// manipulator and adversary profiles by multiplicity. Throws ResourceError
// past the budget.
Decision decide_anonymous(const Instance& inst,
                          const OracleBudget& budget = {});

// Ground truth by brute force over every manipulator profile (c first for
// monotone rules, unordered when there are several manipulators) and every
// adversary profile in the product of the voters' balls. NO decisions carry
// one refutation per manipulator profile.
Decision decide_exhaustive(const Instance& inst,
                           const OracleBudget& budget = {});

// True iff c co-wins once `manipulators` are added to every profile in the
// balls. Returns the first defeating profile through `defeat` otherwise.
bool withstands_all_perturbations(const Instance& inst,
                                  const std::vector<Ranking>& manipulators,
                                  Profile* defeat = nullptr,
                                  const OracleBudget& budget = {});

}  // namespace stablemanip

#endif  // STABLEMANIP_ORACLE_HPP_
