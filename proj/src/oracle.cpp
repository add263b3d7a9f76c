#include "stablemanip/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "stablemanip/errors.hpp"
#include "stablemanip/max_flow.hpp"

namespace stablemanip {

namespace {

uint64_t saturating_mul(uint64_t x, uint64_t y) {
  if (x != 0 && y > UINT64_MAX / x) return UINT64_MAX;
  return x * y;
}

// C(n, k) saturating at UINT64_MAX.
uint64_t binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double acc = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (acc >= static_cast<long double>(UINT64_MAX)) return UINT64_MAX;
  }
  return static_cast<uint64_t>(acc + 0.5L);
}

// Number of multisets of size `size` over `kinds` kinds.
uint64_t multiset_count(uint64_t kinds, uint64_t size) {
  if (kinds == 0) return size == 0 ? 1 : 0;
  return binomial(size + kinds - 1, kinds - 1);
}

// Calls fn(counts) for every way to write `total` as an ordered sum of
// counts.size() non-negative parts, lexicographically descending in the
// first part.
void for_each_composition(int total, int parts,
                          const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> counts(parts, 0);
  std::function<bool(int, int)> rec = [&](int idx, int left) -> bool {
    if (idx == parts - 1) {
      counts[idx] = left;
      return fn(counts);
    }
    for (int v = left; v >= 0; --v) {
      counts[idx] = v;
      if (!rec(idx + 1, left - v)) return false;
    }
    counts[idx] = 0;
    return true;
  };
  if (parts > 0) rec(0, total);
}

// Manipulator ballots the brute-force searches range over.
std::vector<Ranking> manipulator_candidates(const Instance& inst) {
  std::vector<Ranking> all = all_rankings(inst.num_alternatives());
  if (!inst.rule().is_monotone()) return all;
  std::vector<Ranking> c_first;
  for (Ranking& r : all) {
    if (r.at(1) == inst.c()) c_first.push_back(std::move(r));
  }
  return c_first;
}

// Voter -> target assignment, or empty when none exists.
std::vector<int> match_voters(const std::vector<std::vector<char>>& reachable,
                              const std::vector<int>& counts) {
  const int n = static_cast<int>(reachable.size());
  const int kinds = static_cast<int>(counts.size());
  FlowNetwork net(2 + n + kinds);
  const int s = 0, t = 1;
  std::vector<std::vector<int>> arc(n, std::vector<int>(kinds, -1));
  for (int i = 0; i < n; ++i) {
    net.add_arc(s, 2 + i, 1);
    for (int r = 0; r < kinds; ++r) {
      if (reachable[i][r] && counts[r] > 0) arc[i][r] = net.add_arc(2 + i, 2 + n + r, 1);
    }
  }
  for (int r = 0; r < kinds; ++r) {
    if (counts[r] > 0) net.add_arc(2 + n + r, t, counts[r]);
  }
  const MaxFlowResult flow = max_flow(net, s, t);
  if (flow.value != n) return {};
  std::vector<int> assignment(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < kinds; ++r) {
      if (arc[i][r] >= 0 && flow.arc_flow[arc[i][r]] > 0) assignment[i] = r;
    }
  }
  return assignment;
}

// Odometer search over the product of balls. Scratch holds the manipulator
// ballots at indices >= n. Returns true and leaves the defeating choice in
// `choice` when some profile keeps c out of the winners.
class AdversarySearch {
 public:
  AdversarySearch(const Instance& inst, std::vector<std::vector<Ranking>> balls,
                  int manipulators)
      : inst_(inst), balls_(std::move(balls)) {
    std::vector<Ranking> ballots;
    for (const auto& ball : balls_) ballots.push_back(ball.front());
    for (int j = 0; j < manipulators; ++j) {
      ballots.push_back(Ranking::Identity(inst.num_alternatives()));
    }
    scratch_ = Profile(inst.num_alternatives(), std::move(ballots));
  }

  uint64_t adversary_count() const {
    uint64_t total = 1;
    for (const auto& ball : balls_) total = saturating_mul(total, ball.size());
    return total;
  }

  void set_manipulators(const std::vector<Ranking>& w) {
    const int n = static_cast<int>(balls_.size());
    for (int j = 0; j < static_cast<int>(w.size()); ++j) scratch_.set(n + j, w[j]);
  }

  bool defeats(const std::vector<int>& choice) {
    for (int i = 0; i < static_cast<int>(choice.size()); ++i) {
      scratch_.set(i, balls_[i][choice[i]]);
    }
    return !is_cowinner(scratch_, inst_.rule(), inst_.c());
  }

  bool find_defeat(std::vector<int>& choice) {
    const int n = static_cast<int>(balls_.size());
    // Replay earlier refutations first; they tend to defeat later
    // manipulator profiles too.
    for (const auto& killer : killers_) {
      if (defeats(killer)) {
        choice = killer;
        return true;
      }
    }
    choice.assign(n, 0);
    while (true) {
      if (defeats(choice)) {
        killers_.push_back(choice);
        return true;
      }
      int i = n - 1;
      while (i >= 0 && ++choice[i] == static_cast<int>(balls_[i].size())) {
        choice[i] = 0;
        --i;
      }
      if (i < 0) return false;
    }
  }

  Profile adversary(const std::vector<int>& choice) const {
    std::vector<Ranking> out;
    for (int i = 0; i < static_cast<int>(choice.size()); ++i) {
      out.push_back(balls_[i][choice[i]]);
    }
    return Profile(inst_.num_alternatives(), std::move(out));
  }

 private:
  const Instance& inst_;
  std::vector<std::vector<Ranking>> balls_;
  Profile scratch_;
  std::deque<std::vector<int>> killers_;
};

std::vector<std::vector<Ranking>> voter_balls(const Instance& inst) {
  std::vector<std::vector<Ranking>> balls;
  for (int i = 0; i < inst.num_voters(); ++i) {
    balls.push_back(kt_ball(inst.profile()[i], inst.delta(i)).members);
  }
  return balls;
}

}  // namespace

KTBall kt_ball(const Ranking& center, int radius) {
  if (radius < 0) throw InputError("kt_ball: negative radius");
  std::set<Ranking> seen = {center};
  std::vector<Ranking> frontier = {center};
  for (int d = 0; d < radius && !frontier.empty(); ++d) {
    std::vector<Ranking> next;
    for (const Ranking& r : frontier) {
      for (int i = 1; i < r.size(); ++i) {
        Ranking s = r.swapped(i);
        if (seen.insert(s).second) next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }
  return KTBall{center, radius, std::vector<Ranking>(seen.begin(), seen.end())};
}

std::vector<Ranking> all_rankings(int m) {
  std::vector<AltId> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Ranking> out;
  do {
    out.emplace_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

int AnonymousProfile::total() const {
  int sum = 0;
  for (const auto& [r, count] : counts) sum += count;
  return sum;
}

bool feasible_assignment(const Profile& p, const std::vector<int>& deltas,
                         const AnonymousProfile& target) {
  if (static_cast<int>(deltas.size()) != p.num_voters()) {
    throw InputError("feasible_assignment: one budget per voter required");
  }
  if (target.total() != p.num_voters()) return false;
  std::vector<int> counts;
  std::vector<const Ranking*> kinds;
  for (const auto& [r, count] : target.counts) {
    if (r.size() != p.num_alternatives()) {
      throw InputError("feasible_assignment: target ranking size mismatch");
    }
    kinds.push_back(&r);
    counts.push_back(count);
  }
  std::vector<std::vector<char>> reachable(p.num_voters());
  for (int i = 0; i < p.num_voters(); ++i) {
    for (const Ranking* r : kinds) {
      reachable[i].push_back(kendall_tau(p[i], *r) <= deltas[i] ? 1 : 0);
    }
  }
  return !match_voters(reachable, counts).empty();
}

Decision decide_anonymous(const Instance& inst, const OracleBudget& budget) {
  const int m = inst.num_alternatives();
  const int n = inst.num_voters();
  const int l = inst.manipulators();
  if (m > budget.anonymous_max_alternatives) {
    throw ResourceError("anonymous enumeration is limited to m <= " +
                        std::to_string(budget.anonymous_max_alternatives) +
                        " alternatives (got m=" + std::to_string(m) + ")");
  }
  const std::vector<Ranking> kinds = all_rankings(m);
  const std::vector<Ranking> candidates = manipulator_candidates(inst);
  const uint64_t adversaries = multiset_count(kinds.size(), n);
  const uint64_t manipulations = multiset_count(candidates.size(), l);
  const uint64_t nodes = saturating_mul(adversaries, manipulations + 1);
  if (nodes > budget.max_nodes) {
    throw ResourceError("anonymous enumeration needs " + std::to_string(nodes) +
                        " profile checks, over the budget of " +
                        std::to_string(budget.max_nodes));
  }

  std::vector<std::vector<char>> reachable(n);
  for (int i = 0; i < n; ++i) {
    for (const Ranking& r : kinds) {
      reachable[i].push_back(kendall_tau(inst.profile()[i], r) <= inst.delta(i));
    }
  }
  // Every adversary anonymous profile the voters can jointly reach, kept as
  // a concrete voter-by-voter realization.
  std::vector<std::vector<Ranking>> feasible;
  for_each_composition(n, static_cast<int>(kinds.size()),
                       [&](const std::vector<int>& counts) {
                         const std::vector<int> assignment =
                             match_voters(reachable, counts);
                         if (!assignment.empty()) {
                           std::vector<Ranking> ballots;
                           for (int r : assignment) ballots.push_back(kinds[r]);
                           feasible.push_back(std::move(ballots));
                         }
                         return true;
                       });

  Decision decision;
  for_each_composition(
      l, static_cast<int>(candidates.size()), [&](const std::vector<int>& counts) {
        std::vector<Ranking> w;
        for (size_t r = 0; r < counts.size(); ++r) {
          for (int j = 0; j < counts[r]; ++j) w.push_back(candidates[r]);
        }
        for (const auto& ballots : feasible) {
          const Profile adversary(m, ballots);
          if (!is_cowinner(adversary.with(w), inst.rule(), inst.c())) {
            decision.refutations.push_back(Refutation{w, adversary});
            return true;
          }
        }
        decision.verdict = Verdict::kYes;
        decision.witness = std::move(w);
        decision.refutations.clear();
        return false;
      });
  return decision;
}

Decision decide_exhaustive(const Instance& inst, const OracleBudget& budget) {
  const int l = inst.manipulators();
  const std::vector<Ranking> candidates = manipulator_candidates(inst);
  AdversarySearch search(inst, voter_balls(inst), l);
  const uint64_t manipulations = multiset_count(candidates.size(), l);
  const uint64_t nodes = saturating_mul(manipulations, search.adversary_count());
  if (nodes > budget.max_nodes) {
    throw ResourceError("exhaustive search needs up to " + std::to_string(nodes) +
                        " profile checks, over the budget of " +
                        std::to_string(budget.max_nodes));
  }

  Decision decision;
  // Non-decreasing index sequences enumerate manipulator multisets in
  // lexicographic order.
  std::vector<int> pick(l, 0);
  std::vector<int> choice;
  const int kinds = static_cast<int>(candidates.size());
  while (true) {
    std::vector<Ranking> w;
    for (int idx : pick) w.push_back(candidates[idx]);
    search.set_manipulators(w);
    if (!search.find_defeat(choice)) {
      decision.verdict = Verdict::kYes;
      decision.witness = std::move(w);
      decision.refutations.clear();
      return decision;
    }
    decision.refutations.push_back(Refutation{std::move(w), search.adversary(choice)});
    int j = l - 1;
    while (j >= 0 && pick[j] == kinds - 1) --j;
    if (j < 0) break;
    ++pick[j];
    for (int q = j + 1; q < l; ++q) pick[q] = pick[j];
  }
  decision.verdict = Verdict::kNo;
  return decision;
}

bool withstands_all_perturbations(const Instance& inst,
                                  const std::vector<Ranking>& manipulators,
                                  Profile* defeat, const OracleBudget& budget) {
  AdversarySearch search(inst, voter_balls(inst),
                         static_cast<int>(manipulators.size()));
  if (search.adversary_count() > budget.max_nodes) {
    throw ResourceError("adversary space of " +
                        std::to_string(search.adversary_count()) +
                        " profiles is over the budget of " +
                        std::to_string(budget.max_nodes));
  }
  search.set_manipulators(manipulators);
  std::vector<int> choice;
  if (!search.find_defeat(choice)) return true;
  if (defeat != nullptr) *defeat = search.adversary(choice);
  return false;
}

}  // namespace stablemanip
