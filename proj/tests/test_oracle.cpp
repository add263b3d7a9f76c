#include <random>

#include "doctest.h"
#include "stablemanip/errors.hpp"
#include "stablemanip/oracle.hpp"
#include "support/oracles.hpp"

namespace sm = stablemanip;
using sm::Rule;
using sm::testing::parse_profile;
using sm::testing::parse_ranking;
using sm::testing::uniform_int;

namespace {

// Permutations of m with at most `radius` inversions, counted over
// inversion tables (e_i in [0, i-1]).
int mahonian_prefix(int m, int radius) {
  std::vector<int> ways(radius + 1, 0);
  ways[0] = 1;
  for (int i = 1; i <= m; ++i) {
    std::vector<int> next(radius + 1, 0);
    for (int s = 0; s <= radius; ++s) {
      for (int e = 0; e < i && s + e <= radius; ++e) next[s + e] += ways[s];
    }
    ways = next;
  }
  int total = 0;
  for (int w : ways) total += w;
  return total;
}

sm::Instance random_instance(std::mt19937_64& rng, const Rule& rule, int m, int n_max,
                             int delta_max, int manipulators) {
  const int n = uniform_int(rng, 1, n_max);
  std::vector<int> deltas(n);
  for (int& d : deltas) d = uniform_int(rng, 0, delta_max);
  return sm::Instance(sm::testing::random_test_profile(m, n, rng), uniform_int(rng, 0, m - 1),
                      deltas, manipulators, rule);
}

void check_certificates(const sm::Instance& inst, const sm::Decision& d) {
  if (d.yes()) {
    CHECK(sm::withstands_all_perturbations(inst, d.witness));
    return;
  }
  CHECK_FALSE(d.refutations.empty());
  for (const auto& ref : d.refutations) {
    REQUIRE(ref.adversary.num_voters() == inst.num_voters());
    for (int i = 0; i < inst.num_voters(); ++i) {
      CHECK(sm::kendall_tau(inst.profile()[i], ref.adversary[i]) <= inst.delta(i));
    }
    CHECK_FALSE(sm::is_cowinner(ref.adversary.with(ref.manipulators), inst.rule(), inst.c()));
  }
}

}  // namespace

TEST_CASE("ball examples") {
  CHECK(sm::kt_ball(parse_ranking("bca"), 0).members == std::vector{parse_ranking("bca")});
  CHECK(sm::kt_ball(parse_ranking("abc"), 1).members.size() == 3);
  CHECK(sm::kt_ball(parse_ranking("abcd"), 2).members.size() == 9);
  CHECK_THROWS_AS(sm::kt_ball(parse_ranking("abc"), -1), sm::InputError);
}

TEST_CASE("balls are exact and their size depends only on m and radius") {
  std::mt19937_64 rng(61);
  for (int m = 1; m <= 5; ++m) {
    for (int radius = 0; radius <= sm::max_kendall_tau(m); ++radius) {
      for (int trial = 0; trial < 4; ++trial) {
        const auto center = sm::testing::random_ranking(m, rng);
        const auto ball = sm::kt_ball(center, radius);
        CHECK(static_cast<int>(ball.members.size()) == mahonian_prefix(m, radius));
        CHECK(ball.members == sm::testing::naive_ball(center, radius));
      }
    }
  }
}

TEST_CASE("all_rankings is lexicographic") {
  const auto all = sm::all_rankings(4);
  CHECK(all.size() == 24);
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(all.front() == sm::Ranking::Identity(4));
}

TEST_CASE("feasible assignment examples") {
  const auto p = parse_profile({"abc", "bac"});
  sm::AnonymousProfile same;
  same.counts[parse_ranking("abc")] = 1;
  same.counts[parse_ranking("bac")] = 1;
  CHECK(sm::feasible_assignment(p, {0, 0}, same));

  sm::AnonymousProfile far;
  far.counts[parse_ranking("cba")] = 2;
  CHECK_FALSE(sm::feasible_assignment(p, {1, 1}, far));

  // Both voters can only reach abc, which the target holds once.
  const auto twins = parse_profile({"abc", "abc"});
  sm::AnonymousProfile hall;
  hall.counts[parse_ranking("abc")] = 1;
  hall.counts[parse_ranking("cba")] = 1;
  CHECK_FALSE(sm::feasible_assignment(twins, {0, 0}, hall));
  CHECK(sm::feasible_assignment(twins, {0, 3}, hall));
}

TEST_CASE("feasible assignment matches brute-force matching") {
  std::mt19937_64 rng(67);
  const auto kinds = sm::all_rankings(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform_int(rng, 1, 4);
    const auto p = sm::testing::random_test_profile(3, n, rng);
    std::vector<int> deltas(n);
    for (int& d : deltas) d = uniform_int(rng, 0, 2);
    sm::AnonymousProfile target;
    std::vector<sm::Ranking> targets;
    for (int i = 0; i < n; ++i) {
      targets.push_back(kinds[uniform_int(rng, 0, 5)]);
      ++target.counts[targets.back()];
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    bool expected = false;
    do {
      bool ok = true;
      for (int i = 0; i < n; ++i) ok &= sm::kendall_tau(p[i], targets[perm[i]]) <= deltas[i];
      expected |= ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(sm::feasible_assignment(p, deltas, target) == expected);
  }
}

TEST_CASE("two alternatives reduce to majority arithmetic") {
  // With m = 2 the adversary flips every voter it may; c survives iff the
  // manipulators plus the fixed supporters are at least half.
  for (int n = 1; n <= 4; ++n) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      for (int fixed_mask = 0; fixed_mask < (1 << n); ++fixed_mask) {
        std::vector<sm::Ranking> ballots;
        std::vector<int> deltas;
        int supporters = 0;
        for (int i = 0; i < n; ++i) {
          const bool for_c = (mask >> i) & 1;
          const bool fixed = (fixed_mask >> i) & 1;
          ballots.push_back(parse_ranking(for_c ? "ab" : "ba"));
          deltas.push_back(fixed ? 0 : 1);
          supporters += for_c && fixed ? 1 : 0;
        }
        const sm::Profile p(2, ballots);
        for (int l = 1; l <= 2; ++l) {
          for (const Rule& rule : {Rule::Plurality(), Rule::Borda(), Rule::Maximin(),
                                   Rule::Copeland()}) {
            const sm::Instance inst(p, 0, deltas, l, rule);
            const bool expected = 2 * (supporters + l) >= n + l;
            CHECK(sm::decide_anonymous(inst).yes() == expected);
            CHECK(sm::decide_exhaustive(inst).yes() == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("without perturbation the oracles reduce to a winner check") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = sm::testing::random_test_profile(3, uniform_int(rng, 1, 4), rng);
    for (const Rule& rule : {Rule::Plurality(), Rule::Borda(), Rule::Copeland(), Rule::Stv()}) {
      for (const auto& winner : sm::winners(p, rule)) {
        const auto inst = sm::Instance::Uniform(p, winner, 0, 1, rule);
        if (rule.is_monotone()) CHECK(sm::decide_exhaustive(inst).yes());
      }
      const sm::AltId c = uniform_int(rng, 0, 2);
      const auto inst = sm::Instance::Uniform(p, c, 0, 1, rule);
      bool any = false;
      for (const auto& w : sm::all_rankings(3)) {
        any |= sm::is_cowinner(p.with(std::vector<sm::Ranking>{w}), rule, c);
      }
      CHECK(sm::decide_exhaustive(inst).yes() == any);
      CHECK(sm::decide_anonymous(inst).yes() == any);
    }
  }
}

TEST_CASE("anonymous and exhaustive oracles agree") {
  std::mt19937_64 rng(73);
  const std::vector<Rule> rules = {Rule::Plurality(), Rule::Borda(),   Rule::Maximin(),
                                   Rule::Copeland(), Rule::Copeland(sm::Rational(1, 2)),
                                   Rule::Bucklin(),  Rule::Stv()};
  for (int trial = 0; trial < 100; ++trial) {
    const Rule& rule = rules[trial % rules.size()];
    const auto inst = random_instance(rng, rule, 3, 3, 1, uniform_int(rng, 1, 2));
    const auto exhaustive = sm::decide_exhaustive(inst);
    const auto anonymous = sm::decide_anonymous(inst);
    CAPTURE(rule.name());
    CHECK(exhaustive.yes() == anonymous.yes());
    check_certificates(inst, exhaustive);
    check_certificates(inst, anonymous);
  }
}

TEST_CASE("budgets are enforced") {
  const auto p = parse_profile({"abcd", "dcba"});
  const auto inst = sm::Instance::Uniform(p, 0, 2, 1, Rule::Copeland());
  CHECK_THROWS_AS(sm::decide_anonymous(inst), sm::ResourceError);
  sm::OracleBudget tiny;
  tiny.max_nodes = 10;
  CHECK_THROWS_AS(sm::decide_exhaustive(inst, tiny), sm::ResourceError);
  CHECK_THROWS_AS(sm::withstands_all_perturbations(inst, {sm::Ranking::Identity(4)}, nullptr,
                                                   tiny),
                  sm::ResourceError);
}

TEST_CASE("STV manipulators are not restricted to c-first ballots") {
  // STV is not monotone, so the oracle must consider every ballot; the
  // witness is whatever it found first, and it must hold up.
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = random_instance(rng, Rule::Stv(), 4, 3, 1, 1);
    check_certificates(inst, sm::decide_exhaustive(inst));
  }
}

TEST_CASE("a reported defeat is inside the balls") {
  const auto inst = sm::Instance::Uniform(parse_profile({"abc", "acb"}), 2, 1, 1,
                                          Rule::Plurality());
  sm::Profile defeat;
  CHECK_FALSE(sm::withstands_all_perturbations(inst, {parse_ranking("cab")}, &defeat));
  CHECK(defeat.num_voters() == 2);
  check_certificates(inst, sm::decide_exhaustive(inst));
}
