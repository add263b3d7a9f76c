#include <algorithm>
#include <random>

#include "doctest.h"
#include "stablemanip/errors.hpp"
#include "stablemanip/rules.hpp"
#include "support/oracles.hpp"

namespace sm = stablemanip;
using sm::Rational;
using sm::Rule;
using sm::testing::parse_profile;

namespace {

std::vector<sm::AltId> ids(std::initializer_list<sm::AltId> list) { return list; }

// Bucklin computed straight from the definition, for cross-checking.
std::vector<sm::AltId> naive_bucklin(const sm::Profile& p, bool simplified) {
  const int m = p.num_alternatives();
  const int n = p.num_voters();
  for (int k = 1; k <= m; ++k) {
    std::vector<int> counts(m);
    for (sm::AltId a = 0; a < m; ++a) counts[a] = sm::top_k_count(p, a, k);
    const bool any_majority =
        std::any_of(counts.begin(), counts.end(), [&](int x) { return 2 * x > n; });
    if (!any_majority) continue;
    std::vector<sm::AltId> out;
    const int best = *std::max_element(counts.begin(), counts.end());
    for (sm::AltId a = 0; a < m; ++a) {
      if (simplified ? 2 * counts[a] > n : counts[a] == best) out.push_back(a);
    }
    return out;
  }
  return {};
}

}  // namespace

TEST_CASE("rationals normalize and compare exactly") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational::Parse("3/6") == Rational(1, 2));
  CHECK(Rational::Parse("1") == Rational(1));
  CHECK(Rational(3, 6).to_string() == "1/2");
  CHECK_THROWS_AS(Rational(1, 0), sm::InputError);
  CHECK_THROWS_AS(Rational::Parse("x/2"), sm::InputError);
}

TEST_CASE("rule names round-trip through Parse") {
  const std::vector<Rule> rules = {
      Rule::Plurality(),       Rule::Veto(),          Rule::Borda(),
      Rule::Approval(2),       Rule::Scoring({3, 1, 0}), Rule::Maximin(),
      Rule::Copeland(),        Rule::Copeland(Rational(1, 2)),
      Rule::Bucklin(),         Rule::SimplifiedBucklin(), Rule::Stv()};
  for (const Rule& rule : rules) {
    CAPTURE(rule.name());
    CHECK(Rule::Parse(rule.name()) == rule);
  }
  CHECK_THROWS_AS(Rule::Parse("dictator"), sm::InputError);
  CHECK_THROWS_AS(Rule::Parse("k-approval:0"), sm::InputError);
  CHECK_THROWS_AS(Rule::Parse("copeland:3/2"), sm::InputError);
  CHECK_THROWS_AS(Rule::Scoring({1, 2, 0}), sm::InputError);
}

TEST_CASE("score vectors") {
  CHECK(Rule::Plurality().score_vector(3) == std::vector<int64_t>{1, 0, 0});
  CHECK(Rule::Veto().score_vector(3) == std::vector<int64_t>{1, 1, 0});
  CHECK(Rule::Borda().score_vector(4) == std::vector<int64_t>{3, 2, 1, 0});
  CHECK(Rule::Approval(2).score_vector(4) == std::vector<int64_t>{1, 1, 0, 0});
  CHECK_THROWS_AS(Rule::Approval(4).score_vector(4), sm::InputError);
  CHECK_THROWS_AS(Rule::Scoring({2, 1, 0}).score_vector(4), sm::InputError);
  CHECK_THROWS_AS(Rule::Maximin().score_vector(3), sm::InputError);
}

TEST_CASE("top_k_count") {
  const auto p = parse_profile({"abc", "bac"});
  CHECK(sm::top_k_count(p, 0, 1) == 1);
  for (sm::AltId a = 0; a < 3; ++a) CHECK(sm::top_k_count(p, a, 3) == 2);
  CHECK_THROWS_AS(sm::top_k_count(p, 0, 0), sm::InputError);
  CHECK_THROWS_AS(sm::top_k_count(p, 0, 4), sm::InputError);
}

TEST_CASE("score tables") {
  const auto p = parse_profile({"abc", "acb"});
  const auto borda = sm::score_table(p, Rule::Borda());
  CHECK(borda[0] == Rational(4));
  CHECK(borda[1] == Rational(1));
  CHECK(borda[2] == Rational(1));

  const auto maximin = sm::score_table(p, Rule::Maximin());
  CHECK(maximin[0] == Rational(2));
  CHECK(maximin[1] == Rational(-2));
  CHECK(maximin[2] == Rational(-2));

  const auto copeland = sm::score_table(parse_profile({"abc"}), Rule::Copeland());
  CHECK(copeland[0] == Rational(2));
  CHECK(copeland[1] == Rational(1));
  CHECK(copeland[2] == Rational(0));

  // A pairwise tie between a and b is worth alpha to each.
  const auto tied = parse_profile({"abc", "bac"});
  const auto half = sm::score_table(tied, Rule::Copeland(Rational(1, 2)));
  CHECK(half[0] == Rational(3, 2));
  CHECK(half[1] == Rational(3, 2));
  CHECK(half[2] == Rational(0));

  CHECK_THROWS_AS(sm::score_table(p, Rule::Stv()), sm::UnsupportedError);
  CHECK_THROWS_AS(sm::score_table(p, Rule::Bucklin()), sm::UnsupportedError);
}

TEST_CASE("winner examples") {
  CHECK(sm::winners(parse_profile({"ab", "ba"}), Rule::Plurality()) == ids({0, 1}));
  CHECK(sm::winners(parse_profile({"abc", "acb", "bac"}), Rule::Bucklin()) == ids({0}));
  CHECK(sm::winners(parse_profile({"abc", "bac", "cba"}), Rule::Stv()) == ids({1}));
  CHECK(sm::is_cowinner(parse_profile({"ab", "ba"}), Rule::Plurality(), 1));
  CHECK_FALSE(sm::is_cowinner(parse_profile({"abc", "bac", "cba"}), Rule::Stv(), 0));
}

TEST_CASE("a single voter's top choice wins every positional rule") {
  const auto p = parse_profile({"cadb"});
  for (const Rule& rule : {Rule::Plurality(), Rule::Borda(), Rule::Approval(1),
                           Rule::Maximin(), Rule::Copeland(), Rule::Bucklin(),
                           Rule::SimplifiedBucklin(), Rule::Stv()}) {
    CAPTURE(rule.name());
    CHECK(sm::winners(p, rule) == ids({2}));
  }
  CHECK(sm::winners(p, Rule::Veto()) == ids({0, 2, 3}));
}

TEST_CASE("winner sets are non-empty and consistent with score tables") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = sm::testing::uniform_int(rng, 1, 6);
    const int n = sm::testing::uniform_int(rng, 1, 6);
    const auto p = sm::testing::random_test_profile(m, n, rng);
    std::vector<Rule> rules = {Rule::Plurality(), Rule::Borda(), Rule::Maximin(),
                               Rule::Copeland(), Rule::Copeland(Rational(1, 2))};
    if (m >= 2) rules.push_back(Rule::Veto());
    for (const Rule& rule : rules) {
      const auto table = sm::score_table(p, rule);
      const Rational best = *std::max_element(table.scores.begin(), table.scores.end());
      std::vector<sm::AltId> expected;
      for (sm::AltId a = 0; a < m; ++a) {
        if (table[a] == best) expected.push_back(a);
      }
      CHECK(sm::winners(p, rule) == expected);
    }
    CHECK(sm::winners(p, Rule::Bucklin()) == naive_bucklin(p, false));
    CHECK(sm::winners(p, Rule::SimplifiedBucklin()) == naive_bucklin(p, true));
    const auto stv = sm::winners(p, Rule::Stv());
    CHECK(stv.size() == 1);
  }
}

TEST_CASE("STV breaks elimination ties by smallest id") {
  // All first-place counts tie at 1; a goes first, then its vote moves to c.
  const auto p = parse_profile({"acb", "bac", "cba"});
  CHECK(sm::winners(p, Rule::Stv()) == ids({2}));
}
