// Test-only reference implementations. Deliberately naive and independent
// of the library's closed forms.
#ifndef STABLEMANIP_TESTS_SUPPORT_ORACLES_HPP_
#define STABLEMANIP_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include "stablemanip/instance.hpp"
#include "stablemanip/ranking.hpp"

namespace stablemanip::testing {

// Discordant pairs counted one by one.
inline int pair_count_distance(const Ranking& x, const Ranking& y) {
  int d = 0;
  for (AltId a = 0; a < x.size(); ++a) {
    for (AltId b = a + 1; b < x.size(); ++b) {
      d += x.prefers(a, b) != y.prefers(a, b) ? 1 : 0;
    }
  }
  return d;
}

inline std::vector<Ranking> every_ranking(int m) {
  std::vector<AltId> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Ranking> out;
  do {
    out.emplace_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

// Shortest path in the adjacent-transposition graph from r to any ranking
// satisfying `goal`; -1 when unreachable.
inline int bfs_distance(const Ranking& r,
                        const std::function<bool(const Ranking&)>& goal) {
  std::map<std::vector<AltId>, int> dist;
  std::queue<Ranking> queue;
  dist[{r.order().begin(), r.order().end()}] = 0;
  queue.push(r);
  while (!queue.empty()) {
    Ranking cur = queue.front();
    queue.pop();
    const int d = dist[{cur.order().begin(), cur.order().end()}];
    if (goal(cur)) return d;
    for (int i = 1; i < cur.size(); ++i) {
      Ranking next = cur.swapped(i);
      std::vector<AltId> key(next.order().begin(), next.order().end());
      if (dist.emplace(key, d + 1).second) queue.push(next);
    }
  }
  return -1;
}

// Ball by filtering all m! rankings with the pair-count distance.
inline std::vector<Ranking> naive_ball(const Ranking& center, int radius) {
  std::vector<Ranking> out;
  for (Ranking& r : every_ranking(center.size())) {
    if (pair_count_distance(center, r) <= radius) out.push_back(std::move(r));
  }
  return out;
}

inline Ranking random_ranking(int m, std::mt19937_64& rng) {
  std::vector<AltId> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return Ranking(std::move(order));
}

inline Profile random_test_profile(int m, int n, std::mt19937_64& rng) {
  std::vector<Ranking> rs;
  for (int i = 0; i < n; ++i) rs.push_back(random_ranking(m, rng));
  return Profile(m, std::move(rs));
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Ranking parse_ranking(const std::string& letters) {
  std::vector<AltId> order;
  for (char ch : letters) order.push_back(ch - 'a');
  return Ranking(std::move(order));
}

inline Profile parse_profile(std::initializer_list<const char*> ballots) {
  std::vector<Ranking> rs;
  for (const char* b : ballots) rs.push_back(parse_ranking(b));
  const int m = rs.front().size();
  return Profile(m, std::move(rs));
}

}  // namespace stablemanip::testing

#endif  // STABLEMANIP_TESTS_SUPPORT_ORACLES_HPP_
