#ifndef STABLEMANIP_RANKING_HPP_
#define STABLEMANIP_RANKING_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stablemanip {

// Alternatives are dense ids in [0, m). Labels only exist at the I/O edge.
using AltId = int;

// Display labels for the m alternatives of one election. Ids are assigned in
// sorted label order so that id-based tie-breaking is lexicographic.
class AlternativeSet {
 public:
  AlternativeSet() = default;
  explicit AlternativeSet(std::vector<std::string> labels);

  // Labels "a", "b", ... (then "a1", "a2", ... past 26).
  static AlternativeSet Default(int m);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(AltId a) const;
  AltId id(std::string_view label) const;
  bool contains(std::string_view label) const;
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const AlternativeSet&, const AlternativeSet&) = default;

 private:
  std::vector<std::string> labels_;
};

// A strict total order over m alternatives, most preferred first.
// Positions handed out by rank() are 1-indexed.
class Ranking {
 public:
  Ranking() = default;
  explicit Ranking(std::vector<AltId> order);

  static Ranking Identity(int m);

  int size() const { return static_cast<int>(order_.size()); }
  std::span<const AltId> order() const { return order_; }
  // Alternative at 1-indexed position.
  AltId at(int position) const { return order_[position - 1]; }
  // 1-indexed position of a.
  int rank(AltId a) const;
  bool prefers(AltId x, AltId y) const { return pos_[x] < pos_[y]; }

  // Swap the alternatives at positions i and i+1 (1-indexed).
  Ranking swapped(int i) const;

  friend bool operator==(const Ranking& l, const Ranking& r) {
    return l.order_ == r.order_;
  }
  friend std::strong_ordering operator<=>(const Ranking& l, const Ranking& r) {
    return l.order_ <=> r.order_;
  }

 private:
  std::vector<AltId> order_;
  std::vector<int> pos_;  // 0-indexed position of each id
};

int rank(const Ranking& r, AltId a);

// Number of pairs ordered oppositely. Inversion counting by merge sort.
int kendall_tau(const Ranking& r1, const Ranking& r2);

// Move a right (down) by min(k, m - rank) positions.
Ranking shift_right(const Ranking& r, AltId a, int k);
// Move a left (up) by min(k, rank - 1) positions.
Ranking shift_left(const Ranking& r, AltId a, int k);

inline int max_kendall_tau(int m) { return m * (m - 1) / 2; }

class Profile {
 public:
  Profile() = default;
  Profile(int m, std::vector<Ranking> rankings);

  int num_alternatives() const { return m_; }
  int num_voters() const { return static_cast<int>(rankings_.size()); }
  const Ranking& operator[](int i) const { return rankings_[i]; }
  const std::vector<Ranking>& rankings() const { return rankings_; }

  // Profile extended by extra ballots (used to fold manipulators in).
  Profile with(std::span<const Ranking> extra) const;

  // In-place overwrite of one ballot; scratch profiles in enumeration loops.
  void set(int i, const Ranking& r) { rankings_[i] = r; }

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  int m_ = 0;
  std::vector<Ranking> rankings_;
};

// |{i : x >_i y}| - |{i : y >_i x}|.
int margin(const Profile& p, AltId x, AltId y);

// Full m x m pairwise margin matrix, row-major: at(x * m + y) = margin(x, y).
std::vector<int> margin_matrix(const Profile& p);

}  // namespace stablemanip

#endif  // STABLEMANIP_RANKING_HPP_
