#ifndef STABLEMANIP_PERTURBATION_HPP_
#define STABLEMANIP_PERTURBATION_HPP_

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "stablemanip/ranking.hpp"

namespace stablemanip {

// Cost returned when no number of swaps reaches the target.
inline constexpr int kInfeasible = std::numeric_limits<int>::max();

// Minimum adjacent swaps so that rank(x) > k. k = 0 costs nothing; k = m is
// kInfeasible.
int cost_push_out_topk(const Ranking& r, AltId x, int k);

// Minimum adjacent swaps so that rank(x) <= k. k = 0 is kInfeasible.
int cost_pull_into_topk(const Ranking& r, AltId x, int k);

// Minimum adjacent swaps achieving rank(c) > k and rank(a) <= k together.
int cost_push_and_pull(const Ranking& r, AltId c, AltId a, int k);

// Minimum adjacent swaps so that b is preferred to c.
int cost_place_after(const Ranking& r, AltId c, AltId b);

// Minimum adjacent swaps so that rank(c) lands in [c_lo, c_hi] and rank(a) in
// [a_lo, a_hi] (1-indexed, inclusive). kInfeasible for empty or clashing
// ranges.
int cost_to_position_ranges(const Ranking& r, AltId c, int c_lo, int c_hi,
                            AltId a, int a_lo, int a_hi);

// Worst single-ballot loss of c against a under a scoring vector: push c
// right by j, then pull a left by delta - j, for the best j.
struct WorstDelta {
  int64_t delta = 0;
  int shift = 0;  // the maximizing j, smallest on ties
  Ranking witness;
};

WorstDelta worst_delta_scoring(const Ranking& r, AltId c, AltId a, int delta,
                               std::span<const int64_t> scores);

// How a ballot can hurt c relative to a at the k-approval boundary.
enum class KApprovalType {
  kBoth,      // c out and a in, simultaneously
  kCOutOnly,  // only c can be pushed out
  kAInOnly,   // only a can be pulled in
  kEither,    // either move alone, not both together
  kNeither,
};

const char* to_string(KApprovalType type);

KApprovalType classify_kapproval(const Ranking& r, int delta, AltId c, AltId a,
                                 int k);

// Four predicates of a ballot relative to (c, a, k):
//   x1: c not in top k      x2: c not in top k-1
//   x3: a in top k-1        x4: a in top k
class BucklinType {
 public:
  static constexpr uint8_t kX1 = 1, kX2 = 2, kX3 = 4, kX4 = 8;

  constexpr BucklinType() = default;
  constexpr explicit BucklinType(uint8_t bits) : bits_(bits & 0xF) {}

  static BucklinType Of(const Ranking& r, AltId c, AltId a, int k);

  uint8_t bits() const { return bits_; }
  bool has(uint8_t flag) const { return (bits_ & flag) != 0; }

  bool c_in_top_k() const { return !has(kX1); }
  bool c_in_top_k_minus_1() const { return !has(kX2); }
  bool a_in_top_k() const { return has(kX4); }

  // Respects the prefix containments x1 => x2 and x3 => x4, and does not put
  // c and a both at position k.
  bool consistent() const;

  friend bool operator==(BucklinType, BucklinType) = default;

 private:
  uint8_t bits_ = 0;
};

// Set of BucklinTypes reachable from a ballot within delta swaps.
class BucklinMetaType {
 public:
  void insert(BucklinType t) { mask_ |= static_cast<uint16_t>(1u << t.bits()); }
  bool contains(BucklinType t) const { return (mask_ >> t.bits()) & 1u; }
  int size() const;
  std::vector<BucklinType> types() const;
  uint16_t mask() const { return mask_; }

  friend bool operator==(BucklinMetaType, BucklinMetaType) = default;

 private:
  uint16_t mask_ = 0;
};

BucklinMetaType bucklin_metatype(const Ranking& r, int delta, AltId c, AltId a,
                                 int k);

}  // namespace stablemanip

#endif  // STABLEMANIP_PERTURBATION_HPP_
