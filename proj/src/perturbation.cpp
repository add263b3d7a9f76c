#include "stablemanip/perturbation.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

#include "stablemanip/errors.hpp"

namespace stablemanip {

namespace {

void check_boundary(const Ranking& r, int k, const char* op) {
  if (k < 0 || k > r.size()) {
    throw InputError(std::string(op) + ": k=" + std::to_string(k) +
                     " outside [0, m]");
  }
}

}  // namespace

int cost_push_out_topk(const Ranking& r, AltId x, int k) {
  check_boundary(r, k, "cost_push_out_topk");
  if (k == r.size()) return kInfeasible;
  return std::max(0, k - r.rank(x) + 1);
}

int cost_pull_into_topk(const Ranking& r, AltId x, int k) {
  check_boundary(r, k, "cost_pull_into_topk");
  if (k == 0) return kInfeasible;
  return std::max(0, r.rank(x) - k);
}

int cost_push_and_pull(const Ranking& r, AltId c, AltId a, int k) {
  if (a == c) throw InputError("cost_push_and_pull: a and c must differ");
  check_boundary(r, k, "cost_push_and_pull");
  if (k == 0 || k == r.size()) return kInfeasible;
  const int rc = r.rank(c);
  const int ra = r.rank(a);
  const bool c_in = rc <= k;
  const bool a_in = ra <= k;
  if (!c_in && a_in) return 0;
  if (!c_in) return ra - k;
  if (a_in) return k - rc + 1;
  // c inside, a outside: a has to cross c, and that one swap serves both.
  return ra - rc;
}

int cost_place_after(const Ranking& r, AltId c, AltId b) {
  if (b == c) throw InputError("cost_place_after: b and c must differ");
  const int rc = r.rank(c);
  const int rb = r.rank(b);
  return rb < rc ? 0 : rb - rc;
}

int cost_to_position_ranges(const Ranking& r, AltId c, int c_lo, int c_hi,
                            AltId a, int a_lo, int a_hi) {
  if (a == c) throw InputError("cost_to_position_ranges: a and c must differ");
  const int m = r.size();
  c_lo = std::max(c_lo, 1);
  a_lo = std::max(a_lo, 1);
  c_hi = std::min(c_hi, m);
  a_hi = std::min(a_hi, m);
  const int pc = r.rank(c);
  const int pa = r.rank(a);
  // With every other alternative kept in its relative order, a target is
  // fixed by how many others precede c and a and by the order of c and a.
  const int others_before_c = pc - 1 - (pa < pc ? 1 : 0);
  const int others_before_a = pa - 1 - (pc < pa ? 1 : 0);
  int best = kInfeasible;
  for (int p = c_lo; p <= c_hi; ++p) {
    for (int q = a_lo; q <= a_hi; ++q) {
      if (p == q) continue;
      const int before_c = p - 1 - (q < p ? 1 : 0);
      const int before_a = q - 1 - (p < q ? 1 : 0);
      const int flip = (pc < pa) != (p < q) ? 1 : 0;
      best = std::min(best, std::abs(before_c - others_before_c) +
                                std::abs(before_a - others_before_a) + flip);
    }
  }
  return best;
}

WorstDelta worst_delta_scoring(const Ranking& r, AltId c, AltId a, int delta,
                               std::span<const int64_t> scores) {
  if (a == c) throw InputError("worst_delta_scoring: a and c must differ");
  if (delta < 0) throw InputError("worst_delta_scoring: negative budget");
  if (static_cast<int>(scores.size()) != r.size()) {
    throw InputError("worst_delta_scoring: scoring vector length mismatch");
  }
  const int64_t c_before = scores[r.rank(c) - 1];
  const int64_t a_before = scores[r.rank(a) - 1];
  // Pushing c past the last position changes nothing, so larger j only
  // shrinks the budget left for a.
  const int j_max = std::min(delta, r.size() - r.rank(c));
  WorstDelta best;
  best.delta = -1;
  for (int j = 0; j <= j_max; ++j) {
    Ranking moved = shift_left(shift_right(r, c, j), a, delta - j);
    const int64_t gain = (c_before - scores[moved.rank(c) - 1]) +
                         (scores[moved.rank(a) - 1] - a_before);
    if (gain > best.delta) {
      best.delta = gain;
      best.shift = j;
      best.witness = std::move(moved);
    }
  }
  return best;
}

const char* to_string(KApprovalType type) {
  switch (type) {
    case KApprovalType::kBoth: return "both";
    case KApprovalType::kCOutOnly: return "c-out-only";
    case KApprovalType::kAInOnly: return "a-in-only";
    case KApprovalType::kEither: return "either";
    case KApprovalType::kNeither: return "neither";
  }
  return "?";
}

KApprovalType classify_kapproval(const Ranking& r, int delta, AltId c, AltId a,
                                 int k) {
  if (k < 1 || k >= r.size()) {
    throw InputError("classify_kapproval: k=" + std::to_string(k) +
                     " outside [1, m-1]");
  }
  if (cost_push_and_pull(r, c, a, k) <= delta) return KApprovalType::kBoth;
  const bool c_out = cost_push_out_topk(r, c, k) <= delta;
  const bool a_in = cost_pull_into_topk(r, a, k) <= delta;
  if (c_out && a_in) return KApprovalType::kEither;
  if (c_out) return KApprovalType::kCOutOnly;
  if (a_in) return KApprovalType::kAInOnly;
  return KApprovalType::kNeither;
}

BucklinType BucklinType::Of(const Ranking& r, AltId c, AltId a, int k) {
  const int rc = r.rank(c);
  const int ra = r.rank(a);
  uint8_t bits = 0;
  if (rc > k) bits |= kX1;
  if (rc > k - 1) bits |= kX2;
  if (ra <= k - 1) bits |= kX3;
  if (ra <= k) bits |= kX4;
  return BucklinType(bits);
}

bool BucklinType::consistent() const {
  if (has(kX1) && !has(kX2)) return false;
  if (has(kX3) && !has(kX4)) return false;
  const bool c_at_k = has(kX2) && !has(kX1);
  const bool a_at_k = has(kX4) && !has(kX3);
  return !(c_at_k && a_at_k);
}

int BucklinMetaType::size() const { return std::popcount(mask_); }

std::vector<BucklinType> BucklinMetaType::types() const {
  std::vector<BucklinType> out;
  for (uint8_t bits = 0; bits < 16; ++bits) {
    if ((mask_ >> bits) & 1u) out.emplace_back(bits);
  }
  return out;
}

BucklinMetaType bucklin_metatype(const Ranking& r, int delta, AltId c, AltId a,
                                 int k) {
  const int m = r.size();
  if (a == c) throw InputError("bucklin_metatype: a and c must differ");
  if (k < 1 || k > m) {
    throw InputError("bucklin_metatype: k=" + std::to_string(k) +
                     " outside [1, m]");
  }
  BucklinMetaType meta;
  for (uint8_t bits = 0; bits < 16; ++bits) {
    const BucklinType t(bits);
    if (!t.consistent()) continue;
    int c_lo = 1, c_hi = k - 1;
    if (t.has(BucklinType::kX1)) {
      c_lo = k + 1;
      c_hi = m;
    } else if (t.has(BucklinType::kX2)) {
      c_lo = c_hi = k;
    }
    int a_lo = k + 1, a_hi = m;
    if (t.has(BucklinType::kX3)) {
      a_lo = 1;
      a_hi = k - 1;
    } else if (t.has(BucklinType::kX4)) {
      a_lo = a_hi = k;
    }
    if (c_lo > c_hi || a_lo > a_hi) continue;
    if (cost_to_position_ranges(r, c, c_lo, c_hi, a, a_lo, a_hi) <= delta) {
      meta.insert(t);
    }
  }
  return meta;
}

}  // namespace stablemanip
