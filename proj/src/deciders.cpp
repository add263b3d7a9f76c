#include "stablemanip/deciders.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "stablemanip/errors.hpp"
#include "stablemanip/perturbation.hpp"

namespace stablemanip {

namespace {

void require_single_manipulator(const Instance& inst, const char* rule) {
  if (inst.manipulators() != 1) {
    throw UnsupportedError(std::string(rule) +
                           " decider handles exactly one manipulator, got " +
                           std::to_string(inst.manipulators()));
  }
}

// Places c first, then for t = 2..m the smallest-id remaining alternative
// that is safe at t. NO as soon as some position has no safe alternative.
template <typename UnsafeFn>
Decision greedy_decide(const Instance& inst, UnsafeFn&& unsafe) {
  const int m = inst.num_alternatives();
  std::vector<AltId> order = {inst.c()};
  std::vector<AltId> remaining;
  for (AltId a = 0; a < m; ++a) {
    if (a != inst.c()) remaining.push_back(a);
  }
  for (int t = 2; t <= m; ++t) {
    auto it = std::find_if(remaining.begin(), remaining.end(), [&](AltId a) {
      return !unsafe(a, t, std::span<const AltId>(order));
    });
    if (it == remaining.end()) return Decision{Verdict::kNo, {}, {}};
    order.push_back(*it);
    remaining.erase(it);
  }
  return Decision{Verdict::kYes, {Ranking(std::move(order))}, {}};
}

// Strict majority among `voters` ballots.
bool majority(int count, int voters) { return 2 * count > voters; }

}  // namespace

ScoringSafety::ScoringSafety(const Instance& inst,
                             std::span<const int64_t> scores)
    : scores_(scores.begin(), scores.end()) {
  const Profile& p = inst.profile();
  const int m = p.num_alternatives();
  const AltId c = inst.c();
  if (static_cast<int>(scores_.size()) != m) {
    throw InputError("scoring vector length does not match the election");
  }
  worst_gap_.assign(m, 0);
  for (AltId a = 0; a < m; ++a) {
    if (a == c) continue;
    int64_t gap = 0;
    for (int i = 0; i < p.num_voters(); ++i) {
      const Ranking& r = p[i];
      gap += scores_[r.rank(a) - 1] - scores_[r.rank(c) - 1];
      gap += worst_delta_scoring(r, c, a, inst.delta(i), scores_).delta;
    }
    worst_gap_[a] = gap;
  }
}

bool ScoringSafety::unsafe(AltId a, int position) const {
  // Safe iff S(Q,c) + s_1 >= S(Q,a) + s_t on the worst admissible Q.
  return worst_gap_[a] > scores_[0] - scores_[position - 1];
}

Decision decide_scoring(const Instance& inst, std::span<const int64_t> scores) {
  require_single_manipulator(inst, "scoring-rule");
  const ScoringSafety safety(inst, scores);
  return greedy_decide(inst, [&](AltId a, int t, std::span<const AltId>) {
    return safety.unsafe(a, t);
  });
}

Decision decide_scoring(const Instance& inst) {
  const std::vector<int64_t> s =
      inst.rule().score_vector(inst.num_alternatives());
  return decide_scoring(inst, s);
}

MaximinSafety::MaximinSafety(const Instance& inst)
    : m_(inst.num_alternatives()), c_(inst.c()) {
  const Profile& p = inst.profile();
  const int n = p.num_voters();
  rows_.resize(static_cast<size_t>(m_) * m_);
  std::vector<Ranking> perturbed(n);
  for (AltId a = 0; a < m_; ++a) {
    if (a == c_) continue;
    for (AltId b = 0; b < m_; ++b) {
      if (b == c_) continue;
      // Where c fits behind b within budget, do that first and spend the
      // rest lifting a; otherwise only lift a. For b == a, lifting a alone
      // also gets c behind a, and passes every alternative in between.
      for (int i = 0; i < n; ++i) {
        const int budget = inst.delta(i);
        const int behind = cost_place_after(p[i], c_, b);
        if (b != a && behind <= budget) {
          perturbed[i] =
              shift_left(shift_right(p[i], c_, behind), a, budget - behind);
        } else {
          perturbed[i] = shift_left(p[i], a, budget);
        }
      }
      Rows& rows = rows_[a * m_ + b];
      rows.a_row.assign(m_, 0);
      rows.c_row.assign(m_, 0);
      for (const Ranking& r : perturbed) {
        for (AltId y = 0; y < m_; ++y) {
          if (y != a) rows.a_row[y] += r.prefers(a, y) ? 1 : -1;
          if (y != c_) rows.c_row[y] += r.prefers(c_, y) ? 1 : -1;
        }
      }
    }
  }
}

bool MaximinSafety::unsafe(AltId a, std::span<const AltId> above) const {
  std::vector<char> is_above(m_, 0);
  for (AltId x : above) is_above[x] = 1;
  for (AltId b = 0; b < m_; ++b) {
    if (b == c_) continue;
    const Rows& rows = rows_[a * m_ + b];
    // The manipulator ranks c first and a just below `above`.
    int score_a = std::numeric_limits<int>::max();
    int score_c = std::numeric_limits<int>::max();
    for (AltId y = 0; y < m_; ++y) {
      if (y != a) score_a = std::min(score_a, rows.a_row[y] + (is_above[y] ? -1 : 1));
      if (y != c_) score_c = std::min(score_c, rows.c_row[y] + 1);
    }
    if (score_a > score_c) return true;
  }
  return false;
}

Decision decide_maximin(const Instance& inst) {
  require_single_manipulator(inst, "maximin");
  const MaximinSafety safety(inst);
  return greedy_decide(inst, [&](AltId a, int, std::span<const AltId> above) {
    return safety.unsafe(a, above);
  });
}

SimplifiedBucklinSafety::SimplifiedBucklinSafety(const Instance& inst)
    : m_(inst.num_alternatives()) {
  const Profile& p = inst.profile();
  const int n = p.num_voters();
  const AltId c = inst.c();
  loses_.assign(static_cast<size_t>(m_) * m_ * 2, 0);
  for (AltId a = 0; a < m_; ++a) {
    if (a == c) continue;
    for (int k = 1; k < m_; ++k) {
      // both / either / c-out-only / a-in-only / neither
      int n_both = 0, n_either = 0, n_a_in = 0, n_neither = 0;
      for (int i = 0; i < n; ++i) {
        switch (classify_kapproval(p[i], inst.delta(i), c, a, k)) {
          case KApprovalType::kBoth: ++n_both; break;
          case KApprovalType::kEither: ++n_either; break;
          case KApprovalType::kCOutOnly: break;
          case KApprovalType::kAInOnly: ++n_a_in; break;
          case KApprovalType::kNeither: ++n_neither; break;
        }
      }
      for (int manip_a_in = 0; manip_a_in < 2; ++manip_a_in) {
        // `pushed` either-ballots push c out; the rest pull a in. The
        // manipulator always has c in the top k.
        bool loses = false;
        for (int pushed = 0; pushed <= n_either && !loses; ++pushed) {
          const int c_count = (n_either - pushed) + n_a_in + n_neither + 1;
          const int a_count =
              n_both + (n_either - pushed) + n_a_in + manip_a_in;
          loses = majority(a_count, n + 1) && !majority(c_count, n + 1);
        }
        loses_[(a * m_ + k) * 2 + manip_a_in] = loses ? 1 : 0;
      }
    }
  }
}

bool SimplifiedBucklinSafety::unsafe(AltId a, int position) const {
  for (int k = 1; k < m_; ++k) {
    const int manip_a_in = position <= k ? 1 : 0;
    if (loses_[(a * m_ + k) * 2 + manip_a_in]) return true;
  }
  return false;
}

Decision decide_simplified_bucklin(const Instance& inst) {
  require_single_manipulator(inst, "simplified Bucklin");
  const SimplifiedBucklinSafety safety(inst);
  return greedy_decide(inst, [&](AltId a, int t, std::span<const AltId>) {
    return safety.unsafe(a, t);
  });
}

BucklinSafety::BucklinSafety(const Instance& inst)
    : m_(inst.num_alternatives()) {
  const Profile& p = inst.profile();
  const int n = p.num_voters();
  const int voters = n + 1;
  const AltId c = inst.c();
  constexpr int kUnreached = std::numeric_limits<int>::max();
  loses_.assign(static_cast<size_t>(m_) * m_ * 2, 0);
  // min_c[A][Cp]: fewest ballots with c in the top k over adversary choices
  // giving A ballots with a in the top k and Cp with c in the top k-1.
  const int side = n + 1;
  std::vector<int> min_c(side * side), next(side * side);
  for (AltId a = 0; a < m_; ++a) {
    if (a == c) continue;
    for (int k = 1; k < m_; ++k) {
      std::fill(min_c.begin(), min_c.end(), kUnreached);
      min_c[0] = 0;
      for (int i = 0; i < n; ++i) {
        // Distinct (a in k, c in k-1, c in k) outcomes this ballot can reach.
        std::array<bool, 8> options{};
        for (BucklinType t :
             bucklin_metatype(p[i], inst.delta(i), c, a, k).types()) {
          options[(t.a_in_top_k() ? 4 : 0) | (t.c_in_top_k_minus_1() ? 2 : 0) |
                  (t.c_in_top_k() ? 1 : 0)] = true;
        }
        std::fill(next.begin(), next.end(), kUnreached);
        for (int acount = 0; acount <= i; ++acount) {
          for (int cprev = 0; cprev <= i; ++cprev) {
            const int cur = min_c[acount * side + cprev];
            if (cur == kUnreached) continue;
            for (int o = 0; o < 8; ++o) {
              if (!options[o]) continue;
              const int idx = (acount + (o >> 2 & 1)) * side + cprev + (o >> 1 & 1);
              next[idx] = std::min(next[idx], cur + (o & 1));
            }
          }
        }
        std::swap(min_c, next);
      }
      for (int manip_a_in = 0; manip_a_in < 2; ++manip_a_in) {
        bool loses = false;
        for (int acount = 0; acount <= n && !loses; ++acount) {
          for (int cprev = 0; cprev <= n && !loses; ++cprev) {
            const int cur = min_c[acount * side + cprev];
            if (cur == kUnreached) continue;
            const int a_k = acount + manip_a_in;
            const int c_prev = cprev + (k >= 2 ? 1 : 0);
            const int c_k = cur + 1;
            loses = majority(a_k, voters) && !majority(c_prev, voters) &&
                    a_k > c_k;
          }
        }
        loses_[(a * m_ + k) * 2 + manip_a_in] = loses ? 1 : 0;
      }
    }
  }
}

bool BucklinSafety::unsafe(AltId a, int position) const {
  for (int k = 1; k < m_; ++k) {
    const int manip_a_in = position <= k ? 1 : 0;
    if (loses_[(a * m_ + k) * 2 + manip_a_in]) return true;
  }
  return false;
}

Decision decide_bucklin(const Instance& inst) {
  require_single_manipulator(inst, "Bucklin");
  const BucklinSafety safety(inst);
  return greedy_decide(inst, [&](AltId a, int t, std::span<const AltId>) {
    return safety.unsafe(a, t);
  });
}

KApprovalNetwork build_kapproval_network(const Instance& inst, int k) {
  const Profile& p = inst.profile();
  const int m = p.num_alternatives();
  const AltId c = inst.c();
  const int l = inst.manipulators();
  if (k < 1 || k >= m) {
    throw InputError("k-approval needs 1 <= k <= m-1, got k=" +
                     std::to_string(k) + " with m=" + std::to_string(m));
  }
  KApprovalNetwork out;
  out.lambda.assign(m, 0);
  for (AltId a = 0; a < m; ++a) {
    if (a == c) continue;
    int n_both = 0, n_neither = 0;
    for (int i = 0; i < p.num_voters(); ++i) {
      const KApprovalType type = classify_kapproval(p[i], inst.delta(i), c, a, k);
      n_both += type == KApprovalType::kBoth ? 1 : 0;
      n_neither += type == KApprovalType::kNeither ? 1 : 0;
    }
    out.lambda[a] = l + n_neither - n_both;
    if (out.lambda[a] < 0) out.negative_slack = true;
  }
  if (out.negative_slack) return out;

  FlowNetwork& net = out.network;
  out.source = net.add_node();
  out.sink = net.add_node();
  std::vector<int> manip_node(l), alt_node(m, -1);
  for (int i = 0; i < l; ++i) manip_node[i] = net.add_node();
  for (AltId a = 0; a < m; ++a) {
    if (a != c) alt_node[a] = net.add_node();
  }
  out.assignment_arc.assign(l, std::vector<int>(m, -1));
  for (int i = 0; i < l; ++i) {
    net.add_arc(out.source, manip_node[i], k - 1);
    for (AltId a = 0; a < m; ++a) {
      if (a != c) out.assignment_arc[i][a] = net.add_arc(manip_node[i], alt_node[a], 1);
    }
  }
  for (AltId a = 0; a < m; ++a) {
    if (a != c) net.add_arc(alt_node[a], out.sink, out.lambda[a]);
  }
  return out;
}

Decision decide_kapproval(const Instance& inst, int k) {
  const KApprovalNetwork reduction = build_kapproval_network(inst, k);
  if (reduction.negative_slack) return Decision{Verdict::kNo, {}, {}};
  const int m = inst.num_alternatives();
  const int l = inst.manipulators();
  const MaxFlowResult flow =
      max_flow(reduction.network, reduction.source, reduction.sink);
  if (flow.value != static_cast<int64_t>(l) * (k - 1)) {
    return Decision{Verdict::kNo, {}, {}};
  }
  Decision decision{Verdict::kYes, {}, {}};
  for (int i = 0; i < l; ++i) {
    std::vector<AltId> top = {inst.c()}, rest;
    for (AltId a = 0; a < m; ++a) {
      if (a == inst.c()) continue;
      const int arc = reduction.assignment_arc[i][a];
      (flow.arc_flow[arc] > 0 ? top : rest).push_back(a);
    }
    top.insert(top.end(), rest.begin(), rest.end());
    decision.witness.emplace_back(std::move(top));
  }
  return decision;
}

bool has_polynomial_decider(const Rule& rule, int manipulators) {
  switch (rule.kind()) {
    case RuleKind::kApproval:
    case RuleKind::kPlurality:
    case RuleKind::kVeto:
      return true;
    case RuleKind::kScoring:
    case RuleKind::kBorda:
    case RuleKind::kMaximin:
    case RuleKind::kBucklin:
    case RuleKind::kSimplifiedBucklin:
      return manipulators == 1;
    case RuleKind::kCopeland:
    case RuleKind::kStv:
      return false;
  }
  return false;
}

Decision decide(const Instance& inst) {
  const Rule& rule = inst.rule();
  const int m = inst.num_alternatives();
  const int l = inst.manipulators();
  if (m == 1) return Decision{Verdict::kYes, std::vector<Ranking>(l, Ranking::Identity(1)), {}};
  switch (rule.kind()) {
    case RuleKind::kApproval:
      return decide_kapproval(inst, rule.k());
    case RuleKind::kPlurality:
      return l == 1 ? decide_scoring(inst) : decide_kapproval(inst, 1);
    case RuleKind::kVeto:
      return l == 1 ? decide_scoring(inst) : decide_kapproval(inst, m - 1);
    case RuleKind::kCopeland:
      throw UnsupportedError(
          "Copeland has no polynomial stable-manipulation decider (the "
          "problem is co-NP-hard even for one manipulator); use the "
          "exhaustive oracle");
    case RuleKind::kStv:
      throw UnsupportedError(
          "STV has no polynomial stable-manipulation decider; use the "
          "exhaustive oracle");
    default:
      break;
  }
  if (l != 1) {
    throw UnsupportedError("rule '" + rule.name() +
                           "' has a polynomial decider only for one "
                           "manipulator; use the exhaustive oracle");
  }
  switch (rule.kind()) {
    case RuleKind::kMaximin: return decide_maximin(inst);
    case RuleKind::kBucklin: return decide_bucklin(inst);
    case RuleKind::kSimplifiedBucklin: return decide_simplified_bucklin(inst);
    default: return decide_scoring(inst);
  }
}

}  // namespace stablemanip
