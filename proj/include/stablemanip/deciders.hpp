#ifndef STABLEMANIP_DECIDERS_HPP_
#define STABLEMANIP_DECIDERS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "stablemanip/instance.hpp"
#include "stablemanip/max_flow.hpp"
#include "stablemanip/ranking.hpp"

namespace stablemanip {

enum class Verdict { kYes, kNo };

// An adversary profile inside every voter's ball that keeps c out of the
// winners once `manipulators` are added.
struct Refutation {
  std::vector<Ranking> manipulators;
  Profile adversary;
};

struct Decision {
  Verdict verdict = Verdict::kNo;
  // YES: one ballot per manipulator, each with c first.
  std::vector<Ranking> witness;
  // NO from an exhaustive oracle: one refutation per manipulator profile
  // tried. Empty for the polynomial deciders.
  std::vector<Refutation> refutations;

  bool yes() const { return verdict == Verdict::kYes; }
};

// Greedy deciders for a single manipulator. Each places c first and fills
// positions 2..m with the smallest-id alternative that is safe there.

Decision decide_scoring(const Instance& inst, std::span<const int64_t> scores);
Decision decide_scoring(const Instance& inst);
Decision decide_maximin(const Instance& inst);
Decision decide_simplified_bucklin(const Instance& inst);
Decision decide_bucklin(const Instance& inst);

// Max-flow decider for k-approval, any number of manipulators.
Decision decide_kapproval(const Instance& inst, int k);

// True when decide() has a polynomial-time route for this rule and
// manipulator count.
bool has_polynomial_decider(const Rule& rule, int manipulators);

// Routes to the polynomial decider for inst.rule(). Throws UnsupportedError
// for Copeland, STV, and multi-manipulator rules outside k-approval.
Decision decide(const Instance& inst);

// The flow network behind decide_kapproval. When some alternative has
// negative slack the instance is already NO and no network is built.
struct KApprovalNetwork {
  // Slack of each alternative: manipulators + neither-count - both-count.
  // lambda[c] is unused.
  std::vector<int64_t> lambda;
  bool negative_slack = false;
  FlowNetwork network;
  int source = 0;
  int sink = 0;
  // assignment_arc[i][a]: arc u_i -> v_a, or -1 for a == c.
  std::vector<std::vector<int>> assignment_arc;
};

KApprovalNetwork build_kapproval_network(const Instance& inst, int k);

// Per-alternative safety predicates used by the greedy deciders. Each
// precomputes the adversary's worst profiles once per instance; unsafe()
// answers whether putting a at a 1-indexed position lets some admissible
// adversary profile beat c.

class ScoringSafety {
 public:
  ScoringSafety(const Instance& inst, std::span<const int64_t> scores);
  bool unsafe(AltId a, int position) const;

 private:
  std::vector<int64_t> scores_;
  std::vector<int64_t> worst_gap_;  // max S(Q,a) - S(Q,c) over admissible Q
};

class MaximinSafety {
 public:
  explicit MaximinSafety(const Instance& inst);
  // `above` lists the alternatives the manipulator ranks above a (c first).
  bool unsafe(AltId a, std::span<const AltId> above) const;

 private:
  int m_;
  AltId c_;
  // rows_[(a * m + b)] holds margins of a and of c against every alternative
  // in the adversary profile built for the pair (a, b).
  struct Rows {
    std::vector<int> a_row;
    std::vector<int> c_row;
  };
  std::vector<Rows> rows_;
};

class SimplifiedBucklinSafety {
 public:
  explicit SimplifiedBucklinSafety(const Instance& inst);
  bool unsafe(AltId a, int position) const;

 private:
  int m_;
  // loses_[(a * m + k) * 2 + manip_a_in]
  std::vector<char> loses_;
};

class BucklinSafety {
 public:
  explicit BucklinSafety(const Instance& inst);
  bool unsafe(AltId a, int position) const;

 private:
  int m_;
  std::vector<char> loses_;  // same layout as SimplifiedBucklinSafety
};

}  // namespace stablemanip

#endif  // STABLEMANIP_DECIDERS_HPP_
