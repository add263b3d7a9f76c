#ifndef STABLEMANIP_RULES_HPP_
#define STABLEMANIP_RULES_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stablemanip/ranking.hpp"

namespace stablemanip {

// Exact rational, always stored in lowest terms with den > 0.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;

  Rational() = default;
  Rational(int64_t n) : num(n), den(1) {}  // NOLINT: implicit from integer
  Rational(int64_t n, int64_t d);

  static Rational Parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& l,
                                          const Rational& r) {
    return static_cast<__int128>(l.num) * r.den <=>
           static_cast<__int128>(r.num) * l.den;
  }
};

enum class RuleKind {
  kScoring,
  kApproval,
  kPlurality,
  kVeto,
  kBorda,
  kMaximin,
  kCopeland,
  kBucklin,
  kSimplifiedBucklin,
  kStv,
};

class Rule {
 public:
  static Rule Scoring(std::vector<int64_t> vector);
  static Rule Approval(int k);
  static Rule Plurality() { return Rule(RuleKind::kPlurality); }
  static Rule Veto() { return Rule(RuleKind::kVeto); }
  static Rule Borda() { return Rule(RuleKind::kBorda); }
  static Rule Maximin() { return Rule(RuleKind::kMaximin); }
  static Rule Copeland(Rational alpha = Rational(0));
  static Rule Bucklin() { return Rule(RuleKind::kBucklin); }
  static Rule SimplifiedBucklin() { return Rule(RuleKind::kSimplifiedBucklin); }
  static Rule Stv() { return Rule(RuleKind::kStv); }

  // Accepts the names produced by name(): "plurality", "veto", "borda",
  // "k-approval:K", "scoring:A1:A2:...", "maximin", "copeland[:P/Q]",
  // "bucklin", "simplified-bucklin", "stv".
  static Rule Parse(std::string_view text);
  std::string name() const;

  RuleKind kind() const { return kind_; }
  int k() const { return k_; }
  const Rational& alpha() const { return alpha_; }

  // Plurality, veto, Borda, k-approval and explicit scoring vectors.
  bool is_scoring_family() const;
  // Monotone in the sense that lifting c in a ballot never hurts c. Every
  // rule here except STV.
  bool is_monotone() const { return kind_ != RuleKind::kStv; }

  // The positional vector for m alternatives. Throws InputError if the rule
  // is not in the scoring family or the parameters do not fit m.
  std::vector<int64_t> score_vector(int m) const;

  friend bool operator==(const Rule&, const Rule&) = default;

 private:
  explicit Rule(RuleKind kind) : kind_(kind) {}

  RuleKind kind_;
  std::vector<int64_t> vector_;
  int k_ = 0;
  Rational alpha_;
};

// Per-alternative scores; integral except under Copeland with fractional
// alpha.
struct ScoreTable {
  std::vector<Rational> scores;

  const Rational& operator[](AltId a) const { return scores[a]; }
};

// Number of ballots placing a within the first k positions.
int top_k_count(const Profile& p, AltId a, int k);

// Scores for scoring-family rules, maximin and Copeland.
ScoreTable score_table(const Profile& p, const Rule& rule);

// Co-winners, sorted by id. Never empty. STV returns a single winner,
// eliminating the lowest-plurality alternative with the smallest id.
std::vector<AltId> winners(const Profile& p, const Rule& rule);

bool is_cowinner(const Profile& p, const Rule& rule, AltId c);

}  // namespace stablemanip

#endif  // STABLEMANIP_RULES_HPP_
