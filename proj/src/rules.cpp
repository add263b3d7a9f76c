#include "stablemanip/rules.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>

#include "stablemanip/errors.hpp"

namespace stablemanip {

namespace {

int64_t parse_int(std::string_view text, std::string_view what) {
  int64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw InputError("invalid " + std::string(what) + " '" +
                     std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

Rational::Rational(int64_t n, int64_t d) : num(n), den(d) {
  if (d == 0) throw InputError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::Parse(std::string_view text) {
  const size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, "number"));
  return Rational(parse_int(text.substr(0, slash), "numerator"),
                  parse_int(text.substr(slash + 1), "denominator"));
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rule Rule::Scoring(std::vector<int64_t> vector) {
  if (vector.size() < 2) {
    throw InputError("scoring vector needs at least two entries");
  }
  if (!std::is_sorted(vector.rbegin(), vector.rend())) {
    throw InputError("scoring vector must be non-increasing");
  }
  if (vector.front() <= vector.back()) {
    throw InputError("scoring vector must have first entry > last entry");
  }
  Rule rule(RuleKind::kScoring);
  rule.vector_ = std::move(vector);
  return rule;
}

Rule Rule::Approval(int k) {
  if (k < 1) throw InputError("k-approval needs k >= 1");
  Rule rule(RuleKind::kApproval);
  rule.k_ = k;
  return rule;
}

Rule Rule::Copeland(Rational alpha) {
  if (alpha < Rational(0) || alpha > Rational(1)) {
    throw InputError("Copeland alpha must lie in [0, 1]");
  }
  Rule rule(RuleKind::kCopeland);
  rule.alpha_ = alpha;
  return rule;
}

Rule Rule::Parse(std::string_view text) {
  const size_t colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view tail =
      colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);
  const bool has_args = colon != std::string_view::npos;
  auto no_args = [&](Rule r) {
    if (has_args) {
      throw InputError("rule '" + std::string(head) + "' takes no parameters");
    }
    return r;
  };
  if (head == "plurality") return no_args(Plurality());
  if (head == "veto") return no_args(Veto());
  if (head == "borda") return no_args(Borda());
  if (head == "maximin") return no_args(Maximin());
  if (head == "bucklin") return no_args(Bucklin());
  if (head == "simplified-bucklin") return no_args(SimplifiedBucklin());
  if (head == "stv") return no_args(Stv());
  if (head == "copeland") {
    return has_args ? Copeland(Rational::Parse(tail)) : Copeland();
  }
  if (head == "k-approval") {
    if (!has_args) throw InputError("k-approval needs a parameter, e.g. k-approval:2");
    return Approval(static_cast<int>(parse_int(tail, "k")));
  }
  if (head == "scoring") {
    if (!has_args) throw InputError("scoring needs a vector, e.g. scoring:2:1:0");
    std::vector<int64_t> vec;
    for (std::string_view part : split(tail, ':')) {
      vec.push_back(parse_int(part, "scoring entry"));
    }
    return Scoring(std::move(vec));
  }
  throw InputError("unknown rule '" + std::string(text) + "'");
}

std::string Rule::name() const {
  switch (kind_) {
    case RuleKind::kPlurality: return "plurality";
    case RuleKind::kVeto: return "veto";
    case RuleKind::kBorda: return "borda";
    case RuleKind::kMaximin: return "maximin";
    case RuleKind::kBucklin: return "bucklin";
    case RuleKind::kSimplifiedBucklin: return "simplified-bucklin";
    case RuleKind::kStv: return "stv";
    case RuleKind::kApproval: return "k-approval:" + std::to_string(k_);
    case RuleKind::kCopeland:
      return alpha_ == Rational(0) ? "copeland" : "copeland:" + alpha_.to_string();
    case RuleKind::kScoring: {
      std::string out = "scoring";
      for (int64_t v : vector_) out += ":" + std::to_string(v);
      return out;
    }
  }
  return "unknown";
}

bool Rule::is_scoring_family() const {
  switch (kind_) {
    case RuleKind::kScoring:
    case RuleKind::kApproval:
    case RuleKind::kPlurality:
    case RuleKind::kVeto:
    case RuleKind::kBorda:
      return true;
    default:
      return false;
  }
}

std::vector<int64_t> Rule::score_vector(int m) const {
  std::vector<int64_t> s(m, 0);
  switch (kind_) {
    case RuleKind::kPlurality:
      s[0] = 1;
      return s;
    case RuleKind::kVeto:
      std::fill(s.begin(), s.end() - 1, 1);
      return s;
    case RuleKind::kBorda:
      for (int i = 0; i < m; ++i) s[i] = m - 1 - i;
      return s;
    case RuleKind::kApproval:
      if (k_ > m - 1) {
        throw InputError("k-approval with k=" + std::to_string(k_) +
                         " needs k <= m-1 = " + std::to_string(m - 1));
      }
      std::fill(s.begin(), s.begin() + k_, 1);
      return s;
    case RuleKind::kScoring:
      if (static_cast<int>(vector_.size()) != m) {
        throw InputError("scoring vector has " + std::to_string(vector_.size()) +
                         " entries but the election has " + std::to_string(m) +
                         " alternatives");
      }
      return vector_;
    default:
      throw InputError("rule '" + name() + "' has no positional scoring vector");
  }
}

int top_k_count(const Profile& p, AltId a, int k) {
  const int m = p.num_alternatives();
  if (k < 1 || k > m) {
    throw InputError("top_k_count: k=" + std::to_string(k) + " outside [1, m]");
  }
  int count = 0;
  for (const Ranking& r : p.rankings()) count += r.rank(a) <= k ? 1 : 0;
  return count;
}

namespace {

std::vector<AltId> argmax(const std::vector<Rational>& scores) {
  const Rational best = *std::max_element(scores.begin(), scores.end());
  std::vector<AltId> out;
  for (AltId a = 0; a < static_cast<AltId>(scores.size()); ++a) {
    if (scores[a] == best) out.push_back(a);
  }
  return out;
}

std::vector<AltId> bucklin_like(const Profile& p, bool simplified) {
  const int m = p.num_alternatives();
  const int n = p.num_voters();
  std::vector<int> counts(m, 0);
  for (int level = 1; level <= m; ++level) {
    for (const Ranking& r : p.rankings()) ++counts[r.at(level)];
    const int best = *std::max_element(counts.begin(), counts.end());
    if (2 * best <= n) continue;
    std::vector<AltId> out;
    for (AltId a = 0; a < m; ++a) {
      if (simplified ? 2 * counts[a] > n : counts[a] == best) out.push_back(a);
    }
    return out;
  }
  return {};  // unreachable: at level m every count is n
}

AltId stv_winner(const Profile& p) {
  const int m = p.num_alternatives();
  std::vector<bool> alive(m, true);
  std::vector<int> tally(m);
  for (int round = 0; round < m - 1; ++round) {
    std::fill(tally.begin(), tally.end(), 0);
    for (const Ranking& r : p.rankings()) {
      for (AltId a : r.order()) {
        if (alive[a]) {
          ++tally[a];
          break;
        }
      }
    }
    AltId loser = -1;
    for (AltId a = 0; a < m; ++a) {
      if (alive[a] && (loser < 0 || tally[a] < tally[loser])) loser = a;
    }
    alive[loser] = false;
  }
  return static_cast<AltId>(std::find(alive.begin(), alive.end(), true) -
                            alive.begin());
}

}  // namespace

ScoreTable score_table(const Profile& p, const Rule& rule) {
  const int m = p.num_alternatives();
  ScoreTable table;
  table.scores.assign(m, Rational(0));
  if (rule.is_scoring_family()) {
    const std::vector<int64_t> s = rule.score_vector(m);
    std::vector<int64_t> sum(m, 0);
    for (const Ranking& r : p.rankings()) {
      for (int pos = 1; pos <= m; ++pos) sum[r.at(pos)] += s[pos - 1];
    }
    for (AltId a = 0; a < m; ++a) table.scores[a] = Rational(sum[a]);
    return table;
  }
  if (rule.kind() == RuleKind::kMaximin) {
    const std::vector<int> d = margin_matrix(p);
    for (AltId x = 0; x < m; ++x) {
      int worst = m == 1 ? 0 : std::numeric_limits<int>::max();
      for (AltId y = 0; y < m; ++y) {
        if (y != x) worst = std::min(worst, d[x * m + y]);
      }
      table.scores[x] = Rational(worst);
    }
    return table;
  }
  if (rule.kind() == RuleKind::kCopeland) {
    const std::vector<int> d = margin_matrix(p);
    const Rational alpha = rule.alpha();
    for (AltId x = 0; x < m; ++x) {
      int64_t wins = 0, ties = 0;
      for (AltId y = 0; y < m; ++y) {
        if (y == x) continue;
        wins += d[x * m + y] > 0 ? 1 : 0;
        ties += d[x * m + y] == 0 ? 1 : 0;
      }
      table.scores[x] = Rational(wins * alpha.den + ties * alpha.num, alpha.den);
    }
    return table;
  }
  throw UnsupportedError("rule '" + rule.name() +
                         "' has no positional or pairwise score table");
}

std::vector<AltId> winners(const Profile& p, const Rule& rule) {
  switch (rule.kind()) {
    case RuleKind::kBucklin:
      return bucklin_like(p, /*simplified=*/false);
    case RuleKind::kSimplifiedBucklin:
      return bucklin_like(p, /*simplified=*/true);
    case RuleKind::kStv:
      return {stv_winner(p)};
    default:
      return argmax(score_table(p, rule).scores);
  }
}

bool is_cowinner(const Profile& p, const Rule& rule, AltId c) {
  const std::vector<AltId> w = winners(p, rule);
  return std::binary_search(w.begin(), w.end(), c);
}

}  // namespace stablemanip
