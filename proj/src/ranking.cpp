#include "stablemanip/ranking.hpp"

#include <algorithm>
#include <numeric>

#include "stablemanip/errors.hpp"

namespace stablemanip {

AlternativeSet::AlternativeSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw InputError("duplicate alternative label");
  }
}

AlternativeSet AlternativeSet::Default(int m) {
  std::vector<std::string> labels;
  labels.reserve(m);
  for (int i = 0; i < m; ++i) {
    if (m <= 26) {
      labels.emplace_back(1, static_cast<char>('a' + i));
    } else {
      labels.push_back("a" + std::to_string(i + 1));
    }
  }
  return AlternativeSet(std::move(labels));
}

const std::string& AlternativeSet::label(AltId a) const {
  if (a < 0 || a >= size()) {
    throw InputError("alternative id " + std::to_string(a) + " out of range");
  }
  return labels_[a];
}

AltId AlternativeSet::id(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) {
    throw InputError("unknown alternative '" + std::string(label) + "'");
  }
  return static_cast<AltId>(it - labels_.begin());
}

bool AlternativeSet::contains(std::string_view label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

Ranking::Ranking(std::vector<AltId> order) : order_(std::move(order)) {
  const int m = size();
  pos_.assign(m, -1);
  for (int i = 0; i < m; ++i) {
    const AltId a = order_[i];
    if (a < 0 || a >= m || pos_[a] != -1) {
      throw InputError("ranking is not a permutation of 0.." +
                       std::to_string(m - 1));
    }
    pos_[a] = i;
  }
}

Ranking Ranking::Identity(int m) {
  std::vector<AltId> order(m);
  std::iota(order.begin(), order.end(), 0);
  return Ranking(std::move(order));
}

int Ranking::rank(AltId a) const {
  if (a < 0 || a >= size()) {
    throw InputError("alternative id " + std::to_string(a) + " out of range");
  }
  return pos_[a] + 1;
}

Ranking Ranking::swapped(int i) const {
  Ranking out = *this;
  std::swap(out.order_[i - 1], out.order_[i]);
  out.pos_[out.order_[i - 1]] = i - 1;
  out.pos_[out.order_[i]] = i;
  return out;
}

int rank(const Ranking& r, AltId a) { return r.rank(a); }

namespace {

int64_t count_inversions(std::vector<int>& v, std::vector<int>& buf, int lo,
                         int hi) {
  if (hi - lo < 2) return 0;
  const int mid = lo + (hi - lo) / 2;
  int64_t inv = count_inversions(v, buf, lo, mid) +
                count_inversions(v, buf, mid, hi);
  int i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[i] <= v[j]) {
      buf[k++] = v[i++];
    } else {
      inv += mid - i;
      buf[k++] = v[j++];
    }
  }
  while (i < mid) buf[k++] = v[i++];
  while (j < hi) buf[k++] = v[j++];
  std::copy(buf.begin() + lo, buf.begin() + hi, v.begin() + lo);
  return inv;
}

}  // namespace

int kendall_tau(const Ranking& r1, const Ranking& r2) {
  if (r1.size() != r2.size()) {
    throw InputError("kendall_tau: rankings over different alternative sets");
  }
  // Positions in r2 of r1's order; inversions of that sequence are the
  // discordant pairs.
  const int m = r1.size();
  std::vector<int> seq(m);
  for (int i = 0; i < m; ++i) seq[i] = r2.rank(r1.at(i + 1));
  std::vector<int> buf(m);
  return static_cast<int>(count_inversions(seq, buf, 0, m));
}

Ranking shift_right(const Ranking& r, AltId a, int k) {
  if (k < 0) throw InputError("shift_right: negative shift");
  const int from = r.rank(a);
  const int to = from + std::min(k, r.size() - from);
  std::vector<AltId> order(r.order().begin(), r.order().end());
  std::rotate(order.begin() + from - 1, order.begin() + from,
              order.begin() + to);
  return Ranking(std::move(order));
}

Ranking shift_left(const Ranking& r, AltId a, int k) {
  if (k < 0) throw InputError("shift_left: negative shift");
  const int from = r.rank(a);
  const int to = from - std::min(k, from - 1);
  std::vector<AltId> order(r.order().begin(), r.order().end());
  std::rotate(order.begin() + to - 1, order.begin() + from - 1,
              order.begin() + from);
  return Ranking(std::move(order));
}

Profile::Profile(int m, std::vector<Ranking> rankings)
    : m_(m), rankings_(std::move(rankings)) {
  if (m < 1) throw InputError("profile needs at least one alternative");
  if (rankings_.empty()) throw InputError("profile needs at least one voter");
  for (const Ranking& r : rankings_) {
    if (r.size() != m) {
      throw InputError("profile ranking has " + std::to_string(r.size()) +
                       " alternatives, expected " + std::to_string(m));
    }
  }
}

Profile Profile::with(std::span<const Ranking> extra) const {
  std::vector<Ranking> all = rankings_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Profile(m_, std::move(all));
}

int margin(const Profile& p, AltId x, AltId y) {
  const int m = p.num_alternatives();
  if (x < 0 || x >= m || y < 0 || y >= m) {
    throw InputError("margin: alternative id out of range");
  }
  if (x == y) throw InputError("margin: x and y must differ");
  int d = 0;
  for (const Ranking& r : p.rankings()) d += r.prefers(x, y) ? 1 : -1;
  return d;
}

std::vector<int> margin_matrix(const Profile& p) {
  const int m = p.num_alternatives();
  std::vector<int> d(static_cast<size_t>(m) * m, 0);
  for (const Ranking& r : p.rankings()) {
    const auto order = r.order();
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        ++d[order[i] * m + order[j]];
        --d[order[j] * m + order[i]];
      }
    }
  }
  return d;
}

}  // namespace stablemanip
