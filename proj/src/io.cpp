#include "stablemanip/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "stablemanip/errors.hpp"

namespace stablemanip {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> tokens(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(std::string_view text, int line, const std::string& what) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    fail(line, "invalid " + what + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

InstanceFile parse_instance_file(std::string_view text) {
  InstanceFile file;
  std::vector<std::pair<int, std::vector<std::string>>> ballot_lines;
  bool in_header = true;
  int line_no = 0;
  int c_line = 0, delta_line = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      if (!ballot_lines.empty()) in_header = false;
      continue;
    }
    const size_t eq = line.find('=');
    if (in_header && eq != std::string_view::npos && ballot_lines.empty()) {
      const std::string_view key = trim(line.substr(0, eq));
      const std::string_view value = trim(line.substr(eq + 1));
      if (value.empty()) fail(line_no, "empty value for '" + std::string(key) + "'");
      if (key == "rule") {
        file.rule = std::string(value);
      } else if (key == "c") {
        file.c = std::string(value);
        c_line = line_no;
      } else if (key == "l") {
        file.manipulators = parse_int(value, line_no, "manipulator count");
        if (*file.manipulators < 1) fail(line_no, "l must be at least 1");
      } else if (key == "delta") {
        std::vector<int> deltas;
        size_t pos = 0;
        while (true) {
          const size_t comma = value.find(',', pos);
          const std::string_view part = trim(value.substr(pos, comma - pos));
          const int d = parse_int(part, line_no, "delta");
          if (d < 0) fail(line_no, "delta must be non-negative");
          deltas.push_back(d);
          if (comma == std::string_view::npos) break;
          pos = comma + 1;
        }
        file.uniform_delta = deltas.size() == 1;
        delta_line = line_no;
        file.deltas = std::move(deltas);
      } else {
        fail(line_no, "unknown header key '" + std::string(key) + "'");
      }
      continue;
    }
    if (eq != std::string_view::npos) {
      fail(line_no, "header line after the ballots begin");
    }
    in_header = false;
    ballot_lines.emplace_back(line_no, tokens(line));
  }
  if (ballot_lines.empty()) fail(line_no, "no ballots");

  const auto& [first_line, first] = ballot_lines.front();
  try {
    file.alternatives = AlternativeSet(first);
  } catch (const InputError& e) {
    fail(first_line, e.what());
  }
  const int m = file.alternatives.size();
  std::vector<Ranking> rankings;
  for (const auto& [ln, labels] : ballot_lines) {
    if (static_cast<int>(labels.size()) != m) {
      fail(ln, "ballot lists " + std::to_string(labels.size()) +
                   " alternatives, expected " + std::to_string(m));
    }
    std::vector<AltId> order;
    for (const std::string& label : labels) {
      if (!file.alternatives.contains(label)) {
        fail(ln, "unknown alternative '" + label + "'");
      }
      order.push_back(file.alternatives.id(label));
    }
    try {
      rankings.emplace_back(std::move(order));
    } catch (const InputError&) {
      fail(ln, "ballot repeats an alternative");
    }
  }
  file.profile = Profile(m, std::move(rankings));

  if (file.c && !file.alternatives.contains(*file.c)) {
    fail(c_line, "c names unknown alternative '" + *file.c + "'");
  }
  if (file.deltas) {
    const int n = file.profile.num_voters();
    if (file.uniform_delta) {
      file.deltas->assign(n, file.deltas->front());
    } else if (static_cast<int>(file.deltas->size()) != n) {
      fail(delta_line, "delta lists " + std::to_string(file.deltas->size()) +
                  " budgets for " + std::to_string(n) + " ballots");
    }
  }
  return file;
}

std::string format_ranking(const Ranking& r, const AlternativeSet& labels) {
  std::string out;
  for (AltId a : r.order()) {
    if (!out.empty()) out += ' ';
    out += labels.label(a);
  }
  return out;
}

std::string format_instance_file(const InstanceFile& file) {
  std::string out;
  if (file.rule) out += "rule=" + *file.rule + "\n";
  if (file.c) out += "c=" + *file.c + "\n";
  if (file.deltas) {
    out += "delta=";
    if (file.uniform_delta) {
      out += std::to_string(file.deltas->front());
    } else {
      for (size_t i = 0; i < file.deltas->size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string((*file.deltas)[i]);
      }
    }
    out += "\n";
  }
  if (file.manipulators) out += "l=" + std::to_string(*file.manipulators) + "\n";
  if (!out.empty()) out += "\n";
  for (const Ranking& r : file.profile.rankings()) {
    out += format_ranking(r, file.alternatives) + "\n";
  }
  return out;
}

Instance to_instance(const InstanceFile& file) {
  if (!file.rule) throw InputError("instance file has no rule= line");
  if (!file.c) throw InputError("instance file has no c= line");
  if (!file.deltas) throw InputError("instance file has no delta= line");
  return Instance(file.profile, file.alternatives.id(*file.c), *file.deltas,
                  file.manipulators.value_or(1), Rule::Parse(*file.rule));
}

void write_results_csv(std::ostream& out, std::vector<ExperimentRow> rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ExperimentRow& l, const ExperimentRow& r) {
                     return std::tie(l.rule, l.m, l.n, l.delta) <
                            std::tie(r.rule, r.m, r.n, r.delta);
                   });
  out << "# stablemanip " << kToolVersion << "\n";
  out << "# rng: " << kRngDescription << "\n";
  out << "rule,m,n,delta,trials,seed,yes_count,fraction\n";
  for (const ExperimentRow& row : rows) {
    if (row.error) {
      out << "# error: rule=" << row.rule << " m=" << row.m << " n=" << row.n
          << " delta=" << row.delta << ": " << *row.error << "\n";
      continue;
    }
    char fraction[32];
    std::snprintf(fraction, sizeof(fraction), "%.4f", row.fraction);
    out << row.rule << ',' << row.m << ',' << row.n << ',' << row.delta << ','
        << row.trials << ',' << row.seed << ',' << row.yes_count << ','
        << fraction << "\n";
  }
}

}  // namespace stablemanip
