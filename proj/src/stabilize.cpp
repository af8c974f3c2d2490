#include "oigb/stabilize.hpp"

#include <algorithm>

namespace oigb {

StabilizationEntry detect(const BettiTable& table, int p, int min_consecutive) {
  if (min_consecutive < 1) throw ParameterMismatch("min_consecutive must be >= 1");
  std::vector<int> widths = table.widths();
  std::sort(widths.begin(), widths.end());
  widths.erase(std::unique(widths.begin(), widths.end()), widths.end());
  if (widths.empty()) throw InsufficientData("empty Betti table");

  StabilizationEntry entry;
  entry.p = p;

  std::vector<std::set<int>> sets;
  sets.reserve(widths.size());
  for (int n : widths) {
    sets.push_back(table.degree_set(n, p));
    for (int j : sets.back())
      entry.max_degree = std::max(entry.max_degree.value_or(j), j);
  }

  const std::set<int>& last = sets.back();
  entry.stable_set.assign(last.begin(), last.end());

  size_t constant_from = sets.size() - 1;
  while (constant_from > 0 && sets[constant_from - 1] == last) --constant_from;
  entry.onset_width = widths[constant_from];

  size_t trailing = sets.size() - constant_from;
  if (static_cast<int>(widths.size()) >= min_consecutive &&
      static_cast<int>(trailing) >= min_consecutive)
    entry.status = StabilizationEntry::Status::Stable;
  return entry;
}

}  // namespace oigb
