#pragma once

#include <optional>

#include "oigb/resolution.hpp"

namespace oigb {

/* Empirical verdict on the width-stability of the nonzero-Betti degree set at
 * one homological degree. The detector reports what the scanned range shows;
 * it never claims a proof. */
struct StabilizationEntry {
  enum class Status { Stable, NotYetStable };

  int p = 0;
  Status status = Status::NotYetStable;
  std::vector<int> stable_set;          // degree set over the trailing window
  std::optional<int> onset_width;       // first scanned width from which the set is constant
  std::optional<int> max_degree;        // m(M, p) over the scanned widths
};

/* Stable iff the nonzero-degree set at p is identical across the trailing
 * min_consecutive scanned widths. InsufficientData on an empty table;
 * NotYetStable when fewer widths were scanned than required. */
StabilizationEntry detect(const BettiTable& table, int p, int min_consecutive = 3);

}  // namespace oigb
