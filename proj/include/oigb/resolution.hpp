#pragma once

#include <map>
#include <set>
#include <tuple>

#include "oigb/groebner.hpp"
#include "oigb/linalg.hpp"

namespace oigb {

/* Number of width-n ring monomials of a given total degree. */
long monomial_count(const VariableScheme& scheme, int width, int degree);

using PolyMatrix = std::vector<std::vector<Polynomial>>;  // rows x cols

/* Rank of the internal-degree-j block of a homogeneous polynomial matrix
 * whose rows and columns carry the given shifts. */
long graded_block_rank(const PolyMatrix& matrix, const std::vector<int>& row_shifts,
                       const std::vector<int>& col_shifts, const VariableScheme& scheme,
                       int width, const Field& field, int degree);

/* A graded chain of free modules over the width-n ring with exact polynomial
 * differentials: F_length -> ... -> F_1 -> F_0. Built by iterated Groebner /
 * Schreyer syzygy steps and optionally minimalized by stripping unit entries.
 * For a quotient resolution F_0 is the ambient free module at this width. */
class WidthResolution {
 public:
  WidthResolution(VariableScheme scheme, Field field, int width, bool quotient)
      : scheme_(scheme), field_(field), width_(width), quotient_(quotient) {}

  int width() const { return width_; }
  bool resolves_quotient() const { return quotient_; }
  bool minimalized() const { return minimalized_; }
  int length() const { return static_cast<int>(shifts_.size()) - 1; }

  /* Generator degrees of F_p. */
  const std::vector<int>& shifts(int p) const { return shifts_.at(static_cast<size_t>(p)); }
  /* Differential F_p -> F_{p-1}, 1 <= p <= length. */
  const PolyMatrix& differential(int p) const { return diffs_.at(static_cast<size_t>(p) - 1); }

  bool composes_to_zero() const;
  bool has_unit_entries() const;

  /* Graded Betti numbers read off the shift multisets: (p, j) -> count. */
  std::map<std::pair<int, int>, long> betti() const;

  /* Homology of the chain at position p in internal degree j, by exact rank
   * computation (position 0 reports the cokernel of the first differential). */
  long homology_dim(int p, int j) const;

 private:
  friend WidthResolution width_resolution_impl(const GeneratorSet&, const MonomialOrder&, int,
                                               int, bool, bool);
  long block_rank(size_t diff_index, int degree) const;
  void prune();

  VariableScheme scheme_;
  Field field_;
  int width_;
  bool quotient_;
  bool minimalized_ = false;
  std::vector<std::vector<int>> shifts_;  // per homological degree
  std::vector<PolyMatrix> diffs_;         // diffs_[p-1] : F_p -> F_{p-1}
};

struct ResolutionOptions {
  bool quotient = true;    // resolve F/<gens>; false resolves the submodule
  bool minimalize = true;  // strip unit entries
};

/* Graded free resolution of the width-n component to homological degree
 * max_p. Generators must be homogeneous (NonHomogeneous otherwise). */
WidthResolution width_resolution(const GeneratorSet& gens, const MonomialOrder& order, int width,
                                 int max_p, ResolutionOptions options = {});

/* Betti numbers over a width range, read off minimal resolutions. */
class BettiTable {
 public:
  const std::vector<int>& widths() const { return widths_; }
  long beta(int width, int p, int j) const;
  std::set<int> degree_set(int width, int p) const;  // { j : beta != 0 }
  const std::map<std::tuple<int, int, int>, long>& entries() const { return entries_; }

  void record_width(int width) { widths_.push_back(width); }
  void set(int width, int p, int j, long value);

 private:
  std::vector<int> widths_;
  std::map<std::tuple<int, int, int>, long> entries_;  // nonzero entries only
};

BettiTable betti_table(const GeneratorSet& gens, const MonomialOrder& order,
                       const std::vector<int>& widths, int max_p, ResolutionOptions options = {});

}  // namespace oigb
