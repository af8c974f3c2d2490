#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "oigb/field.hpp"

namespace oigb {

/* Sparse row over the active field: sorted (column, coefficient) pairs with
 * nonzero coefficients. */
using SparseRow = std::vector<std::pair<size_t, FieldElem>>;

SparseRow sparse_axpy(const SparseRow& a, const FieldElem& c, const SparseRow& b);  // a + c*b

struct EchelonResult {
  size_t rank = 0;
  std::vector<size_t> pivot_columns;  // sorted ascending
};

/* Row echelon form with leftmost-column pivoting; deterministic. The pivot
 * column set equals the set of leading positions of the row space, so with
 * columns pre-sorted descending by a monomial order the pivots name leading
 * monomials. */
class SparseMatrix {
 public:
  SparseMatrix(size_t columns, Field field) : columns_(columns), field_(field) {}

  size_t columns() const { return columns_; }
  size_t row_count() const { return rows_.size(); }

  void add_row(SparseRow row);

  EchelonResult echelon();  // destructive

  size_t rank() { return echelon().rank; }

 private:
  size_t columns_;
  Field field_;
  std::vector<SparseRow> rows_;
};

}  // namespace oigb
