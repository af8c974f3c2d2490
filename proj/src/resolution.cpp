#include "oigb/resolution.hpp"

#include <algorithm>

namespace oigb {

long monomial_count(const VariableScheme& scheme, int width, int degree) {
  if (degree < 0) return 0;
  long vars = scheme.variable_count(width);
  if (vars == 0) return degree == 0 ? 1 : 0;
  // C(degree + vars - 1, vars - 1)
  long count = 1;
  for (long i = 1; i <= vars - 1; ++i) count = count * (degree + i) / i;
  return count;
}

namespace {

bool is_unit_entry(const Polynomial& p) {
  return p.terms().size() == 1 && p.terms().begin()->first.is_unit();
}

Polynomial zero_poly(const VariableScheme& scheme, int width, const Field& field) {
  return Polynomial(scheme, width, field);
}

/* Flat basis of a signature's width-n component: (slot, basis map) pairs in
 * slot-major, lex-on-image order. */
struct FlatBasis {
  std::vector<std::pair<size_t, OIMorphism>> symbols;
  std::vector<int> shifts;

  size_t index_of(const ModuleMonomial& mono) const {
    for (size_t i = 0; i < symbols.size(); ++i)
      if (symbols[i].first == mono.slot() && symbols[i].second == mono.basis_map()) return i;
    throw SignatureMismatch("module monomial outside the flat basis");
  }
};

FlatBasis flatten(const FreeSignature& sig, int width) {
  FlatBasis flat;
  for (size_t slot = 0; slot < sig.size(); ++slot) {
    for (const OIMorphism& map : enumerate_oi(sig.slot(slot).basis_degree, width)) {
      flat.symbols.emplace_back(slot, map);
      flat.shifts.push_back(sig.slot(slot).shift);
    }
  }
  return flat;
}

PolyMatrix coordinates(const std::vector<ModuleElement>& columns, const FlatBasis& basis,
                       const VariableScheme& scheme, int width, const Field& field) {
  PolyMatrix matrix(basis.symbols.size(),
                    std::vector<Polynomial>(columns.size(), zero_poly(scheme, width, field)));
  for (size_t col = 0; col < columns.size(); ++col)
    for (const auto& [mono, coeff] : columns[col].terms())
      matrix[basis.index_of(mono)][col].add_term(mono.ring(), coeff);
  return matrix;
}

std::vector<int> element_degrees(const std::vector<ModuleElement>& elems) {
  std::vector<int> degrees;
  for (const ModuleElement& e : elems) {
    auto deg = e.homogeneous_degree();
    if (!deg) throw NonHomogeneous("resolution needs homogeneous generators");
    degrees.push_back(*deg);
  }
  return degrees;
}

void erase_row(PolyMatrix& m, size_t row) { m.erase(m.begin() + static_cast<long>(row)); }

void erase_col(PolyMatrix& m, size_t col) {
  for (auto& row : m) row.erase(row.begin() + static_cast<long>(col));
}

}  // namespace

WidthResolution width_resolution_impl(const GeneratorSet& gens, const MonomialOrder& order,
                                      int width, int max_p, bool quotient, bool minimalize) {
  const VariableScheme scheme = gens.signature()->scheme();
  const Field field = gens.field();
  WidthResolution res(scheme, field, width, quotient);

  for (const ModuleElement& g : gens.generators())
    if (!g.homogeneous_degree()) throw NonHomogeneous("resolution needs homogeneous generators");

  std::vector<ModuleElement> gb = classical_buchberger_width(gens, order, width);

  if (quotient) {
    FlatBasis ambient = flatten(*gens.signature(), width);
    res.shifts_.push_back(ambient.shifts);
    if (gb.empty()) return res;
    res.diffs_.push_back(coordinates(gb, ambient, scheme, width, field));
    res.shifts_.push_back(element_degrees(gb));
  } else {
    res.shifts_.push_back(element_degrees(gb));
    if (gb.empty()) return res;
  }

  // build one level past max_p so that minimalization can see the witnesses
  // of non-minimal generators at the top level
  while (res.length() < max_p + 1) {
    SyzygyResult syz = schreyer_syzygies(gb, order);
    std::vector<ModuleElement> next = classical_buchberger(syz.generators, order);
    if (next.empty()) break;
    FlatBasis basis = flatten(*syz.signature, width);
    res.diffs_.push_back(coordinates(next, basis, scheme, width, field));
    res.shifts_.push_back(element_degrees(next));
    gb = std::move(next);
  }

  if (minimalize) res.prune();

  while (res.length() > max_p) {
    res.shifts_.pop_back();
    res.diffs_.pop_back();
  }
  return res;
}

WidthResolution width_resolution(const GeneratorSet& gens, const MonomialOrder& order, int width,
                                 int max_p, ResolutionOptions options) {
  if (max_p < 0) throw ParameterMismatch("max_p must be >= 0");
  return width_resolution_impl(gens, order, width, max_p, options.quotient, options.minimalize);
}

void WidthResolution::prune() {
  for (size_t k = 0; k < diffs_.size(); ++k) {
    while (true) {
      PolyMatrix& d = diffs_[k];
      size_t unit_row = 0, unit_col = 0;
      bool found = false;
      for (size_t i = 0; i < d.size() && !found; ++i)
        for (size_t j = 0; j < (d.empty() ? 0 : d[i].size()) && !found; ++j)
          if (is_unit_entry(d[i][j])) {
            unit_row = i;
            unit_col = j;
            found = true;
          }
      if (!found) break;

      FieldElem unit = d[unit_row][unit_col].terms().begin()->second;
      FieldElem unit_inv = unit.inverse();
      size_t rows = d.size(), cols = d[0].size();

      // clear row unit_row: col_k += (-entry/u) * col_unit_col
      for (size_t col = 0; col < cols; ++col) {
        if (col == unit_col || d[unit_row][col].is_zero()) continue;
        Polynomial c = d[unit_row][col].scaled(unit_inv);
        for (size_t i = 0; i < rows; ++i)
          d[i][col] = d[i][col] - c * d[i][unit_col];
        if (k + 1 < diffs_.size()) {
          PolyMatrix& up = diffs_[k + 1];
          for (size_t j = 0; j < up[unit_col].size(); ++j)
            up[unit_col][j] = up[unit_col][j] + c * up[col][j];
        }
      }
      // clear column unit_col: row_l += (-entry/u) * row_unit_row
      for (size_t row = 0; row < rows; ++row) {
        if (row == unit_row || d[row][unit_col].is_zero()) continue;
        Polynomial b = d[row][unit_col].scaled(unit_inv);
        for (size_t col = 0; col < cols; ++col)
          d[row][col] = d[row][col] - b * d[unit_row][col];
        if (k >= 1) {
          PolyMatrix& down = diffs_[k - 1];
          for (size_t i = 0; i < down.size(); ++i)
            down[i][unit_row] = down[i][unit_row] + b * down[i][row];
        }
      }

      erase_row(d, unit_row);
      erase_col(d, unit_col);
      shifts_[k].erase(shifts_[k].begin() + static_cast<long>(unit_row));
      shifts_[k + 1].erase(shifts_[k + 1].begin() + static_cast<long>(unit_col));
      if (k >= 1) erase_col(diffs_[k - 1], unit_row);
      if (k + 1 < diffs_.size()) erase_row(diffs_[k + 1], unit_col);
    }
  }
  // drop empty trailing levels created by pruning
  while (shifts_.size() > 1 && shifts_.back().empty()) {
    shifts_.pop_back();
    if (!diffs_.empty()) diffs_.pop_back();
  }
  minimalized_ = true;
}

bool WidthResolution::composes_to_zero() const {
  for (size_t k = 0; k + 1 < diffs_.size(); ++k) {
    const PolyMatrix& a = diffs_[k];      // F_{k+1} -> F_k
    const PolyMatrix& b = diffs_[k + 1];  // F_{k+2} -> F_{k+1}
    if (a.empty() || b.empty()) continue;
    for (size_t i = 0; i < a.size(); ++i) {
      for (size_t j = 0; j < b[0].size(); ++j) {
        Polynomial sum = zero_poly(scheme_, width_, field_);
        for (size_t m = 0; m < b.size(); ++m) sum = sum + a[i][m] * b[m][j];
        if (!sum.is_zero()) return false;
      }
    }
  }
  return true;
}

bool WidthResolution::has_unit_entries() const {
  for (const PolyMatrix& d : diffs_)
    for (const auto& row : d)
      for (const Polynomial& entry : row)
        if (is_unit_entry(entry)) return true;
  return false;
}

std::map<std::pair<int, int>, long> WidthResolution::betti() const {
  std::map<std::pair<int, int>, long> out;
  for (size_t p = 0; p < shifts_.size(); ++p)
    for (int shift : shifts_[p]) ++out[{static_cast<int>(p), shift}];
  return out;
}

long graded_block_rank(const PolyMatrix& matrix, const std::vector<int>& row_shifts,
                       const std::vector<int>& col_shifts, const VariableScheme& scheme,
                       int width, const Field& field, int degree) {
  if (matrix.empty() || matrix[0].empty()) return 0;

  // flat index space of the target in this internal degree
  std::vector<size_t> row_offset(row_shifts.size() + 1, 0);
  std::vector<std::map<RingMonomial, size_t>> row_monos(row_shifts.size());
  for (size_t i = 0; i < row_shifts.size(); ++i) {
    size_t count = 0;
    for (const RingMonomial& mono : monomials_of_degree(scheme, width, degree - row_shifts[i]))
      row_monos[i].emplace(mono, count++);
    row_offset[i + 1] = row_offset[i] + count;
  }

  SparseMatrix block(row_offset.back(), field);
  for (size_t col = 0; col < matrix[0].size(); ++col) {
    for (const RingMonomial& w : monomials_of_degree(scheme, width, degree - col_shifts[col])) {
      SparseRow row;
      for (size_t i = 0; i < row_shifts.size(); ++i) {
        if (matrix[i][col].is_zero()) continue;
        for (const auto& [mono, coeff] : matrix[i][col].terms()) {
          RingMonomial product = mono * w;
          auto it = row_monos[i].find(product);
          if (it == row_monos[i].end()) throw NonHomogeneous("inhomogeneous matrix entry");
          row.emplace_back(row_offset[i] + it->second, coeff);
        }
      }
      block.add_row(std::move(row));
    }
  }
  return static_cast<long>(block.rank());
}

long WidthResolution::block_rank(size_t diff_index, int degree) const {
  if (diff_index >= diffs_.size()) return 0;
  return graded_block_rank(diffs_[diff_index], shifts_[diff_index], shifts_[diff_index + 1],
                           scheme_, width_, field_, degree);
}

long WidthResolution::homology_dim(int p, int j) const {
  if (p < 0) throw ParameterMismatch("negative homological degree");
  long dim_p = 0;
  if (p <= length())
    for (int shift : shifts_[static_cast<size_t>(p)])
      dim_p += monomial_count(scheme_, width_, j - shift);
  long rank_in = p >= 1 ? block_rank(static_cast<size_t>(p) - 1, j) : 0;
  long rank_out = block_rank(static_cast<size_t>(p), j);
  return dim_p - rank_in - rank_out;
}

long BettiTable::beta(int width, int p, int j) const {
  auto it = entries_.find({width, p, j});
  return it == entries_.end() ? 0 : it->second;
}

std::set<int> BettiTable::degree_set(int width, int p) const {
  std::set<int> out;
  for (const auto& [key, value] : entries_) {
    auto [n, hp, j] = key;
    if (n == width && hp == p && value != 0) out.insert(j);
  }
  return out;
}

void BettiTable::set(int width, int p, int j, long value) {
  if (value != 0) entries_[{width, p, j}] = value;
}

BettiTable betti_table(const GeneratorSet& gens, const MonomialOrder& order,
                       const std::vector<int>& widths, int max_p, ResolutionOptions options) {
  BettiTable table;
  for (int width : widths) {
    WidthResolution res = width_resolution(gens, order, width, max_p, options);
    table.record_width(width);
    for (const auto& [key, count] : res.betti()) {
      auto [p, j] = key;
      if (p <= max_p) table.set(width, p, j, count);
    }
  }
  return table;
}

}  // namespace oigb
