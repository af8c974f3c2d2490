#include "oigb/linalg.hpp"

#include <algorithm>
#include <map>

#include "oigb/errors.hpp"

namespace oigb {

SparseRow sparse_axpy(const SparseRow& a, const FieldElem& c, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->first < ia->first) {
      FieldElem v = c * ib->second;
      if (!v.is_zero()) out.emplace_back(ib->first, v);
      ++ib;
    } else {
      FieldElem v = ia->second + c * ib->second;
      if (!v.is_zero()) out.emplace_back(ia->first, v);
      ++ia, ++ib;
    }
  }
  return out;
}

void SparseMatrix::add_row(SparseRow row) {
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 0; i < row.size(); ++i) {
    if (row[i].first >= columns_) throw ParameterMismatch("sparse row column out of range");
    if (i > 0 && row[i].first == row[i - 1].first)
      throw ParameterMismatch("duplicate column in sparse row");
    if (row[i].second.is_zero()) throw ParameterMismatch("zero entry in sparse row");
  }
  if (!row.empty()) rows_.push_back(std::move(row));
}

EchelonResult SparseMatrix::echelon() {
  EchelonResult result;
  std::map<size_t, std::vector<SparseRow>> by_lead;
  for (SparseRow& row : rows_)
    if (!row.empty()) by_lead[row.front().first].push_back(std::move(row));
  rows_.clear();

  while (!by_lead.empty()) {
    auto it = by_lead.begin();
    size_t col = it->first;
    std::vector<SparseRow> bucket = std::move(it->second);
    by_lead.erase(it);
    SparseRow pivot = std::move(bucket.front());
    for (size_t i = 1; i < bucket.size(); ++i) {
      FieldElem factor = -(bucket[i].front().second / pivot.front().second);
      SparseRow reduced = sparse_axpy(bucket[i], factor, pivot);
      if (!reduced.empty()) by_lead[reduced.front().first].push_back(std::move(reduced));
    }
    result.pivot_columns.push_back(col);
    rows_.push_back(std::move(pivot));
  }
  result.rank = result.pivot_columns.size();
  return result;
}

}  // namespace oigb
