#include "oigb/koszul.hpp"

#include <algorithm>

namespace oigb {

std::vector<Polynomial> koszul_images(const Polynomial& element, int width) {
  if (element.is_zero()) throw ZeroInput("Koszul complex of the zero element");
  if (element.width() != 1) throw WidthMismatch("Koszul element must live at width 1");
  std::vector<Polynomial> out;
  out.reserve(static_cast<size_t>(width));
  for (int t = 1; t <= width; ++t)
    out.push_back(apply_morphism(OIMorphism(1, width, {t}), element));
  return out;
}

KoszulComplex::KoszulComplex(Polynomial element, int width)
    : element_(std::move(element)),
      width_(width),
      degree_(element_.homogeneous_degree()),
      images_(koszul_images(element_, width)) {}

int KoszulComplex::element_degree() const {
  if (!degree_) throw NonHomogeneous("Koszul element must be homogeneous for graded use");
  return *degree_;
}

SignaturePtr KoszulComplex::component_signature(int d) const {
  return make_signature(element_.scheme(), {SignatureSlot{d, d * degree_.value_or(0)}});
}

ModuleElement KoszulComplex::differential(int d, const ModuleElement& q) const {
  if (d < 1 || d > width_) throw WidthMismatch("differential index out of range");
  if (q.width() != width_) throw WidthMismatch("element width != complex width");
  SignaturePtr target = component_signature(d - 1);
  ModuleElement out(target, width_, q.field());
  for (const auto& [mono, coeff] : q.terms()) {
    const std::vector<int>& image = mono.basis_map().image();
    for (int j = 1; j <= d; ++j) {
      std::vector<int> rest = image;
      rest.erase(rest.begin() + (j - 1));
      OIMorphism basis(d - 1, width_, std::move(rest));
      ModuleElement part = ModuleElement::from_term(
          target, ModuleMonomial(0, basis, mono.ring()),
          j % 2 == 1 ? coeff : -coeff);
      out = out + part.poly_multiple(images_[static_cast<size_t>(mono.basis_map()(j)) - 1]);
    }
  }
  return out;
}

bool KoszulComplex::complex_property_holds() const {
  Field field = element_.field();
  for (int d = 2; d <= width_; ++d) {
    SignaturePtr sig = component_signature(d);
    for (const OIMorphism& map : enumerate_oi(d, width_)) {
      ModuleElement basis = ModuleElement::basis_element(sig, field, 0, map);
      if (!differential(d - 1, differential(d, basis)).is_zero()) return false;
    }
  }
  return true;
}

long KoszulComplex::rank_of_differential(int d, int degree) const {
  if (d < 1 || d > width_) return 0;
  int k = element_degree();
  std::vector<OIMorphism> rows = enumerate_oi(d - 1, width_);
  std::vector<OIMorphism> cols = enumerate_oi(d, width_);
  Polynomial zero(element_.scheme(), width_, element_.field());
  PolyMatrix matrix(rows.size(), std::vector<Polynomial>(cols.size(), zero));
  for (size_t col = 0; col < cols.size(); ++col) {
    const std::vector<int>& image = cols[col].image();
    for (int j = 1; j <= d; ++j) {
      std::vector<int> rest = image;
      rest.erase(rest.begin() + (j - 1));
      OIMorphism target(d - 1, width_, std::move(rest));
      size_t row = static_cast<size_t>(
          std::lower_bound(rows.begin(), rows.end(), target) - rows.begin());
      const Polynomial& a = images_[static_cast<size_t>(image[static_cast<size_t>(j) - 1]) - 1];
      matrix[row][col] = j % 2 == 1 ? matrix[row][col] + a : matrix[row][col] - a;
    }
  }
  std::vector<int> row_shifts(rows.size(), (d - 1) * k);
  std::vector<int> col_shifts(cols.size(), d * k);
  return graded_block_rank(matrix, row_shifts, col_shifts, element_.scheme(), width_,
                           element_.field(), degree);
}

std::map<std::pair<int, int>, long> KoszulComplex::homology(int max_degree, int max_p) const {
  int k = element_degree();
  std::map<std::pair<int, int>, long> out;
  std::map<std::pair<int, int>, long> ranks;  // (d, j) -> rank, cached
  auto rank = [&](int d, int j) {
    if (d < 1 || d > width_) return 0L;
    auto it = ranks.find({d, j});
    if (it != ranks.end()) return it->second;
    long value = rank_of_differential(d, j);
    ranks[{d, j}] = value;
    return value;
  };
  for (int p = 0; p <= max_p; ++p) {
    if (p > width_) break;
    long components = 1;
    for (int i = 1; i <= p; ++i) components = components * (width_ - i + 1) / i;
    for (int j = 0; j <= max_degree; ++j) {
      long dim = components * monomial_count(element_.scheme(), width_, j - p * k);
      long h = dim - rank(p, j) - rank(p + 1, j);
      if (h != 0) out[{p, j}] = h;
    }
  }
  return out;
}

}  // namespace oigb
