#include "oigb/groebner.hpp"

#include <algorithm>
#include <iostream>

namespace oigb {

GeneratorSet::GeneratorSet(SignaturePtr sig, Field field, std::vector<ModuleElement> gens,
                           GeneratorFlavor flavor)
    : sig_(std::move(sig)), field_(field), flavor_(flavor) {
  std::vector<ModuleElement> expanded;
  for (ModuleElement& g : gens) {
    if (!(*g.signature() == *sig_)) throw SignatureMismatch("generator signature mismatch");
    if (g.field() != field_) throw FieldMismatch("generator field mismatch");
    if (g.is_zero()) {
      std::cerr << "warning: dropping zero generator\n";
      continue;
    }
    if (flavor_ == GeneratorFlavor::OI) {
      expanded.push_back(std::move(g));
      continue;
    }
    for (const FIMorphism& perm : enumerate_fi(g.width(), g.width())) {
      ModuleElement image = apply_morphism(perm, g);
      if (std::find(expanded.begin(), expanded.end(), image) == expanded.end())
        expanded.push_back(std::move(image));
    }
  }
  gens_ = std::move(expanded);
}

int GeneratorSet::max_generator_width() const {
  int width = 0;
  for (const ModuleElement& g : gens_) width = std::max(width, g.width());
  return width;
}

namespace {

struct OIReducer {
  size_t index;
  ModDivWitness witness;
};

std::optional<OIReducer> find_oi_reducer(const ModuleMonomial& mono,
                                         const std::vector<ModuleElement>& basis,
                                         const MonomialOrder& order) {
  for (size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].is_zero() || basis[k].width() > mono.width()) continue;
    if (auto witness = oi_divides(leading_monomial(basis[k], order), mono))
      return OIReducer{k, *witness};
  }
  return std::nullopt;
}

}  // namespace

std::optional<ModuleElement> reduce_step(const ModuleElement& q,
                                         const std::vector<ModuleElement>& basis,
                                         const MonomialOrder& order) {
  if (q.is_zero()) throw ZeroInput("reduce_step of zero");
  const ModuleMonomial& lm = leading_monomial(q, order);
  auto reducer = find_oi_reducer(lm, basis, order);
  if (!reducer) return std::nullopt;
  const ModuleElement& b = basis[reducer->index];
  FieldElem factor = leading_coeff(q, order) / leading_coeff(b, order);
  ModuleElement image = apply_morphism(reducer->witness.map, b);
  return q - image.mono_multiple(reducer->witness.cofactor).scaled(factor);
}

ModuleElement normal_form(const ModuleElement& q, const std::vector<ModuleElement>& basis,
                          const MonomialOrder& order) {
  ModuleElement remainder(q.signature(), q.width(), q.field());
  ModuleElement work = q;
  while (!work.is_zero()) {
    if (auto reduced = reduce_step(work, basis, order)) {
      work = std::move(*reduced);
      continue;
    }
    const ModuleMonomial lm = leading_monomial(work, order);
    const FieldElem lc = leading_coeff(work, order);
    remainder.add_term(lm, lc);
    ModuleElement head(q.signature(), q.width(), q.field());
    head.add_term(lm, lc);
    work = work - head;
  }
  return remainder;
}

std::vector<ModuleElement> classical_buchberger_width(const GeneratorSet& gens,
                                                      const MonomialOrder& order, int width) {
  std::vector<ModuleElement> images;
  for (const ModuleElement& g : gens.generators()) {
    if (g.width() > width) continue;
    for (const OIMorphism& map : enumerate_oi(g.width(), width))
      images.push_back(apply_morphism(map, g));
  }
  return classical_buchberger(images, order);
}

namespace {

/* Keep the candidate set interreduced: leading monomials form an antichain
 * under OI-divisibility and every tail is fully reduced. */
void auto_reduce(std::vector<ModuleElement>& basis, const MonomialOrder& order) {
  std::sort(basis.begin(), basis.end(), [&](const ModuleElement& a, const ModuleElement& b) {
    Cmp c = order.compare(leading_monomial(a, order), leading_monomial(b, order));
    if (c != Cmp::Equal) return c == Cmp::Less;
    return a.width() < b.width();
  });
  std::vector<ModuleElement> minimal;
  for (const ModuleElement& g : basis) {
    const ModuleMonomial& lm = leading_monomial(g, order);
    bool redundant = false;
    for (const ModuleElement& kept : minimal)
      if (oi_divides(leading_monomial(kept, order), lm)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(g);
  }
  std::vector<ModuleElement> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ModuleElement> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    ModuleElement r = normal_form(minimal[i], others, order);
    if (!r.is_zero()) reduced.push_back(make_monic(r, order));
  }
  basis = std::move(reduced);
}

}  // namespace

EquivariantGB equivariant_buchberger(const GeneratorSet& gens, const MonomialOrder& order,
                                     EquivariantConfig cfg) {
  EquivariantGB result;
  result.order_name = order.name();
  result.cert.lookahead = cfg.lookahead;

  if (gens.generators().empty()) {
    result.cert.status = CertStatus::HeuristicallyCertified;
    result.cert.certified_width = cfg.max_width;
    return result;
  }

  int start = gens.generators().front().width();
  for (const ModuleElement& g : gens.generators()) start = std::min(start, g.width());
  int max_gen_width = gens.max_generator_width();

  int last_new_width = max_gen_width;  // certification cannot predate the generators
  int width = start;
  for (; width <= cfg.max_width; ++width) {
    bool added = false;
    for (const ModuleElement& h : classical_buchberger_width(gens, order, width)) {
      ModuleElement r = normal_form(h, result.basis, order);
      if (r.is_zero()) continue;
      result.basis.push_back(make_monic(r, order));
      auto_reduce(result.basis, order);
      added = true;
    }
    if (added) last_new_width = std::max(last_new_width, width);
    if (width >= max_gen_width && width - last_new_width >= cfg.lookahead) {
      result.cert.status = CertStatus::HeuristicallyCertified;
      result.cert.certified_width = width;
      return result;
    }
  }
  result.cert.status = CertStatus::WidthLimited;
  result.cert.certified_width = cfg.max_width;
  return result;
}

bool is_groebner(const std::vector<ModuleElement>& candidate, const GeneratorSet& gens,
                 const MonomialOrder& order, const std::vector<int>& widths) {
  for (int width : widths)
    for (const ModuleElement& h : classical_buchberger_width(gens, order, width))
      if (!normal_form(h, candidate, order).is_zero()) return false;
  return true;
}

bool membership(const ModuleElement& q, const GeneratorSet& gens, const MonomialOrder& order,
                EquivariantConfig cfg) {
  EquivariantGB gb = equivariant_buchberger(gens, order, cfg);
  if (gb.cert.status != CertStatus::HeuristicallyCertified ||
      q.width() > gb.cert.certified_width)
    throw UncertifiedWidth("membership query at width " + std::to_string(q.width()) +
                           " not covered by certification");
  return normal_form(q, gb.basis, order).is_zero();
}

}  // namespace oigb
