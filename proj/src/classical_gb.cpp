#include "oigb/classical_gb.hpp"

#include <algorithm>
#include <set>

namespace oigb {

namespace {

size_t leading_index(const ModuleElement& elem, const MonomialOrder& order) {
  if (elem.is_zero()) throw ZeroInput("leading term of zero");
  size_t best = 0;
  for (size_t i = 1; i < elem.terms().size(); ++i)
    if (order.greater(elem.terms()[i].first, elem.terms()[best].first)) best = i;
  return best;
}

bool classically_divides(const ModuleMonomial& divisor, const ModuleMonomial& target) {
  return divisor.slot() == target.slot() && divisor.basis_map() == target.basis_map() &&
         divisor.ring().divides(target.ring());
}

}  // namespace

const ModuleMonomial& leading_monomial(const ModuleElement& elem, const MonomialOrder& order) {
  return elem.terms()[leading_index(elem, order)].first;
}

const FieldElem& leading_coeff(const ModuleElement& elem, const MonomialOrder& order) {
  return elem.terms()[leading_index(elem, order)].second;
}

ModuleElement make_monic(const ModuleElement& elem, const MonomialOrder& order) {
  return elem.scaled(leading_coeff(elem, order).inverse());
}

ModuleElement classical_normal_form(const ModuleElement& q,
                                    const std::vector<ModuleElement>& divisors,
                                    const MonomialOrder& order,
                                    std::vector<Polynomial>* quotients) {
  if (quotients) {
    quotients->assign(divisors.size(),
                      Polynomial(q.signature()->scheme(), q.width(), q.field()));
  }
  ModuleElement remainder(q.signature(), q.width(), q.field());
  ModuleElement work = q;
  while (!work.is_zero()) {
    size_t lead = leading_index(work, order);
    const ModuleMonomial& mono = work.terms()[lead].first;
    const FieldElem& coeff = work.terms()[lead].second;
    bool reduced = false;
    for (size_t k = 0; k < divisors.size(); ++k) {
      const ModuleElement& div = divisors[k];
      if (div.is_zero() || div.width() != work.width()) continue;
      const ModuleMonomial& div_lm = leading_monomial(div, order);
      if (!classically_divides(div_lm, mono)) continue;
      RingMonomial cof = mono.ring().divide_by(div_lm.ring());
      FieldElem factor = coeff / leading_coeff(div, order);
      work = work - div.mono_multiple(cof).scaled(factor);
      if (quotients) (*quotients)[k].add_term(cof, factor);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(mono, coeff);
      ModuleElement head(q.signature(), q.width(), q.field());
      head.add_term(mono, coeff);
      work = work - head;
    }
  }
  return remainder;
}

namespace {

struct PairKey {
  int lcm_degree;
  ModuleMonomial lcm;
  size_t i, j;
};

struct PairKeyLess {
  const MonomialOrder* order;
  bool operator()(const PairKey& a, const PairKey& b) const {
    if (a.lcm_degree != b.lcm_degree) return a.lcm_degree < b.lcm_degree;
    Cmp c = order->compare(a.lcm, b.lcm);
    if (c != Cmp::Equal) return c == Cmp::Less;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

std::optional<PairKey> make_pair_key(const std::vector<ModuleElement>& basis, size_t i, size_t j,
                                     const MonomialOrder& order) {
  const ModuleMonomial& a = leading_monomial(basis[i], order);
  const ModuleMonomial& b = leading_monomial(basis[j], order);
  if (a.slot() != b.slot() || a.basis_map() != b.basis_map()) return std::nullopt;
  RingMonomial lcm = RingMonomial::lcm(a.ring(), b.ring());
  return PairKey{lcm.total_degree(), ModuleMonomial(a.slot(), a.basis_map(), lcm), i, j};
}

ModuleElement s_pair(const ModuleElement& f, const ModuleElement& g, const ModuleMonomial& lcm,
                     const MonomialOrder& order) {
  const ModuleMonomial& lf = leading_monomial(f, order);
  const ModuleMonomial& lg = leading_monomial(g, order);
  ModuleElement left = f.mono_multiple(lcm.ring().divide_by(lf.ring()))
                           .scaled(leading_coeff(f, order).inverse());
  ModuleElement right = g.mono_multiple(lcm.ring().divide_by(lg.ring()))
                            .scaled(leading_coeff(g, order).inverse());
  return left - right;
}

}  // namespace

std::vector<ModuleElement> classical_buchberger(const std::vector<ModuleElement>& gens,
                                                const MonomialOrder& order) {
  std::vector<ModuleElement> basis;
  std::set<PairKey, PairKeyLess> queue{PairKeyLess{&order}};

  auto insert_element = [&](const ModuleElement& elem) {
    ModuleElement monic = make_monic(elem, order);
    size_t index = basis.size();
    basis.push_back(std::move(monic));
    for (size_t i = 0; i < index; ++i)
      if (auto key = make_pair_key(basis, i, index, order)) queue.insert(*key);
  };

  for (const ModuleElement& g : gens)
    if (!g.is_zero()) insert_element(g);

  while (!queue.empty()) {
    PairKey key = *queue.begin();
    queue.erase(queue.begin());
    ModuleElement s = s_pair(basis[key.i], basis[key.j], key.lcm, order);
    if (s.is_zero()) continue;
    ModuleElement r = classical_normal_form(s, basis, order);
    if (!r.is_zero()) insert_element(r);
  }

  // minimal set: drop elements whose leading monomial another one divides
  std::vector<size_t> by_lm(basis.size());
  for (size_t i = 0; i < by_lm.size(); ++i) by_lm[i] = i;
  std::sort(by_lm.begin(), by_lm.end(), [&](size_t a, size_t b) {
    Cmp c = order.compare(leading_monomial(basis[a], order), leading_monomial(basis[b], order));
    if (c != Cmp::Equal) return c == Cmp::Less;
    return a < b;
  });
  std::vector<ModuleElement> minimal;
  for (size_t idx : by_lm) {
    const ModuleMonomial& lm = leading_monomial(basis[idx], order);
    bool redundant = false;
    for (const ModuleElement& kept : minimal)
      if (classically_divides(leading_monomial(kept, order), lm)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(basis[idx]);
  }

  // tail reduction to the reduced basis
  std::vector<ModuleElement> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<ModuleElement> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(classical_normal_form(minimal[i], others, order));
  }
  return reduced;
}

SyzygyResult schreyer_syzygies(const std::vector<ModuleElement>& gb, const MonomialOrder& order) {
  if (gb.empty()) throw ZeroInput("syzygies of an empty basis");
  const ModuleElement& first = gb.front();
  std::vector<SignatureSlot> slots;
  for (const ModuleElement& g : gb) {
    auto deg = g.homogeneous_degree();
    if (!deg) throw NonHomogeneous("syzygy computation needs homogeneous input");
    slots.push_back(SignatureSlot{0, *deg});
  }
  SignaturePtr sig = make_signature(first.signature()->scheme(), std::move(slots));
  int width = first.width();
  const Field& field = first.field();
  OIMorphism empty_map(0, width, {});

  SyzygyResult result{sig, {}};
  for (size_t i = 0; i < gb.size(); ++i) {
    for (size_t j = i + 1; j < gb.size(); ++j) {
      auto key = make_pair_key(gb, i, j, order);
      if (!key) continue;
      ModuleElement s = s_pair(gb[i], gb[j], key->lcm, order);
      std::vector<Polynomial> quotients;
      ModuleElement r = s.is_zero() ? s : classical_normal_form(s, gb, order, &quotients);
      if (!r.is_zero()) throw ParameterMismatch("input to Schreyer step is not a Groebner basis");
      if (quotients.empty())
        quotients.assign(gb.size(), Polynomial(first.signature()->scheme(), width, field));

      ModuleElement syz(sig, width, field);
      const RingMonomial& lcm_ring = key->lcm.ring();
      RingMonomial mi = lcm_ring.divide_by(leading_monomial(gb[i], order).ring());
      RingMonomial mj = lcm_ring.divide_by(leading_monomial(gb[j], order).ring());
      syz.add_term(ModuleMonomial(i, empty_map, mi),
                   leading_coeff(gb[i], order).inverse());
      syz.add_term(ModuleMonomial(j, empty_map, mj),
                   -leading_coeff(gb[j], order).inverse());
      for (size_t k = 0; k < gb.size(); ++k)
        for (const auto& [mono, coeff] : quotients[k].terms())
          syz.add_term(ModuleMonomial(k, empty_map, mono), -coeff);
      if (!syz.is_zero()) result.generators.push_back(std::move(syz));
    }
  }
  return result;
}

}  // namespace oigb
