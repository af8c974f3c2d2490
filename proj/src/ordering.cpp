#include "oigb/ordering.hpp"

#include <algorithm>
#include <functional>

namespace oigb {

namespace {

int sgn(int v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

Cmp from_three_way(std::strong_ordering c) {
  if (c == std::strong_ordering::less) return Cmp::Less;
  if (c == std::strong_ordering::greater) return Cmp::Greater;
  return Cmp::Equal;
}

/* Basis symbols compare by lex on (width, image...); bigger vector, bigger
 * symbol. Ties broken by slot, smaller slot index on top. */
Cmp compare_basis(const ModuleMonomial& a, const ModuleMonomial& b) {
  std::vector<int> va{a.width()}, vb{b.width()};
  va.insert(va.end(), a.basis_map().image().begin(), a.basis_map().image().end());
  vb.insert(vb.end(), b.basis_map().image().begin(), b.basis_map().image().end());
  if (auto c = from_three_way(va <=> vb); c != Cmp::Equal) return c;
  if (a.slot() != b.slot()) return a.slot() < b.slot() ? Cmp::Greater : Cmp::Less;
  return Cmp::Equal;
}

/* Plain lex on exponent lists; the canonically smallest key is the most
 * significant variable. */
Cmp compare_ring_lex(const RingMonomial& a, const RingMonomial& b) {
  auto ia = a.factors().begin(), ib = b.factors().begin();
  while (ia != a.factors().end() || ib != b.factors().end()) {
    if (ib == b.factors().end()) return Cmp::Greater;
    if (ia == a.factors().end()) return Cmp::Less;
    if (ia->first < ib->first) return Cmp::Greater;  // a holds a more significant variable
    if (ib->first < ia->first) return Cmp::Less;
    if (ia->second != ib->second) return ia->second > ib->second ? Cmp::Greater : Cmp::Less;
    ++ia, ++ib;
  }
  return Cmp::Equal;
}

class PaperLexOrder final : public MonomialOrder {
 public:
  PaperLexOrder() : MonomialOrder("paper_lex") {}
  Cmp compare(const ModuleMonomial& a, const ModuleMonomial& b) const override {
    if (Cmp c = compare_basis(a, b); c != Cmp::Equal) return c;
    return compare_ring_lex(a.ring(), b.ring());
  }
};

class PaperGrlexOrder final : public MonomialOrder {
 public:
  PaperGrlexOrder() : MonomialOrder("paper_grlex") {}
  Cmp compare(const ModuleMonomial& a, const ModuleMonomial& b) const override {
    if (Cmp c = compare_basis(a, b); c != Cmp::Equal) return c;
    int da = a.ring().total_degree(), db = b.ring().total_degree();
    if (da != db) return da > db ? Cmp::Greater : Cmp::Less;
    return compare_ring_lex(a.ring(), b.ring());
  }
};

}  // namespace

OrderPtr make_order(const std::string& name) {
  if (name == "paper_lex") return std::make_shared<PaperLexOrder>();
  if (name == "paper_grlex") return std::make_shared<PaperGrlexOrder>();
  throw ParseError("unknown monomial order: " + name);
}

std::vector<std::string> order_names() { return {"paper_lex", "paper_grlex"}; }

Cmp compare_checked(const MonomialOrder& order, const FreeSignature& sig_a,
                    const ModuleMonomial& a, const FreeSignature& sig_b,
                    const ModuleMonomial& b) {
  if (!(sig_a == sig_b)) throw SignatureMismatch("compare across signatures");
  if (a.slot() >= sig_a.size() || b.slot() >= sig_b.size())
    throw SignatureMismatch("slot out of range");
  return order.compare(a, b);
}

namespace {

/* Enumerate every map with image pinned on im(pi) by rho, choosing the gap
 * values in lex order. Returns true once visit returns true. */
bool for_each_pinned_map(const OIMorphism& pi, const OIMorphism& rho, int source_width,
                         int target_width,
                         const std::function<bool(const OIMorphism&)>& visit) {
  int d = pi.source_width();
  // block boundaries: positions (lo, hi] between pinned positions, values likewise
  std::vector<std::pair<int, int>> pos_blocks, val_blocks;
  int prev_pos = 0, prev_val = 0;
  for (int j = 1; j <= d; ++j) {
    pos_blocks.emplace_back(prev_pos, pi(j) - 1);
    val_blocks.emplace_back(prev_val, rho(j) - 1);
    prev_pos = pi(j);
    prev_val = rho(j);
  }
  pos_blocks.emplace_back(prev_pos, source_width);
  val_blocks.emplace_back(prev_val, target_width);

  std::vector<int> image(static_cast<size_t>(source_width), 0);
  for (int j = 1; j <= d; ++j) image[static_cast<size_t>(pi(j)) - 1] = rho(j);

  auto rec = [&](auto&& self, size_t block) -> bool {
    if (block == pos_blocks.size()) {
      return visit(OIMorphism(source_width, target_width, image));
    }
    auto [plo, phi] = pos_blocks[block];
    auto [vlo, vhi] = val_blocks[block];
    int count = phi - plo;
    if (count == 0) return self(self, block + 1);
    if (vhi - vlo < count) return false;
    std::vector<int> pick(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) pick[static_cast<size_t>(i)] = vlo + 1 + i;
    while (true) {
      for (int i = 0; i < count; ++i)
        image[static_cast<size_t>(plo + i)] = pick[static_cast<size_t>(i)];
      if (self(self, block + 1)) return true;
      int i = count - 1;
      while (i >= 0 && pick[static_cast<size_t>(i)] == vhi - (count - 1 - i)) --i;
      if (i < 0) break;
      ++pick[static_cast<size_t>(i)];
      for (int k = i + 1; k < count; ++k)
        pick[static_cast<size_t>(k)] = pick[static_cast<size_t>(k - 1)] + 1;
    }
    return false;
  };
  return rec(rec, 0);
}

std::vector<ModDivWitness> module_witnesses(const ModuleMonomial& divisor,
                                            const ModuleMonomial& target, bool first_only) {
  std::vector<ModDivWitness> out;
  if (divisor.slot() != target.slot()) return out;
  if (divisor.basis_map().source_width() != target.basis_map().source_width()) return out;
  if (divisor.width() > target.width()) return out;
  if (divisor.ring().scheme() != target.ring().scheme())
    throw SchemeMismatch("module divisibility across schemes");
  for_each_pinned_map(divisor.basis_map(), target.basis_map(), divisor.width(), target.width(),
                      [&](const OIMorphism& map) {
                        RingMonomial image = apply_morphism(map, divisor.ring());
                        if (image.divides(target.ring())) {
                          out.push_back(ModDivWitness{map, target.ring().divide_by(image)});
                          return first_only;
                        }
                        return false;
                      });
  return out;
}

}  // namespace

std::optional<ModDivWitness> oi_divides(const ModuleMonomial& divisor,
                                        const ModuleMonomial& target) {
  auto found = module_witnesses(divisor, target, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<ModDivWitness> oi_divides_all(const ModuleMonomial& divisor,
                                          const ModuleMonomial& target) {
  return module_witnesses(divisor, target, false);
}

HigmanCode::HigmanCode(int rows, int basis_degree, std::vector<Entry> entries)
    : rows_(rows), basis_degree_(basis_degree), entries_(std::move(entries)) {
  for (const Entry& entry : entries_) {
    if (static_cast<int>(entry.size()) != basis_degree_ + 1)
      throw ParameterMismatch("Higman entry arity != d+1");
    for (const Pair& pair : entry)
      if (static_cast<int>(pair.exps.size()) != rows_)
        throw ParameterMismatch("Higman exponent block arity != c");
  }
}

HigmanCode encode_higman(const ModuleMonomial& mono) {
  const VariableScheme& scheme = mono.ring().scheme();
  if (scheme.kind() != VariableScheme::Kind::Tensor)
    throw SchemeMismatch("Higman encoding is defined on the tensor scheme");
  int c = scheme.rows();
  int m = mono.width();
  int d = mono.basis_map().source_width();

  auto column = [&](int j) {
    std::vector<int> exps(static_cast<size_t>(c), 0);
    for (int i = 1; i <= c; ++i) exps[static_cast<size_t>(i) - 1] = mono.ring().exponent(VarKey{{i, j}});
    return exps;
  };

  HigmanCode::Entry tail;
  for (int j = 1; j <= d; ++j)
    tail.push_back(HigmanCode::Pair{column(mono.basis_map()(j)), mono.basis_map()(j)});

  std::vector<HigmanCode::Entry> entries;
  entries.reserve(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) {
    HigmanCode::Entry entry{HigmanCode::Pair{column(i), i}};
    entry.insert(entry.end(), tail.begin(), tail.end());
    entries.push_back(std::move(entry));
  }
  return HigmanCode(c, d, std::move(entries));
}

namespace {

bool entry_leq(const HigmanCode::Entry& a, const HigmanCode::Entry& b) {
  for (size_t k = 0; k < a.size(); ++k)
    for (size_t i = 0; i < a[k].exps.size(); ++i)
      if (a[k].exps[i] > b[k].exps[i]) return false;
  for (size_t k = 1; k < a.size(); ++k)
    if (sgn(a[k].pos - a[0].pos) != sgn(b[k].pos - b[0].pos)) return false;
  return true;
}

void check_params(const HigmanCode& a, const HigmanCode& b) {
  if (a.rows() != b.rows() || a.basis_degree() != b.basis_degree())
    throw ParameterMismatch("Higman codes built over different (c, d)");
}

}  // namespace

bool higman_leq(const HigmanCode& a, const HigmanCode& b) {
  check_params(a, b);
  size_t j = 0;
  for (const HigmanCode::Entry& entry : a.entries()) {
    while (j < b.entries().size() && !entry_leq(entry, b.entries()[j])) ++j;
    if (j == b.entries().size()) return false;
    ++j;
  }
  return true;
}

bool higman_leq_dp(const HigmanCode& a, const HigmanCode& b) {
  check_params(a, b);
  size_t p = a.entries().size(), q = b.entries().size();
  // best[i] = least j such that a[0..i) embeds into b[0..j)
  size_t best = 0;
  for (size_t i = 0; i < p; ++i) {
    size_t j = best;
    while (j < q && !entry_leq(a.entries()[i], b.entries()[j])) ++j;
    if (j == q) return false;
    best = j + 1;
  }
  return true;
}

std::vector<ModuleMonomial> minimal_elements(const std::vector<ModuleMonomial>& monomials) {
  std::vector<ModuleMonomial> unique;
  for (const ModuleMonomial& mono : monomials)
    if (std::find(unique.begin(), unique.end(), mono) == unique.end()) unique.push_back(mono);
  std::vector<ModuleMonomial> out;
  for (const ModuleMonomial& mono : unique) {
    bool minimal = true;
    for (const ModuleMonomial& other : unique) {
      if (other == mono) continue;
      if (oi_divides(other, mono)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(mono);
  }
  return out;
}

RingMonomial random_ring_monomial(const VariableScheme& scheme, int width, int max_degree,
                                  std::mt19937_64& rng) {
  std::vector<VarKey> keys = variable_keys(scheme, width);
  std::uniform_int_distribution<int> deg_dist(0, max_degree);
  int degree = keys.empty() ? 0 : deg_dist(rng);
  std::vector<std::pair<VarKey, int>> factors;
  for (int i = 0; i < degree; ++i) {
    std::uniform_int_distribution<size_t> key_dist(0, keys.size() - 1);
    factors.emplace_back(keys[key_dist(rng)], 1);
  }
  return RingMonomial(scheme, width, std::move(factors));
}

ModuleMonomial random_module_monomial(const FreeSignature& sig, int width, int max_degree,
                                      std::mt19937_64& rng) {
  std::vector<std::pair<size_t, OIMorphism>> bases;
  for (size_t slot = 0; slot < sig.size(); ++slot)
    for (const OIMorphism& map : enumerate_oi(sig.slot(slot).basis_degree, width))
      bases.emplace_back(slot, map);
  if (bases.empty()) throw ParameterMismatch("no basis symbols at this width");
  std::uniform_int_distribution<size_t> basis_dist(0, bases.size() - 1);
  auto [slot, map] = bases[basis_dist(rng)];
  return ModuleMonomial(slot, map, random_ring_monomial(sig.scheme(), width, max_degree, rng));
}

void validate_order_axioms(const MonomialOrder& order, const SignaturePtr& sig,
                           OrderValidationConfig cfg) {
  std::mt19937_64 rng(cfg.seed);
  int min_width = 0;
  for (const SignatureSlot& slot : sig->slots()) min_width = std::max(min_width, slot.basis_degree);
  std::uniform_int_distribution<int> width_dist(min_width, cfg.max_width);
  for (int i = 0; i < cfg.samples; ++i) {
    int width = width_dist(rng);
    ModuleMonomial a = random_module_monomial(*sig, width, cfg.max_degree, rng);
    ModuleMonomial b = random_module_monomial(*sig, width, cfg.max_degree, rng);
    Cmp ab = order.compare(a, b);
    if ((ab == Cmp::Equal) != (a == b))
      throw OrderAxiomViolation("compare reports Equal iff structural equality fails");
    if (ab == Cmp::Less) std::swap(a, b);
    if (a == b) continue;
    // (i) multiplicative compatibility, u != 1
    RingMonomial u = random_ring_monomial(sig->scheme(), width, std::max(cfg.max_degree, 1), rng);
    if (u.is_unit() && !variable_keys(sig->scheme(), width).empty())
      u = RingMonomial::variable(sig->scheme(), width, variable_keys(sig->scheme(), width)[0]);
    if (!u.is_unit()) {
      ModuleMonomial ua(a.slot(), a.basis_map(), a.ring() * u);
      ModuleMonomial ub(b.slot(), b.basis_map(), b.ring() * u);
      if (!order.greater(ua, ub) || !order.greater(ub, b))
        throw OrderAxiomViolation("axiom (i) fails for " + a.str() + " > " + b.str() +
                                  " with u = " + u.str());
    }
    // (ii) morphism compatibility, one width up
    std::vector<OIMorphism> maps = enumerate_oi(width, width + 1);
    std::uniform_int_distribution<size_t> map_dist(0, maps.size() - 1);
    const OIMorphism& map = maps[map_dist(rng)];
    if (!order.greater(apply_morphism(map, a), apply_morphism(map, b)))
      throw OrderAxiomViolation("axiom (ii) fails for " + a.str() + " > " + b.str() + " under " +
                                map.str());
    // (iii) width inclusion
    for (int up = 1; up <= 2; ++up) {
      if (!order.greater(apply_morphism(iota(width, width + up), a), a))
        throw OrderAxiomViolation("axiom (iii) fails for " + a.str());
    }
  }
}

}  // namespace oigb
