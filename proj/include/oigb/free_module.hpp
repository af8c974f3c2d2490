#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oigb/polyring.hpp"

namespace oigb {

/* One summand F(d)(-s): basis symbols e_pi with pi: [d] -> [n], generator
 * sitting in internal degree s. */
struct SignatureSlot {
  int basis_degree = 0;  // d
  int shift = 0;         // generator degree s

  bool operator==(const SignatureSlot&) const = default;
};

/* Shape of a finitely generated free module over the width-indexed ring. */
class FreeSignature {
 public:
  FreeSignature(VariableScheme scheme, std::vector<SignatureSlot> slots);

  const VariableScheme& scheme() const { return scheme_; }
  const std::vector<SignatureSlot>& slots() const { return slots_; }
  size_t size() const { return slots_.size(); }
  const SignatureSlot& slot(size_t index) const { return slots_.at(index); }

  /* Rank of the width-n component: sum of binom(n, d_slot). */
  long rank_at_width(int width) const;

  bool operator==(const FreeSignature& o) const {
    return scheme_ == o.scheme_ && slots_ == o.slots_;
  }

  std::string str() const;  // "F(0), F(1)(-2)"

 private:
  VariableScheme scheme_;
  std::vector<SignatureSlot> slots_;
};

using SignaturePtr = std::shared_ptr<const FreeSignature>;

SignaturePtr make_signature(VariableScheme scheme, std::vector<SignatureSlot> slots);

/* x^u e_pi: a slot index, the basis symbol's defining map, and a ring
 * monomial at the ambient width. */
class ModuleMonomial {
 public:
  ModuleMonomial(size_t slot, OIMorphism basis_map, RingMonomial mono);

  size_t slot() const { return slot_; }
  const OIMorphism& basis_map() const { return basis_; }
  const RingMonomial& ring() const { return mono_; }
  int width() const { return mono_.width(); }

  bool operator==(const ModuleMonomial& o) const = default;
  auto operator<=>(const ModuleMonomial& o) const = default;  // structural only

  std::string str() const;

 private:
  size_t slot_;
  OIMorphism basis_;
  RingMonomial mono_;
};

/* Internal degree: ring degree plus the slot shift. */
int degree(const ModuleMonomial& mono, const FreeSignature& sig);

/* A width-n element of the free module: finitely many terms with nonzero
 * coefficients, all sharing signature and width. */
class ModuleElement {
 public:
  ModuleElement(SignaturePtr sig, int width, Field field);  // zero

  static ModuleElement from_term(SignaturePtr sig, const ModuleMonomial& mono,
                                 const FieldElem& coeff);
  /* The basis element e_pi itself (unit ring part, coefficient one). */
  static ModuleElement basis_element(SignaturePtr sig, Field field, size_t slot,
                                     const OIMorphism& basis_map);

  const SignaturePtr& signature() const { return sig_; }
  int width() const { return width_; }
  const Field& field() const { return field_; }
  const std::vector<std::pair<ModuleMonomial, FieldElem>>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  void add_term(const ModuleMonomial& mono, const FieldElem& coeff);

  ModuleElement operator+(const ModuleElement& o) const;
  ModuleElement operator-(const ModuleElement& o) const;
  ModuleElement operator-() const;
  ModuleElement scaled(const FieldElem& c) const;
  ModuleElement mono_multiple(const RingMonomial& mono) const;
  ModuleElement poly_multiple(const Polynomial& poly) const;

  bool operator==(const ModuleElement& o) const;

  std::optional<int> homogeneous_degree() const;  // 0 for the zero element

  std::string str() const;

 private:
  void check_compatible(const ModuleElement& o) const;

  SignaturePtr sig_;
  int width_;
  Field field_;
  std::vector<std::pair<ModuleMonomial, FieldElem>> terms_;  // sorted structurally
};

ModuleMonomial apply_morphism(const OIMorphism& map, const ModuleMonomial& mono);
ModuleElement apply_morphism(const OIMorphism& map, const ModuleElement& elem);

/* FI action; the basis symbol is refactored through its monotone part.
 * Only basis degrees <= 1 are supported (see GeneratorSet). */
ModuleElement apply_morphism(const FIMorphism& map, const ModuleElement& elem);

/* Images of the slot generator e_id under every OI-map into the width. */
std::vector<ModuleElement> generator_orbit(const SignaturePtr& sig, const Field& field,
                                           size_t slot, int width);

}  // namespace oigb
