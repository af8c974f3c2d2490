#pragma once

#include <string>
#include <vector>

#include "oigb/classical_gb.hpp"

namespace oigb {

enum class GeneratorFlavor { OI, FI };

/* Generators of a submodule, each at its own width. FI-flavor inputs are
 * rewritten into OI form on construction by closing each generator under the
 * symmetric-group action at its width; this covers every FI image because an
 * injection factors as monotone-after-permutation. Basis degrees >= 2 are
 * rejected for FI inputs (the degree-d FI scheme is not modelled). */
class GeneratorSet {
 public:
  GeneratorSet(SignaturePtr sig, Field field, std::vector<ModuleElement> gens,
               GeneratorFlavor flavor = GeneratorFlavor::OI);

  const SignaturePtr& signature() const { return sig_; }
  const Field& field() const { return field_; }
  const std::vector<ModuleElement>& generators() const { return gens_; }
  GeneratorFlavor flavor() const { return flavor_; }

  int max_generator_width() const;

 private:
  SignaturePtr sig_;
  Field field_;
  std::vector<ModuleElement> gens_;
  GeneratorFlavor flavor_;
};

/* One OI-reduction step: subtract the first witness multiple whose leading
 * monomial OI-divides lm(q). nullopt when no divisor applies. */
std::optional<ModuleElement> reduce_step(const ModuleElement& q,
                                         const std::vector<ModuleElement>& basis,
                                         const MonomialOrder& order);

/* Full OI-division remainder: no term of the result is OI-reducible. */
ModuleElement normal_form(const ModuleElement& q, const std::vector<ModuleElement>& basis,
                          const MonomialOrder& order);

/* Reduced classical Groebner basis at one width of the submodule generated by
 * all OI-images of the generators into that width. */
std::vector<ModuleElement> classical_buchberger_width(const GeneratorSet& gens,
                                                      const MonomialOrder& order, int width);

enum class CertStatus { HeuristicallyCertified, WidthLimited };

struct Certification {
  int certified_width = 0;
  int lookahead = 0;
  CertStatus status = CertStatus::WidthLimited;
};

struct EquivariantGB {
  std::vector<ModuleElement> basis;  // monic; leading monomials an OI-antichain
  std::string order_name;
  Certification cert;
};

struct EquivariantConfig {
  int max_width = 8;  // hard cap W
  int lookahead = 2;  // quiet widths required before certifying
};

/* Width-sweep completion: per width, reduce the classical reduced basis
 * against OI-images of the candidate set and adjoin irreducible remainders.
 * Certifies heuristically once `lookahead` consecutive widths past every
 * generator width add nothing; capped at max_width (WidthLimited). */
EquivariantGB equivariant_buchberger(const GeneratorSet& gens, const MonomialOrder& order,
                                     EquivariantConfig cfg = {});

/* Re-check: every classical basis element at each width reduces to zero. */
bool is_groebner(const std::vector<ModuleElement>& candidate, const GeneratorSet& gens,
                 const MonomialOrder& order, const std::vector<int>& widths);

/* Submodule membership through a certified equivariant basis; throws
 * UncertifiedWidth when certification does not cover width(q). */
bool membership(const ModuleElement& q, const GeneratorSet& gens, const MonomialOrder& order,
                EquivariantConfig cfg = {});

}  // namespace oigb
