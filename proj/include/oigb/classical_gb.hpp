#pragma once

#include <optional>
#include <vector>

#include "oigb/ordering.hpp"

namespace oigb {

/* Classical (single-width) machinery over the width-n ring: ordinary module
 * Groebner bases, division with quotient tracking, and Schreyer syzygies.
 * Divisibility here is term-by-term at one width: same slot, same basis
 * symbol, ring part divides. */

const ModuleMonomial& leading_monomial(const ModuleElement& elem, const MonomialOrder& order);
const FieldElem& leading_coeff(const ModuleElement& elem, const MonomialOrder& order);
ModuleElement make_monic(const ModuleElement& elem, const MonomialOrder& order);

/* Remainder of a full classical division of q by the list. When `quotients`
 * is given it receives one polynomial per divisor with
 * q = sum quotients[k] * divisors[k] + remainder. */
ModuleElement classical_normal_form(const ModuleElement& q,
                                    const std::vector<ModuleElement>& divisors,
                                    const MonomialOrder& order,
                                    std::vector<Polynomial>* quotients = nullptr);

/* Reduced Groebner basis (monic, interreduced, sorted by increasing leading
 * monomial) of the width-n submodule generated by `gens`. Pair selection is
 * the normal strategy: least lcm degree, then the order on lcm, then index. */
std::vector<ModuleElement> classical_buchberger(const std::vector<ModuleElement>& gens,
                                                const MonomialOrder& order);

/* Schreyer generators of the syzygy module of a reduced Groebner basis. The
 * result lives over a fresh signature with one degree-0 slot per basis
 * element, shifted by that element's internal degree. */
struct SyzygyResult {
  SignaturePtr signature;
  std::vector<ModuleElement> generators;
};
SyzygyResult schreyer_syzygies(const std::vector<ModuleElement>& gb, const MonomialOrder& order);

}  // namespace oigb
