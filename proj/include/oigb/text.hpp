#pragma once

#include <string>
#include <string_view>

#include "oigb/ordering.hpp"

namespace oigb {

/* Text grammars (whitespace-insensitive, `^1` optional):
 *   ring monomial   x[1,1]^2*x[1,2]      or  x(1,3)^2
 *   polynomial      3/2*x[1,1]^2*x[1,2] - x[2,1] + 1
 *   module element  x[1,1]^2*e{λ=0; 1,3} - 2*e{}      (λ= optional, slot 0)
 *   morphism        [2->4: 1,3]
 *   signature       F(0), F(1)(-2)                    (twist t; generator degree -t)
 * Parsers throw ParseError. */

RingMonomial parse_ring_monomial(std::string_view text, const VariableScheme& scheme, int width);
Polynomial parse_polynomial(std::string_view text, const VariableScheme& scheme, int width,
                            const Field& field);
ModuleElement parse_element(std::string_view text, const SignaturePtr& sig, int width,
                            const Field& field);
OIMorphism parse_oi_morphism(std::string_view text);
std::vector<SignatureSlot> parse_signature(std::string_view text);

/* Canonical rendering: terms listed in decreasing order. Output re-parses to
 * an equal value. */
std::string render_element(const ModuleElement& elem, const MonomialOrder& order);

std::string render_witness(const OIMorphism& map, const RingMonomial& cofactor);

}  // namespace oigb
