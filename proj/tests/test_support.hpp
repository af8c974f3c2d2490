#pragma once

#include "oigb/session.hpp"

namespace oigb::test {

inline SignaturePtr free_sig(VariableScheme scheme, std::vector<SignatureSlot> slots) {
  return make_signature(scheme, std::move(slots));
}

inline SignaturePtr f0(VariableScheme scheme = VariableScheme::tensor(1)) {
  return free_sig(scheme, {SignatureSlot{0, 0}});
}

inline SignaturePtr fd(int d, VariableScheme scheme = VariableScheme::tensor(1), int shift = 0) {
  return free_sig(scheme, {SignatureSlot{d, shift}});
}

inline RingMonomial rmono(std::string_view text, const VariableScheme& scheme, int width) {
  return parse_ring_monomial(text, scheme, width);
}

inline ModuleElement elem(std::string_view text, const SignaturePtr& sig, int width,
                          const Field& field = Field::rationals()) {
  return parse_element(text, sig, width, field);
}

/* The cycle monomial u_i = x(1,2) x(2,3) ... x(i-1,i) x(1,i) in the degree-2
 * scheme at width i. */
inline RingMonomial cycle_monomial(int i) {
  VariableScheme scheme = VariableScheme::degree_d(2);
  std::vector<std::pair<VarKey, int>> factors;
  for (int v = 1; v < i; ++v) factors.push_back({VarKey{{v, v + 1}}, 1});
  factors.push_back({VarKey{{1, i}}, 1});
  return RingMonomial(scheme, i, std::move(factors));
}

}  // namespace oigb::test
