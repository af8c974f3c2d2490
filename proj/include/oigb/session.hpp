#pragma once

#include <iosfwd>
#include <string>

#include "oigb/groebner.hpp"
#include "oigb/text.hpp"

namespace oigb {

/* A computation session: field, scheme, signature, order, generators and the
 * completion config. Loaded from a flat key-value file; flags may override
 * individual entries afterwards (flags > file > defaults). */
struct Session {
  Field field = Field::rationals();
  VariableScheme scheme = VariableScheme::tensor(1);
  SignaturePtr signature = make_signature(scheme, {SignatureSlot{0, 0}});
  std::string order_name = "paper_lex";
  GeneratorFlavor flavor = GeneratorFlavor::OI;
  std::vector<ModuleElement> generators;
  int max_width = 8;
  int lookahead = 2;

  OrderPtr order() const { return make_order(order_name); }
  GeneratorSet generator_set() const {
    return GeneratorSet(signature, field, generators, flavor);
  }
};

Field parse_field(std::string_view text);  // "Q" | "Fp 97" | "Fp(97)"

/* Inline generator list: `width: element ; width: element`. */
std::vector<ModuleElement> parse_generator_list(std::string_view text, const SignaturePtr& sig,
                                                const Field& field);

/* Element file: `#` comments, `width: n` headers, one element per line. */
std::vector<ModuleElement> parse_element_file(std::istream& in, const SignaturePtr& sig,
                                              const Field& field);

Session load_session(const std::string& path);

}  // namespace oigb
