#include <doctest.h>

#include <fstream>
#include <sstream>

#include "test_support.hpp"

using namespace oigb;
using oigb::test::elem;
using oigb::test::f0;
using oigb::test::fd;
using oigb::test::free_sig;

namespace {
const VariableScheme kC1 = VariableScheme::tensor(1);
const VariableScheme kC2 = VariableScheme::tensor(2);
const Field kQ = Field::rationals();
const OrderPtr kOrder = make_order("paper_lex");
}  // namespace

TEST_CASE("ring monomial grammar") {
  CHECK(parse_ring_monomial("x[1,1]^2*x[1,2]", kC1, 2).total_degree() == 3);
  CHECK(parse_ring_monomial("  x[1,1] ^2 * x[1,2]", kC1, 2) ==
        parse_ring_monomial("x[1,2]*x[1,1]*x[1,1]", kC1, 2));
  CHECK(parse_ring_monomial("1", kC1, 3).is_unit());
  CHECK(parse_ring_monomial("x(1,3)^2", VariableScheme::degree_d(2), 3).total_degree() == 2);
  CHECK_THROWS_AS(parse_ring_monomial("x[1,3]", kC1, 2), SchemeMismatch);
  CHECK_THROWS_AS(parse_ring_monomial("x[1,1] + x[1,2]", kC1, 2), ParseError);
  CHECK_THROWS_AS(parse_ring_monomial("2*x[1,1]", kC1, 2), ParseError);
}

TEST_CASE("polynomial grammar") {
  Polynomial p = parse_polynomial("3/2*x[1,1]^2*x[1,2] - x[2,1] + 1", kC2, 2, kQ);
  CHECK(p.terms().size() == 3);
  CHECK(parse_polynomial("0", kC1, 2, kQ).is_zero());
  CHECK(parse_polynomial("x[1,1] - x[1,1]", kC1, 2, kQ).is_zero());
  CHECK(parse_polynomial("-x[1,1]", kC1, 1, kQ) ==
        -parse_polynomial("x[1,1]", kC1, 1, kQ));
  // round trip through the renderer
  CHECK(parse_polynomial(p.str(), kC2, 2, kQ) == p);
}

TEST_CASE("module element grammar") {
  SignaturePtr sig = fd(1);
  ModuleElement a = elem("x[1,1]^2 * e{λ=0; 1}", sig, 2);
  CHECK(a == elem("x[1,1]^2*e{1}", sig, 2));       // slot prefix optional
  CHECK(a == elem("x[1,1]^2 e{l=0; 1}", sig, 2));  // ascii alias, juxtaposition
  CHECK(elem("0", sig, 2).is_zero());

  SignaturePtr two = free_sig(kC1, {SignatureSlot{0, 0}, SignatureSlot{0, -1}});
  ModuleElement b = elem("x[1,1]*e{λ=0} - 2*e{λ=1}", two, 1);
  CHECK(b.term_count() == 2);

  CHECK_THROWS_AS(elem("x[1,1]", sig, 1), ParseError);          // no basis symbol
  CHECK_THROWS_AS(elem("e{λ=3}", sig, 1), ParseError);     // slot out of range
  CHECK_THROWS_AS(elem("e{}", sig, 1), ParseError);             // arity mismatch for F(1)
  CHECK_THROWS_AS(elem("e{1}*e{1}", sig, 1), ParseError);       // two basis symbols
  CHECK_THROWS_AS(elem("e{2,1}", fd(2), 2), WidthMismatch);     // non-increasing image
}

TEST_CASE("render round trips through parse") {
  SignaturePtr sig = free_sig(kC2, {SignatureSlot{1, 0}, SignatureSlot{0, -2}});
  ModuleElement q = elem("3/2*x[1,1]*x[2,2]*e{λ=0; 2} - e{λ=1} + x[2,1]^3*e{λ=0; 1}",
                         sig, 2);
  std::string text = render_element(q, *kOrder);
  CHECK(parse_element(text, sig, 2, kQ) == q);
  CHECK(render_element(ModuleElement(sig, 2, kQ), *kOrder) == "0");
  // canonical rendering lists the leading term first
  CHECK(text.find(render_element(
            ModuleElement::from_term(sig, leading_monomial(q, *kOrder), kQ.one()), *kOrder)) == 0);
}

TEST_CASE("morphism text form") {
  OIMorphism eps(2, 4, {1, 3});
  CHECK(parse_oi_morphism(eps.str()) == eps);
  CHECK(parse_oi_morphism("[0->3:]").source_width() == 0);
  CHECK_THROWS_AS(parse_oi_morphism("[2->4: 3,1]"), WidthMismatch);
  CHECK_THROWS_AS(parse_oi_morphism("2->4: 1,3"), ParseError);
}

TEST_CASE("signature text form") {
  auto slots = parse_signature("F(0), F(1)(-2), F(2)(1)");
  REQUIRE(slots.size() == 3);
  CHECK(slots[0] == SignatureSlot{0, 0});
  CHECK(slots[1] == SignatureSlot{1, 2});
  CHECK(slots[2] == SignatureSlot{2, -1});
  FreeSignature sig(kC1, slots);
  CHECK(parse_signature(sig.str()) == slots);
  CHECK_THROWS_AS(parse_signature("G(0)"), ParseError);
}

TEST_CASE("field spec") {
  CHECK(parse_field("Q") == Field::rationals());
  CHECK(parse_field("Fp 97") == Field::prime(97));
  CHECK(parse_field("Fp(97)") == Field::prime(97));
  CHECK_THROWS_AS(parse_field("R"), ParseError);
  CHECK_THROWS_AS(parse_field("Fp 6"), NonPrimeModulus);
}

TEST_CASE("generator lists and element files") {
  SignaturePtr sig = f0();
  auto gens = parse_generator_list("1: x[1,1] e{} ; 2: x[1,1]*x[1,2] e{}", sig, kQ);
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].width() == 1);
  CHECK(gens[1].width() == 2);

  std::istringstream file(
      "# a comment\n"
      "width: 1\n"
      "x[1,1] e{}\n"
      "\n"
      "width: 2\n"
      "x[1,1]*x[1,2] e{}  # trailing comment\n");
  auto from_file = parse_element_file(file, sig, kQ);
  REQUIRE(from_file.size() == 2);
  CHECK(from_file[0] == gens[0]);
  CHECK(from_file[1] == gens[1]);

  std::istringstream headerless("x[1,1] e{}\n");
  CHECK_THROWS_AS(parse_element_file(headerless, sig, kQ), ParseError);
}

TEST_CASE("session files") {
  std::string path = "/tmp/oigb_test_session.session";
  {
    std::ofstream out(path);
    out << "# demo session\n"
           "field = Fp 5\n"
           "scheme = tensor 2\n"
           "signature = F(1)(-1)\n"
           "order = paper_grlex\n"
           "flavor = oi\n"
           "generators = 1: x[1,1] e{1} ; 2: x[2,2] e{1}\n"
           "max_width = 5\n"
           "lookahead = 3\n";
  }
  Session session = load_session(path);
  CHECK(session.field == Field::prime(5));
  CHECK(session.scheme == VariableScheme::tensor(2));
  CHECK(session.signature->slots() == std::vector<SignatureSlot>{SignatureSlot{1, 1}});
  CHECK(session.order_name == "paper_grlex");
  CHECK(session.max_width == 5);
  CHECK(session.lookahead == 3);
  REQUIRE(session.generators.size() == 2);
  CHECK(session.generators[1].width() == 2);

  CHECK_THROWS_AS(load_session("/tmp/definitely_missing.session"), ParseError);
}
