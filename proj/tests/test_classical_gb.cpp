#include <doctest.h>

#include "oracle.hpp"
#include "test_support.hpp"

using namespace oigb;
using oigb::test::elem;
using oigb::test::f0;
using oigb::test::fd;

namespace {
const Field kQ = Field::rationals();
const OrderPtr kOrder = make_order("paper_lex");

bool leading_set_is_antichain(const std::vector<ModuleElement>& gb) {
  for (size_t i = 0; i < gb.size(); ++i) {
    for (size_t j = 0; j < gb.size(); ++j) {
      if (i == j) continue;
      const ModuleMonomial& a = leading_monomial(gb[i], *kOrder);
      const ModuleMonomial& b = leading_monomial(gb[j], *kOrder);
      if (a.slot() == b.slot() && a.basis_map() == b.basis_map() && a.ring().divides(b.ring()))
        return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("classical division with quotient tracking") {
  SignaturePtr sig = f0();
  std::vector<ModuleElement> divisors{elem("x[1,1]^2*e{} - x[1,2]*e{}", sig, 2),
                                      elem("x[1,2]^2*e{}", sig, 2)};
  ModuleElement q = elem("x[1,1]^3*e{} + x[1,2]^3*e{} + e{}", sig, 2);
  std::vector<Polynomial> quotients;
  ModuleElement r = classical_normal_form(q, divisors, *kOrder, &quotients);
  // reconstruct: q = sum quotients[k] * divisors[k] + r
  ModuleElement rebuilt = r;
  for (size_t k = 0; k < divisors.size(); ++k)
    rebuilt = rebuilt + divisors[k].poly_multiple(quotients[k]);
  CHECK(rebuilt == q);
  // remainder has no term divisible by any leading monomial
  for (const auto& [mono, coeff] : r.terms()) {
    (void)coeff;
    for (const ModuleElement& d : divisors) {
      const ModuleMonomial& lm = leading_monomial(d, *kOrder);
      bool divides = lm.slot() == mono.slot() && lm.basis_map() == mono.basis_map() &&
                     lm.ring().divides(mono.ring());
      CHECK_FALSE(divides);
    }
  }
}

TEST_CASE("reduced basis of a monomial submodule") {
  SignaturePtr sig = f0();
  GeneratorSet gens(sig, kQ, {elem("x[1,1]*e{}", sig, 1)});
  auto gb = classical_buchberger_width(gens, *kOrder, 2);
  REQUIRE(gb.size() == 2);
  CHECK(gb[0] == elem("x[1,2]*e{}", sig, 2));
  CHECK(gb[1] == elem("x[1,1]*e{}", sig, 2));
}

TEST_CASE("unit submodule collapses to the basis symbol") {
  SignaturePtr sig = f0();
  GeneratorSet gens(sig, kQ, {elem("e{}", sig, 0)});
  for (int n = 0; n <= 3; ++n) {
    auto gb = classical_buchberger_width(gens, *kOrder, n);
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == elem("e{}", sig, n));
  }
}

TEST_CASE("reduced basis properties and the classical criterion, post hoc") {
  SignaturePtr sig = f0();
  std::vector<GeneratorSet> suite;
  suite.emplace_back(sig, kQ, std::vector<ModuleElement>{elem("x[1,1]^2*e{}", sig, 1),
                                                         elem("x[1,1]*x[1,2]*e{}", sig, 2)});
  suite.emplace_back(sig, kQ, std::vector<ModuleElement>{
                                  elem("x[1,1]^2*e{} - x[1,1]*x[1,2]*e{}", sig, 2)});
  SignaturePtr sig1 = fd(1);
  suite.emplace_back(sig1, kQ, std::vector<ModuleElement>{
                                   elem("x[1,1]*e{2} - x[1,2]*e{1}", sig1, 2)});

  for (const GeneratorSet& gens : suite) {
    for (int n = 2; n <= 4; ++n) {
      auto gb = classical_buchberger_width(gens, *kOrder, n);
      CHECK(leading_set_is_antichain(gb));
      for (const ModuleElement& g : gb) {
        CHECK(leading_coeff(g, *kOrder).is_one());
        // every S-pair reduces to zero against the basis
        for (const ModuleElement& h : gb) {
          const ModuleMonomial& a = leading_monomial(g, *kOrder);
          const ModuleMonomial& b = leading_monomial(h, *kOrder);
          if (!(a.slot() == b.slot() && a.basis_map() == b.basis_map())) continue;
          RingMonomial lcm = RingMonomial::lcm(a.ring(), b.ring());
          ModuleElement s = g.mono_multiple(lcm.divide_by(a.ring())) -
                            h.mono_multiple(lcm.divide_by(b.ring()));
          if (!s.is_zero()) CHECK(classical_normal_form(s, gb, *kOrder).is_zero());
        }
      }
    }
  }
}

TEST_CASE("Schreyer syzygies of a regular monomial sequence") {
  SignaturePtr sig = f0();
  GeneratorSet gens(sig, kQ, {elem("x[1,1]^2*e{}", sig, 1)});
  auto gb = classical_buchberger_width(gens, *kOrder, 2);  // x2^2, x1^2 after sorting
  REQUIRE(gb.size() == 2);
  SyzygyResult syz = schreyer_syzygies(gb, *kOrder);
  REQUIRE(syz.generators.size() == 1);
  // the Koszul relation between the two squares
  const ModuleElement& z = syz.generators.front();
  CHECK(z.term_count() == 2);
  // substituting the basis elements back in gives zero
  ModuleElement combo(sig, 2, kQ);
  for (const auto& [mono, coeff] : z.terms())
    combo = combo + gb[mono.slot()].mono_multiple(mono.ring()).scaled(coeff);
  CHECK(combo.is_zero());
}

TEST_CASE("syzygies vanish for a principal submodule") {
  SignaturePtr sig = f0();
  GeneratorSet gens(sig, kQ, {elem("x[1,1]^2*e{}", sig, 1)});
  auto gb = classical_buchberger_width(gens, *kOrder, 1);
  REQUIRE(gb.size() == 1);
  CHECK(schreyer_syzygies(gb, *kOrder).generators.empty());
}
