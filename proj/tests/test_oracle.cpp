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
}  // namespace

TEST_CASE("Macaulay pivots of the full linear ideal") {
  SignaturePtr sig = f0();
  GeneratorSet gens(sig, kQ, {elem("x[1,1]*e{}", sig, 1)});
  auto leading = oracle::initial_module_by_macaulay(gens, 2, 2, *kOrder);
  // degree 1: both variables; degree 2: every monomial
  CHECK(leading.size() == 5);
  int degree_one = 0, degree_two = 0;
  for (const ModuleMonomial& mono : leading) {
    if (mono.ring().total_degree() == 1) ++degree_one;
    if (mono.ring().total_degree() == 2) ++degree_two;
  }
  CHECK(degree_one == 2);
  CHECK(degree_two == 3);
}

TEST_CASE("Macaulay on the empty and principal cases") {
  SignaturePtr sig = f0();
  CHECK(oracle::initial_module_by_macaulay(GeneratorSet(sig, kQ, {}), 2, 3, *kOrder).empty());

  GeneratorSet squares(sig, kQ, {elem("x[1,1]^2*e{}", sig, 1)});
  auto leading = oracle::initial_module_by_macaulay(squares, 1, 3, *kOrder);
  std::set<ModuleMonomial> expected{
      elem("x[1,1]^2*e{}", sig, 1).terms().front().first,
      elem("x[1,1]^3*e{}", sig, 1).terms().front().first,
  };
  CHECK(leading == expected);
}

TEST_CASE("enumeration oracle matches the published divisibility examples") {
  SignaturePtr sig = fd(1);
  ModuleMonomial mu = elem("x[1,1]*e{1}", sig, 1).terms().front().first;
  ModuleMonomial nu = elem("x[1,1]*x[1,2]*e{2}", sig, 2).terms().front().first;
  ModuleMonomial rho = elem("x[1,2]*e{1}", sig, 2).terms().front().first;
  CHECK(oracle::divisibility_by_enumeration(mu, mu));
  CHECK(oracle::divisibility_by_enumeration(mu, nu));
  CHECK_FALSE(oracle::divisibility_by_enumeration(mu, rho));
  // degree obstruction
  CHECK_FALSE(oracle::divisibility_by_enumeration(nu, mu));

  ModuleMonomial wide(0, OIMorphism(1, 9, {1}), RingMonomial(VariableScheme::tensor(1), 9));
  CHECK_THROWS_AS(oracle::divisibility_by_enumeration(mu, wide), WidthTooLarge);
}

TEST_CASE("basis-driven initial module agrees with Macaulay blocks") {
  SignaturePtr sig = f0();
  GeneratorSet gens(sig, kQ,
                    {elem("x[1,1]^2*e{}", sig, 1), elem("x[1,1]*x[1,2]*e{}", sig, 2)});
  for (int width = 2; width <= 3; ++width) {
    auto gb = classical_buchberger_width(gens, *kOrder, width);
    auto macaulay = oracle::initial_module_by_macaulay(gens, width, 5, *kOrder);
    std::set<ModuleMonomial> from_basis;
    for (int degree = 0; degree <= 5; ++degree)
      for (const ModuleMonomial& mono :
           oracle::initial_from_basis(gb, sig, width, degree, *kOrder))
        from_basis.insert(mono);
    CHECK(from_basis == macaulay);
  }
}
