#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "test_support.hpp"

using namespace oigb;
using oigb::test::elem;
using oigb::test::f0;
using oigb::test::fd;
using oigb::test::free_sig;

namespace {

const VariableScheme kC1 = VariableScheme::tensor(1);
const Field kQ = Field::rationals();

ModuleMonomial mono_of(const ModuleElement& e) {
  REQUIRE(e.term_count() == 1);
  return e.terms().front().first;
}

}  // namespace

TEST_CASE("the shipped order matches the published comparisons") {
  OrderPtr order = make_order("paper_lex");
  SignaturePtr sig = fd(1);
  // basis symbols at lower width are smaller
  CHECK(order->compare(mono_of(elem("e{1}", sig, 2)), mono_of(elem("e{1}", sig, 3))) == Cmp::Less);
  // equality is structural
  ModuleMonomial m = mono_of(elem("x[1,1]*e{2}", sig, 2));
  CHECK(order->compare(m, m) == Cmp::Equal);
  // x[1,1] beats x[1,2] on the same basis symbol
  SignaturePtr sig0 = f0();
  CHECK(order->compare(mono_of(elem("x[1,1]*e{}", sig0, 2)),
                       mono_of(elem("x[1,2]*e{}", sig0, 2))) == Cmp::Greater);
  // row index outranks column index
  SignaturePtr sig0c2 = f0(VariableScheme::tensor(2));
  CHECK(order->compare(mono_of(elem("x[1,2]*e{}", sig0c2, 2)),
                       mono_of(elem("x[2,1]*e{}", sig0c2, 2))) == Cmp::Greater);
}

TEST_CASE("order axioms validated by sampling") {
  for (const std::string& name : order_names()) {
    OrderPtr order = make_order(name);
    for (const VariableScheme& scheme : {VariableScheme::tensor(1), VariableScheme::tensor(2)}) {
      validate_order_axioms(*order, f0(scheme));
      validate_order_axioms(*order, fd(1, scheme));
      validate_order_axioms(*order, fd(2, scheme));
      validate_order_axioms(*order,
                            free_sig(scheme, {SignatureSlot{0, 0}, SignatureSlot{1, -1}}));
    }
  }
}

TEST_CASE("checked compare rejects signature mismatch") {
  OrderPtr order = make_order("paper_lex");
  SignaturePtr a = f0(), b = fd(1);
  ModuleMonomial ma = mono_of(elem("e{}", a, 1));
  ModuleMonomial mb = mono_of(elem("e{1}", b, 1));
  CHECK_THROWS_AS(compare_checked(*order, *a, ma, *b, mb), SignatureMismatch);
  CHECK(compare_checked(*order, *a, ma, *a, ma) == Cmp::Equal);
}

TEST_CASE("OI-divisibility of module monomials") {
  SignaturePtr sig = fd(1);
  ModuleMonomial mu = mono_of(elem("x[1,1]*e{1}", sig, 1));
  auto self = oi_divides(mu, mu);
  REQUIRE(self);
  CHECK(self->map == OIMorphism::identity(1));
  CHECK(self->cofactor.is_unit());

  ModuleMonomial nu = mono_of(elem("x[1,1]*x[1,2]*e{2}", sig, 2));
  auto w = oi_divides(mu, nu);
  REQUIRE(w);
  CHECK(w->map == OIMorphism(1, 2, {2}));
  CHECK(w->cofactor == test::rmono("x[1,1]", kC1, 2));

  CHECK_FALSE(oi_divides(mu, mono_of(elem("x[1,2]*e{1}", sig, 2))));
}

TEST_CASE("pruned witness search agrees with plain enumeration, sampled") {
  std::mt19937_64 rng(23);
  SignaturePtr sig = fd(2, VariableScheme::tensor(2));
  for (int i = 0; i < 3000; ++i) {
    std::uniform_int_distribution<int> wm(2, 3), wn(2, 4);
    int m = wm(rng), n = wn(rng);
    ModuleMonomial a = random_module_monomial(*sig, m, 2, rng);
    ModuleMonomial b = random_module_monomial(*sig, n, 3, rng);
    CHECK(static_cast<bool>(oi_divides(a, b)) == oracle::divisibility_by_enumeration(a, b));
    if (auto w = oi_divides(a, b)) {
      CHECK(compose(w->map, a.basis_map()) == b.basis_map());
      CHECK(apply_morphism(w->map, a.ring()) * w->cofactor == b.ring());
    }
  }
}

TEST_CASE("the order refines OI-divisibility, sampled") {
  std::mt19937_64 rng(29);
  for (const std::string& name : order_names()) {
    OrderPtr order = make_order(name);
    SignaturePtr sig = fd(1, VariableScheme::tensor(2));
    for (int i = 0; i < 4000; ++i) {
      ModuleMonomial a = random_module_monomial(*sig, 2, 2, rng);
      ModuleMonomial b = random_module_monomial(*sig, 3, 3, rng);
      if (oi_divides(a, b) && !(a == b)) CHECK(order->compare(a, b) == Cmp::Less);
    }
  }
}

TEST_CASE("Higman encoding of the published shapes") {
  SignaturePtr sig0 = f0();
  HigmanCode code = encode_higman(mono_of(elem("x[1,1]^2*x[1,3]*e{}", sig0, 3)));
  CHECK(code.rows() == 1);
  CHECK(code.basis_degree() == 0);
  REQUIRE(code.length() == 3);
  CHECK(code.entries()[0] == HigmanCode::Entry{{{2}, 1}});
  CHECK(code.entries()[1] == HigmanCode::Entry{{{0}, 2}});
  CHECK(code.entries()[2] == HigmanCode::Entry{{{1}, 3}});

  CHECK(encode_higman(mono_of(elem("e{}", sig0, 0))).length() == 0);

  SignaturePtr sig1 = fd(1);
  HigmanCode d1 = encode_higman(mono_of(elem("x[1,2]*e{2}", sig1, 2)));
  REQUIRE(d1.length() == 2);
  for (const auto& entry : d1.entries()) {
    REQUIRE(entry.size() == 2);
    CHECK(entry[1] == HigmanCode::Pair{{1}, 2});  // fixed tail block (u_2, 2)
  }

  CHECK_THROWS_AS(encode_higman(ModuleMonomial(0, OIMorphism(0, 2, {}),
                                               RingMonomial(VariableScheme::degree_d(2), 2))),
                  SchemeMismatch);
}

TEST_CASE("Higman embedding basics") {
  SignaturePtr sig = fd(1);
  HigmanCode a = encode_higman(mono_of(elem("x[1,1]*e{1}", sig, 1)));
  HigmanCode b = encode_higman(mono_of(elem("x[1,1]*x[1,2]*e{2}", sig, 2)));
  CHECK(higman_leq(a, a));
  CHECK(higman_leq(a, b));  // matches the positive divisibility example
  HigmanCode empty = encode_higman(mono_of(elem("e{}", f0(), 0)));
  CHECK(higman_leq(empty, encode_higman(mono_of(elem("x[1,1]*e{}", f0(), 2)))));
  CHECK_THROWS_AS(higman_leq(a, encode_higman(mono_of(elem("x[1,1]*e{}", f0(), 1)))),
                  ParameterMismatch);
}

TEST_CASE("greedy embedding agrees with the reference matcher") {
  std::mt19937_64 rng(31);
  SignaturePtr sig = fd(1, VariableScheme::tensor(2));
  for (int i = 0; i < 4000; ++i) {
    std::uniform_int_distribution<int> wd(1, 4);
    ModuleMonomial a = random_module_monomial(*sig, wd(rng), 2, rng);
    ModuleMonomial b = random_module_monomial(*sig, wd(rng), 3, rng);
    HigmanCode ca = encode_higman(a), cb = encode_higman(b);
    CHECK(higman_leq(ca, cb) == higman_leq_dp(ca, cb));
  }
}

TEST_CASE("minimal elements form a dominating antichain") {
  SignaturePtr sig = fd(1);
  ModuleMonomial mu = mono_of(elem("x[1,1]*e{1}", sig, 1));
  ModuleMonomial nu = mono_of(elem("x[1,1]*x[1,2]*e{2}", sig, 2));
  CHECK(minimal_elements({mu}) == std::vector<ModuleMonomial>{mu});
  CHECK(minimal_elements({mu, nu}) == std::vector<ModuleMonomial>{mu});
  CHECK(minimal_elements({nu, mu, nu}) == std::vector<ModuleMonomial>{mu});

  // cycle monomials, routed through F(0) over the degree-2 scheme
  SignaturePtr cyc = f0(VariableScheme::degree_d(2));
  std::vector<ModuleMonomial> cycles;
  for (int i = 3; i <= 6; ++i)
    cycles.emplace_back(0, OIMorphism(0, i, {}), test::cycle_monomial(i));
  CHECK(minimal_elements(cycles) == cycles);

  // output dominates the input
  std::mt19937_64 rng(37);
  std::vector<ModuleMonomial> pool;
  for (int i = 0; i < 25; ++i)
    pool.push_back(random_module_monomial(*sig, 1 + static_cast<int>(i % 3), 2, rng));
  auto mins = minimal_elements(pool);
  for (const ModuleMonomial& m : pool) {
    bool dominated = false;
    for (const ModuleMonomial& lower : mins)
      if (oi_divides(lower, m)) {
        dominated = true;
        break;
      }
    CHECK(dominated);
  }
  for (const ModuleMonomial& a : mins)
    for (const ModuleMonomial& b : mins)
      if (!(a == b)) CHECK_FALSE(oi_divides(a, b));
}

TEST_CASE("divisibility equals membership in the generated submodule") {
  // nu is OI-divisible by mu iff nu appears among the monomial multiples of
  // OI-images of mu, exhaustively at small width
  SignaturePtr sig = fd(1);
  std::vector<ModuleMonomial> small;
  for (int n = 1; n <= 3; ++n)
    for (const auto& mono : oracle::module_monomials_of_degree(*sig, n, 1))
      small.push_back(mono);
  for (int n = 1; n <= 3; ++n)
    for (const auto& mono : oracle::module_monomials_of_degree(*sig, n, 2))
      small.push_back(mono);

  for (const ModuleMonomial& mu : small) {
    for (const ModuleMonomial& nu : small) {
      bool member = false;
      int extra = nu.ring().total_degree() - mu.ring().total_degree();
      if (extra >= 0) {
        for (const OIMorphism& eps : enumerate_oi(mu.width(), nu.width())) {
          ModuleMonomial image = apply_morphism(eps, mu);
          for (const RingMonomial& w : monomials_of_degree(kC1, nu.width(), extra)) {
            if (ModuleMonomial(image.slot(), image.basis_map(), image.ring() * w) == nu) {
              member = true;
              break;
            }
          }
          if (member) break;
        }
      }
      CHECK(static_cast<bool>(oi_divides(mu, nu)) == member);
    }
  }
}
