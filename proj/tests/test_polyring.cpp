#include <doctest.h>

#include <random>

#include "oigb/ordering.hpp"
#include "test_support.hpp"

using namespace oigb;
using oigb::test::cycle_monomial;
using oigb::test::rmono;

namespace {

const VariableScheme kC1 = VariableScheme::tensor(1);
const VariableScheme kC2 = VariableScheme::tensor(2);
const VariableScheme kD2 = VariableScheme::degree_d(2);

std::vector<RingMonomial> all_monomials_up_to(const VariableScheme& scheme, int width,
                                              int max_degree) {
  std::vector<RingMonomial> out;
  for (int d = 0; d <= max_degree; ++d)
    for (const RingMonomial& m : monomials_of_degree(scheme, width, d)) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("morphism action on the ring") {
  // tensor: x[1,1] -> x[1,2] under the point map 1 |-> 2
  CHECK(apply_morphism(OIMorphism(1, 2, {2}), rmono("x[1,1]", kC1, 1)) == rmono("x[1,2]", kC1, 2));
  // identity law
  RingMonomial m = rmono("x[1,1]^2*x[2,3]", kC2, 3);
  CHECK(apply_morphism(OIMorphism::identity(3), m) == m);
  // degree-2 scheme: x(1,2) -> x(1,3) under (1,3,4)
  CHECK(apply_morphism(OIMorphism(3, 4, {1, 3, 4}), rmono("x(1,2)", kD2, 3)) ==
        rmono("x(1,3)", kD2, 4));
  CHECK_THROWS_AS(apply_morphism(OIMorphism(1, 2, {2}), rmono("x[1,1]", kC1, 2)), WidthMismatch);
}

TEST_CASE("functoriality and ring homomorphism, sampled") {
  std::mt19937_64 rng(7);
  Field q = Field::rationals();
  for (int i = 0; i < 200; ++i) {
    std::uniform_int_distribution<int> width_dist(1, 3);
    int m = width_dist(rng);
    auto mid_maps = enumerate_oi(m, m + 1);
    auto top_maps = enumerate_oi(m + 1, m + 2);
    std::uniform_int_distribution<size_t> pick_mid(0, mid_maps.size() - 1),
        pick_top(0, top_maps.size() - 1);
    const OIMorphism& first = mid_maps[pick_mid(rng)];
    const OIMorphism& second = top_maps[pick_top(rng)];

    for (const VariableScheme& scheme : {kC1, kC2}) {
      Polynomial f(scheme, m, q);
      Polynomial g(scheme, m, q);
      std::uniform_int_distribution<int> coeff(-3, 3);
      for (int t = 0; t < 3; ++t) {
        f.add_term(random_ring_monomial(scheme, m, 3, rng), q.from_int(coeff(rng)));
        g.add_term(random_ring_monomial(scheme, m, 3, rng), q.from_int(coeff(rng)));
      }
      CHECK(apply_morphism(compose(second, first), f) ==
            apply_morphism(second, apply_morphism(first, f)));
      CHECK(apply_morphism(first, f * g) == apply_morphism(first, f) * apply_morphism(first, g));
      CHECK(apply_morphism(first, f + g) == apply_morphism(first, f) + apply_morphism(first, g));
    }
  }
}

TEST_CASE("OI-divisibility of ring monomials") {
  // the cycle monomials: u_3 does not divide u_4
  CHECK_FALSE(oi_divides(cycle_monomial(3), cycle_monomial(4)));
  // reflexivity with identity witness
  RingMonomial u3 = cycle_monomial(3);
  auto self = oi_divides(u3, u3);
  REQUIRE(self);
  CHECK(self->map == OIMorphism::identity(3));
  CHECK(self->cofactor.is_unit());
  // first-witness determinism
  auto w = oi_divides(rmono("x[1,1]", kC1, 1), rmono("x[1,1]*x[1,2]", kC1, 2));
  REQUIRE(w);
  CHECK(w->map == OIMorphism(1, 2, {1}));
  CHECK(w->cofactor == rmono("x[1,2]", kC1, 2));
  // every witness reconstructs the target
  for (const auto& witness :
       oi_divides_all(rmono("x[1,1]", kC1, 1), rmono("x[1,1]*x[1,2]", kC1, 2)))
    CHECK(apply_morphism(witness.map, rmono("x[1,1]", kC1, 1)) * witness.cofactor ==
          rmono("x[1,1]*x[1,2]", kC1, 2));
  CHECK_THROWS_AS(oi_divides(rmono("x[1,1]", kC1, 1), rmono("x(1,2)", kD2, 2)), SchemeMismatch);
}

TEST_CASE("FI-divisibility of ring monomials") {
  CHECK_FALSE(fi_divides(cycle_monomial(3), cycle_monomial(4)));
  RingMonomial u4 = cycle_monomial(4);
  CHECK(fi_divides(u4, u4));
  auto w = fi_divides(rmono("x[1,2]", kC1, 2), rmono("x[1,1]", kC1, 2));
  REQUIRE(w);
  CHECK(w->map == FIMorphism(2, 2, {2, 1}));
  CHECK(w->cofactor.is_unit());
}

TEST_CASE("cycle monomials form an antichain in both flavors") {
  for (int i = 3; i <= 6; ++i) {
    for (int j = 3; j <= 6; ++j) {
      if (i == j) continue;
      CHECK_FALSE(oi_divides(cycle_monomial(i), cycle_monomial(j)));
      if (i < j) CHECK_FALSE(fi_divides(cycle_monomial(i), cycle_monomial(j)));
    }
  }
}

TEST_CASE("divisibility is transitive, exhaustively at small width") {
  auto monos1 = all_monomials_up_to(kC1, 1, 2);
  auto monos2 = all_monomials_up_to(kC1, 2, 2);
  auto monos3 = all_monomials_up_to(kC1, 3, 2);
  for (const RingMonomial& a : monos1)
    for (const RingMonomial& b : monos2)
      for (const RingMonomial& c : monos3)
        if (oi_divides(a, b) && oi_divides(b, c)) CHECK(oi_divides(a, c));
}

TEST_CASE("Veronese membership") {
  Field q = Field::rationals();
  Polynomial f = parse_polynomial("x[1,1]*x[1,2]", kC1, 2, q);
  CHECK(in_veronese(f, 2));
  CHECK_FALSE(in_veronese(parse_polynomial("x[1,1]", kC1, 2, q), 2));
  CHECK(in_veronese(parse_polynomial("x[1,1]^2*x[1,2] + 5", kC1, 2, q), 3));
  CHECK(in_veronese(Polynomial(kC1, 2, q), 2));
}

TEST_CASE("Segre membership") {
  CHECK(in_segre(rmono("x[1,1]*x[2,3]", kC2, 3)));
  CHECK_FALSE(in_segre(rmono("x[1,1]^2*x[2,1]", kC2, 1)));
  CHECK(in_segre(rmono("x[1,1]^3*x[1,2]", kC1, 2)));  // single row
  CHECK(in_segre(RingMonomial(kC2, 2)));
  CHECK_THROWS_AS(in_segre(rmono("x(1,2)", kD2, 2)), SchemeMismatch);
}

TEST_CASE("divisibility-closed subalgebras: cofactors inherit membership") {
  std::mt19937_64 rng(11);
  int veronese_hits = 0, segre_hits = 0;
  for (int i = 0; i < 4000; ++i) {
    std::uniform_int_distribution<int> width_dist(1, 3);
    int m = width_dist(rng), n = m + width_dist(rng) % 2;
    auto maps = enumerate_oi(m, n);
    std::uniform_int_distribution<size_t> pick(0, maps.size() - 1);
    const OIMorphism& eps = maps[pick(rng)];
    RingMonomial mu = random_ring_monomial(kC2, m, 4, rng);
    RingMonomial kappa = random_ring_monomial(kC2, n, 4, rng);
    RingMonomial nu = apply_morphism(eps, mu) * kappa;
    Polynomial mu_poly = Polynomial::from_term(mu, Field::rationals().one());
    Polynomial kappa_poly = Polynomial::from_term(kappa, Field::rationals().one());
    Polynomial nu_poly = Polynomial::from_term(nu, Field::rationals().one());
    if (in_veronese(mu_poly, 2) && in_veronese(nu_poly, 2)) {
      CHECK(in_veronese(kappa_poly, 2));
      ++veronese_hits;
    }
    if (in_segre(mu) && in_segre(nu)) {
      CHECK(in_segre(kappa));
      ++segre_hits;
    }
  }
  CHECK(veronese_hits > 50);
  CHECK(segre_hits > 50);
}

TEST_CASE("polynomial arithmetic") {
  Field q = Field::rationals();
  Polynomial f = parse_polynomial("3/2*x[1,1]^2*x[1,2] - x[1,2] + 1", kC1, 2, q);
  CHECK((f - f).is_zero());
  CHECK((f + (-f)).is_zero());
  Polynomial sum = parse_polynomial("x[1,1] + x[1,2]", kC1, 2, q);
  Polynomial diff = parse_polynomial("x[1,1] - x[1,2]", kC1, 2, q);
  CHECK(sum * diff == parse_polynomial("x[1,1]^2 - x[1,2]^2", kC1, 2, q));
  CHECK((f.scaled(q.zero())).is_zero());
  CHECK(f.scaled(q.from_int(2)) == f + f);
  CHECK_THROWS_AS(f + Polynomial(kC1, 3, q), WidthMismatch);
  CHECK_THROWS_AS(f + Polynomial(kC2, 2, q), SchemeMismatch);
}

TEST_CASE("homogeneous degree detection") {
  Field q = Field::rationals();
  CHECK(parse_polynomial("x[1,1]^2 - x[1,1]*x[1,2]", kC1, 2, q).homogeneous_degree() == 2);
  CHECK_FALSE(parse_polynomial("x[1,1] + 1", kC1, 1, q).homogeneous_degree());
  CHECK(Polynomial(kC1, 1, q).homogeneous_degree() == 0);
}

TEST_CASE("monomial enumeration counts") {
  CHECK(monomials_of_degree(kC1, 2, 0).size() == 1);
  CHECK(monomials_of_degree(kC1, 2, 2).size() == 3);
  CHECK(monomials_of_degree(kC2, 2, 2).size() == 10);
  CHECK(monomials_of_degree(kD2, 4, 1).size() == 6);
  CHECK(monomials_of_degree(kD2, 1, 1).empty());  // no degree-2 keys at width 1
  CHECK(monomials_of_degree(kD2, 1, 0).size() == 1);
}
