#include <doctest.h>

#include <random>

#include "oigb/field.hpp"

using namespace oigb;

TEST_CASE("rational arithmetic is exact") {
  Field q = Field::rationals();
  CHECK((q.from_ratio(1, 2) + q.from_ratio(1, 3)).str() == "5/6");
  CHECK(q.parse("2/4").str() == "1/2");
  CHECK(q.parse("-3/7").str() == "-3/7");
  CHECK((q.parse("-4/-8")).str() == "1/2");
  CHECK(q.zero().is_zero());
  CHECK(q.one().is_one());
  CHECK((q.from_int(7) - q.from_int(7)).is_zero());
}

TEST_CASE("prime field arithmetic") {
  Field f5 = Field::prime(5);
  CHECK(f5.from_int(2).inverse().str() == "3");
  CHECK((f5.from_int(2) * f5.from_int(3)).is_one());
  CHECK(f5.from_int(-1).str() == "4");
  CHECK(f5.parse("7").str() == "2");
  CHECK(f5.parse("1/2").str() == "3");
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(Field::prime(4), NonPrimeModulus);
  CHECK_THROWS_AS(Field::prime(1), NonPrimeModulus);
  CHECK_THROWS_AS(Field::prime(0), NonPrimeModulus);
  CHECK_NOTHROW(Field::prime(2));
  CHECK_NOTHROW(Field::prime(1000003));
  Field q = Field::rationals();
  CHECK_THROWS_AS(q.one() / q.zero(), DivisionByZero);
  CHECK_THROWS_AS(q.zero().inverse(), DivisionByZero);
  CHECK_THROWS_AS(q.one() + Field::prime(5).one(), FieldMismatch);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 23);
  for (Field field : {Field::rationals(), Field::prime(97)}) {
    for (int i = 0; i < 300; ++i) {
      FieldElem a = field.from_ratio(num(rng), den(rng));
      FieldElem b = field.from_ratio(num(rng), den(rng));
      FieldElem c = field.from_ratio(num(rng), den(rng));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == field.zero());
      if (!a.is_zero()) CHECK(a * a.inverse() == field.one());
      CHECK(field.parse(a.str()) == a);
    }
  }
}

TEST_CASE("scalar parse rejects junk") {
  Field q = Field::rationals();
  CHECK_THROWS_AS(q.parse(""), ParseError);
  CHECK_THROWS_AS(q.parse("a/b"), ParseError);
  CHECK_THROWS_AS(q.parse("1/"), ParseError);
  CHECK_THROWS_AS(q.parse("1/0"), DivisionByZero);
}
