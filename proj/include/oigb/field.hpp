#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "oigb/errors.hpp"

namespace oigb {

class FieldElem;

/* Coefficient field of a computation session: the rationals, or a prime
 * field F_p with p < 2^31. Selected once, carried by every scalar. */
class Field {
 public:
  enum class Kind { Rationals, Prime };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  static Field prime(std::int64_t p);  // throws NonPrimeModulus

  Kind kind() const { return kind_; }
  std::int64_t modulus() const { return p_; }

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(std::int64_t value) const;
  FieldElem from_ratio(std::int64_t num, std::int64_t den) const;

  /* Grammar: `-3/7`, `0`, `4`. In F_p any integer text is reduced mod p. */
  FieldElem parse(std::string_view text) const;

  std::string str() const;

 private:
  Field(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::int64_t p_;
};

/* Immutable exact scalar. Rationals are kept in lowest terms with positive
 * denominator (mpq invariant); prime-field values as residues in [0, p). */
class FieldElem {
 public:
  FieldElem() : field_(Field::rationals()), res_(0) {}

  const Field& field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;  // throws DivisionByZero
  FieldElem operator-() const;
  FieldElem inverse() const;  // throws DivisionByZero

  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  std::string str() const;

  /* Rational value; only meaningful for Kind::Rationals. */
  const mpq_class& rational() const { return rat_; }
  std::int64_t residue() const { return res_; }

 private:
  friend class Field;
  FieldElem(Field field, mpq_class q) : field_(field), rat_(std::move(q)), res_(0) {}
  FieldElem(Field field, std::int64_t r) : field_(field), res_(r) {}

  void check_same_field(const FieldElem& o) const;

  Field field_;
  mpq_class rat_;
  std::int64_t res_;
};

}  // namespace oigb
