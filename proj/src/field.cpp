#include "oigb/field.hpp"

#include <cctype>

namespace oigb {

namespace {

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // extended Euclid; a in [1, p)
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return t;
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t(1) << 31))
    throw NonPrimeModulus("modulus out of range: " + std::to_string(p));
  mpz_class z(static_cast<long>(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw NonPrimeModulus("composite modulus: " + std::to_string(p));
  return Field(Kind::Prime, p);
}

FieldElem Field::zero() const { return from_int(0); }
FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(std::int64_t value) const {
  if (kind_ == Kind::Rationals) return FieldElem(*this, mpq_class(static_cast<long>(value)));
  std::int64_t r = value % p_;
  if (r < 0) r += p_;
  return FieldElem(*this, r);
}

FieldElem Field::from_ratio(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw DivisionByZero("zero denominator");
  return from_int(num) / from_int(den);
}

FieldElem Field::parse(std::string_view text) const {
  size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  std::string body(text.substr(begin, end - begin));
  if (body.empty()) throw ParseError("empty scalar");
  std::string num = body, den = "1";
  if (auto slash = body.find('/'); slash != std::string::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  auto valid = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  if (!valid(num) || !valid(den)) throw ParseError("bad scalar: " + body);
  mpq_class q;
  if (q.get_num().set_str(num, 10) != 0 || q.get_den().set_str(den, 10) != 0)
    throw ParseError("bad scalar: " + body);
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in " + body);
  q.canonicalize();
  if (kind_ == Kind::Rationals) return FieldElem(*this, q);
  mpz_class p(static_cast<long>(p_));
  mpz_class n = q.get_num() % p, d = q.get_den() % p;
  if (d == 0) throw DivisionByZero("denominator divisible by modulus in " + body);
  std::int64_t nv = n.get_si() % p_, dv = d.get_si() % p_;
  if (nv < 0) nv += p_;
  if (dv < 0) dv += p_;
  return FieldElem(*this, mod_mul(nv, mod_inverse(dv, p_), p_));
}

std::string Field::str() const {
  if (kind_ == Kind::Rationals) return "Q";
  return "Fp(" + std::to_string(p_) + ")";
}

void FieldElem::check_same_field(const FieldElem& o) const {
  if (field_ != o.field_)
    throw FieldMismatch("mixed coefficient fields: " + field_.str() + " vs " + o.field_.str());
}

bool FieldElem::is_zero() const {
  return field_.kind() == Field::Kind::Rationals ? rat_ == 0 : res_ == 0;
}

bool FieldElem::is_one() const {
  return field_.kind() == Field::Kind::Rationals ? rat_ == 1 : res_ == 1;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same_field(o);
  if (field_.kind() == Field::Kind::Rationals) return FieldElem(field_, mpq_class(rat_ + o.rat_));
  std::int64_t r = res_ + o.res_;
  if (r >= field_.modulus()) r -= field_.modulus();
  return FieldElem(field_, r);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same_field(o);
  if (field_.kind() == Field::Kind::Rationals) return FieldElem(field_, mpq_class(rat_ - o.rat_));
  std::int64_t r = res_ - o.res_;
  if (r < 0) r += field_.modulus();
  return FieldElem(field_, r);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same_field(o);
  if (field_.kind() == Field::Kind::Rationals) return FieldElem(field_, mpq_class(rat_ * o.rat_));
  return FieldElem(field_, mod_mul(res_, o.res_, field_.modulus()));
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::operator-() const {
  if (field_.kind() == Field::Kind::Rationals) return FieldElem(field_, mpq_class(-rat_));
  return FieldElem(field_, res_ == 0 ? 0 : field_.modulus() - res_);
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (field_.kind() == Field::Kind::Rationals) return FieldElem(field_, mpq_class(1 / rat_));
  return FieldElem(field_, mod_inverse(res_, field_.modulus()));
}

bool FieldElem::operator==(const FieldElem& o) const {
  if (field_ != o.field_) return false;
  return field_.kind() == Field::Kind::Rationals ? rat_ == o.rat_ : res_ == o.res_;
}

std::string FieldElem::str() const {
  if (field_.kind() == Field::Kind::Rationals) return rat_.get_str();
  return std::to_string(res_);
}

}  // namespace oigb
