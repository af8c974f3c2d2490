#include "oigb/polyring.hpp"

#include <algorithm>

namespace oigb {

VariableScheme VariableScheme::tensor(int rows) {
  if (rows < 1) throw SchemeMismatch("tensor scheme needs c >= 1");
  return VariableScheme(Kind::Tensor, rows, 0);
}

VariableScheme VariableScheme::degree_d(int degree) {
  if (degree < 0) throw SchemeMismatch("degree scheme needs d >= 0");
  return VariableScheme(Kind::DegreeD, 0, degree);
}

long VariableScheme::variable_count(int width) const {
  if (kind_ == Kind::Tensor) return static_cast<long>(rows_) * width;
  long count = 1;
  for (int i = 1; i <= degree_; ++i) count = count * (width - i + 1) / i;
  return width >= degree_ ? count : 0;
}

std::string VariableScheme::str() const {
  if (kind_ == Kind::Tensor) return "tensor " + std::to_string(rows_);
  return "degree " + std::to_string(degree_);
}

VariableScheme VariableScheme::parse(std::string_view text) {
  std::string s(text);
  auto space = s.find(' ');
  if (space == std::string::npos) throw ParseError("bad scheme: " + s);
  std::string kind = s.substr(0, space);
  int arg = 0;
  try {
    arg = std::stoi(s.substr(space + 1));
  } catch (const std::exception&) {
    throw ParseError("bad scheme argument: " + s);
  }
  if (kind == "tensor") return tensor(arg);
  if (kind == "degree") return degree_d(arg);
  throw ParseError("unknown scheme kind: " + kind);
}

RingMonomial::RingMonomial(VariableScheme scheme, int width)
    : scheme_(scheme), width_(width) {
  if (width < 0 || width > kMaxWidth) throw WidthMismatch("monomial width out of range");
}

RingMonomial::RingMonomial(VariableScheme scheme, int width,
                           std::vector<std::pair<VarKey, int>> factors)
    : scheme_(scheme), width_(width), factors_(std::move(factors)) {
  if (width < 0 || width > kMaxWidth) throw WidthMismatch("monomial width out of range");
  std::sort(factors_.begin(), factors_.end());
  // merge duplicate keys, drop zero exponents
  size_t out = 0;
  for (size_t i = 0; i < factors_.size();) {
    VarKey key = factors_[i].first;
    long exp = 0;
    while (i < factors_.size() && factors_[i].first == key) exp += factors_[i++].second;
    if (exp < 0) throw SchemeMismatch("negative exponent");
    if (exp > 0) factors_[out++] = {std::move(key), static_cast<int>(exp)};
  }
  factors_.resize(out);
  validate();
}

RingMonomial RingMonomial::variable(VariableScheme scheme, int width, VarKey key, int exp) {
  return RingMonomial(scheme, width, {{std::move(key), exp}});
}

void RingMonomial::validate() const {
  for (const auto& [key, exp] : factors_) {
    if (exp < 1) throw SchemeMismatch("exponent must be positive");
    if (scheme_.kind() == VariableScheme::Kind::Tensor) {
      if (key.idx.size() != 2 || key.idx[0] < 1 || key.idx[0] > scheme_.rows() || key.idx[1] < 1 ||
          key.idx[1] > width_)
        throw SchemeMismatch("bad tensor variable key at width " + std::to_string(width_));
    } else {
      if (static_cast<int>(key.idx.size()) != scheme_.degree())
        throw SchemeMismatch("bad degree-d variable key arity");
      int prev = 0;
      for (int v : key.idx) {
        if (v <= prev || v > width_) throw SchemeMismatch("degree-d key not increasing in width");
        prev = v;
      }
    }
  }
}

int RingMonomial::total_degree() const {
  int deg = 0;
  for (const auto& [key, exp] : factors_) deg += exp;
  return deg;
}

int RingMonomial::exponent(const VarKey& key) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), key,
                             [](const auto& f, const VarKey& k) { return f.first < k; });
  return it != factors_.end() && it->first == key ? it->second : 0;
}

RingMonomial RingMonomial::operator*(const RingMonomial& o) const {
  if (scheme_ != o.scheme_) throw SchemeMismatch("monomial product across schemes");
  if (width_ != o.width_) throw WidthMismatch("monomial product across widths");
  std::vector<std::pair<VarKey, int>> merged = factors_;
  merged.insert(merged.end(), o.factors_.begin(), o.factors_.end());
  return RingMonomial(scheme_, width_, std::move(merged));
}

bool RingMonomial::divides(const RingMonomial& o) const {
  if (scheme_ != o.scheme_) throw SchemeMismatch("divisibility across schemes");
  if (width_ != o.width_) return false;
  for (const auto& [key, exp] : factors_)
    if (o.exponent(key) < exp) return false;
  return true;
}

RingMonomial RingMonomial::divide_by(const RingMonomial& o) const {
  if (!o.divides(*this)) throw SchemeMismatch("inexact monomial division");
  std::vector<std::pair<VarKey, int>> out;
  auto it = o.factors_.begin();
  for (const auto& [key, exp] : factors_) {
    int sub = 0;
    while (it != o.factors_.end() && it->first < key) ++it;
    if (it != o.factors_.end() && it->first == key) sub = it->second;
    if (exp - sub > 0) out.emplace_back(key, exp - sub);
  }
  return RingMonomial(scheme_, width_, std::move(out));
}

RingMonomial RingMonomial::lcm(const RingMonomial& a, const RingMonomial& b) {
  if (a.scheme_ != b.scheme_) throw SchemeMismatch("lcm across schemes");
  if (a.width_ != b.width_) throw WidthMismatch("lcm across widths");
  std::vector<std::pair<VarKey, int>> out;
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first))
      out.push_back(*ia++);
    else if (ia == a.factors_.end() || ib->first < ia->first)
      out.push_back(*ib++);
    else {
      out.emplace_back(ia->first, std::max(ia->second, ib->second));
      ++ia, ++ib;
    }
  }
  return RingMonomial(a.scheme_, a.width_, std::move(out));
}

std::string RingMonomial::str() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& [key, exp] : factors_) {
    if (!s.empty()) s += "*";
    if (scheme_.kind() == VariableScheme::Kind::Tensor) {
      s += "x[" + std::to_string(key.idx[0]) + "," + std::to_string(key.idx[1]) + "]";
    } else {
      s += "x(";
      for (size_t i = 0; i < key.idx.size(); ++i) s += (i ? "," : "") + std::to_string(key.idx[i]);
      s += ")";
    }
    if (exp > 1) s += "^" + std::to_string(exp);
  }
  return s;
}

Polynomial::Polynomial(VariableScheme scheme, int width, Field field)
    : scheme_(scheme), width_(width), field_(field) {}

Polynomial Polynomial::from_term(const RingMonomial& mono, const FieldElem& coeff) {
  Polynomial p(mono.scheme(), mono.width(), coeff.field());
  p.add_term(mono, coeff);
  return p;
}

void Polynomial::add_term(const RingMonomial& mono, const FieldElem& coeff) {
  if (mono.scheme() != scheme_) throw SchemeMismatch("term scheme mismatch");
  if (mono.width() != width_) throw WidthMismatch("term width mismatch");
  if (coeff.field() != field_) throw FieldMismatch("term coefficient field mismatch");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& o) const {
  if (scheme_ != o.scheme_) throw SchemeMismatch("polynomial scheme mismatch");
  if (width_ != o.width_) throw WidthMismatch("polynomial width mismatch");
  if (field_ != o.field_) throw FieldMismatch("polynomial field mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  Polynomial out = *this;
  for (const auto& [mono, coeff] : o.terms_) out.add_term(mono, coeff);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_compatible(o);
  Polynomial out = *this;
  for (const auto& [mono, coeff] : o.terms_) out.add_term(mono, -coeff);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  Polynomial out(scheme_, width_, field_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(scheme_, width_, field_);
  for (const auto& [mono, coeff] : terms_) out.add_term(mono, -coeff);
  return out;
}

Polynomial Polynomial::scaled(const FieldElem& c) const {
  Polynomial out(scheme_, width_, field_);
  if (c.is_zero()) return out;
  for (const auto& [mono, coeff] : terms_) out.add_term(mono, coeff * c);
  return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return scheme_ == o.scheme_ && width_ == o.width_ && field_ == o.field_ && terms_ == o.terms_;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  int deg = terms_.begin()->first.total_degree();
  for (const auto& [mono, coeff] : terms_)
    if (mono.total_degree() != deg) return std::nullopt;
  return deg;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [mono, coeff] : terms_) {
    std::string c = coeff.str();
    bool negative = !c.empty() && c[0] == '-';
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    if (negative) c = c.substr(1);
    if (mono.is_unit())
      s += c;
    else if (c == "1")
      s += mono.str();
    else
      s += c + "*" + mono.str();
  }
  return s;
}

namespace {

template <typename Morphism>
VarKey map_key(const Morphism& map, const VariableScheme& scheme, const VarKey& key) {
  VarKey out = key;
  if (scheme.kind() == VariableScheme::Kind::Tensor) {
    out.idx[1] = map(key.idx[1]);
  } else {
    for (int& v : out.idx) v = map(v);
    std::sort(out.idx.begin(), out.idx.end());  // canonical form; no-op for OI maps
  }
  return out;
}

template <typename Morphism>
RingMonomial apply_to_monomial(const Morphism& map, const RingMonomial& mono) {
  if (map.source_width() != mono.width())
    throw WidthMismatch("morphism source width != monomial width");
  std::vector<std::pair<VarKey, int>> factors;
  factors.reserve(mono.factors().size());
  for (const auto& [key, exp] : mono.factors())
    factors.emplace_back(map_key(map, mono.scheme(), key), exp);
  return RingMonomial(mono.scheme(), map.target_width(), std::move(factors));
}

template <typename Morphism>
Polynomial apply_to_polynomial(const Morphism& map, const Polynomial& poly) {
  if (map.source_width() != poly.width())
    throw WidthMismatch("morphism source width != polynomial width");
  Polynomial out(poly.scheme(), map.target_width(), poly.field());
  for (const auto& [mono, coeff] : poly.terms()) out.add_term(apply_to_monomial(map, mono), coeff);
  return out;
}

template <typename Morphism, typename Witness>
std::vector<Witness> divisibility_witnesses(const std::vector<Morphism>& maps,
                                            const RingMonomial& divisor,
                                            const RingMonomial& target, bool first_only) {
  std::vector<Witness> out;
  for (const Morphism& map : maps) {
    RingMonomial image = apply_to_monomial(map, divisor);
    if (image.divides(target)) {
      out.push_back(Witness{map, target.divide_by(image)});
      if (first_only) break;
    }
  }
  return out;
}

}  // namespace

RingMonomial apply_morphism(const OIMorphism& map, const RingMonomial& mono) {
  return apply_to_monomial(map, mono);
}
RingMonomial apply_morphism(const FIMorphism& map, const RingMonomial& mono) {
  return apply_to_monomial(map, mono);
}
Polynomial apply_morphism(const OIMorphism& map, const Polynomial& poly) {
  return apply_to_polynomial(map, poly);
}
Polynomial apply_morphism(const FIMorphism& map, const Polynomial& poly) {
  return apply_to_polynomial(map, poly);
}

std::optional<OIDivWitness> oi_divides(const RingMonomial& divisor, const RingMonomial& target) {
  if (divisor.scheme() != target.scheme()) throw SchemeMismatch("divisibility across schemes");
  auto found = divisibility_witnesses<OIMorphism, OIDivWitness>(
      enumerate_oi(divisor.width(), target.width()), divisor, target, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<OIDivWitness> oi_divides_all(const RingMonomial& divisor, const RingMonomial& target) {
  if (divisor.scheme() != target.scheme()) throw SchemeMismatch("divisibility across schemes");
  return divisibility_witnesses<OIMorphism, OIDivWitness>(
      enumerate_oi(divisor.width(), target.width()), divisor, target, false);
}

std::optional<FIDivWitness> fi_divides(const RingMonomial& divisor, const RingMonomial& target) {
  if (divisor.scheme() != target.scheme()) throw SchemeMismatch("divisibility across schemes");
  auto found = divisibility_witnesses<FIMorphism, FIDivWitness>(
      enumerate_fi(divisor.width(), target.width()), divisor, target, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<FIDivWitness> fi_divides_all(const RingMonomial& divisor, const RingMonomial& target) {
  if (divisor.scheme() != target.scheme()) throw SchemeMismatch("divisibility across schemes");
  return divisibility_witnesses<FIMorphism, FIDivWitness>(
      enumerate_fi(divisor.width(), target.width()), divisor, target, false);
}

bool in_veronese(const Polynomial& poly, int e) {
  if (e < 1) throw ParameterMismatch("Veronese index must be positive");
  for (const auto& [mono, coeff] : poly.terms())
    if (mono.total_degree() % e != 0) return false;
  return true;
}

bool in_segre(const RingMonomial& mono) {
  if (mono.scheme().kind() != VariableScheme::Kind::Tensor)
    throw SchemeMismatch("Segre membership is a tensor-scheme predicate");
  std::vector<long> row_mass(static_cast<size_t>(mono.scheme().rows()), 0);
  for (const auto& [key, exp] : mono.factors()) row_mass[static_cast<size_t>(key.idx[0]) - 1] += exp;
  for (long mass : row_mass)
    if (mass != row_mass[0]) return false;
  return true;
}

std::vector<VarKey> variable_keys(const VariableScheme& scheme, int width) {
  std::vector<VarKey> keys;
  if (scheme.kind() == VariableScheme::Kind::Tensor) {
    for (int i = 1; i <= scheme.rows(); ++i)
      for (int j = 1; j <= width; ++j) keys.push_back(VarKey{{i, j}});
  } else {
    for (const OIMorphism& map : enumerate_oi(scheme.degree(), width))
      keys.push_back(VarKey{map.image()});
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::vector<RingMonomial> monomials_of_degree(const VariableScheme& scheme, int width, int degree) {
  std::vector<RingMonomial> out;
  if (degree < 0) return out;
  std::vector<VarKey> keys = variable_keys(scheme, width);
  if (degree == 0) {
    out.emplace_back(scheme, width);
    return out;
  }
  if (keys.empty()) return out;
  std::vector<std::pair<VarKey, int>> current;
  auto rec = [&](auto&& self, size_t key_index, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(scheme, width, current);
      return;
    }
    if (key_index == keys.size()) return;
    if (key_index + 1 == keys.size()) {
      current.emplace_back(keys[key_index], remaining);
      out.emplace_back(scheme, width, current);
      current.pop_back();
      return;
    }
    for (int e = remaining; e >= 1; --e) {
      current.emplace_back(keys[key_index], e);
      self(self, key_index + 1, remaining - e);
      current.pop_back();
    }
    self(self, key_index + 1, remaining);
  };
  rec(rec, 0, degree);
  return out;
}

}  // namespace oigb
