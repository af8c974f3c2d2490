#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oigb/field.hpp"
#include "oigb/oi_category.hpp"

namespace oigb {

/* Variable scheme of a width-indexed polynomial ring: either the tensor
 * scheme with variables x[i,j] (i in [c], j in [n]), or the degree-d scheme
 * with one variable x(t1,...,td) per strictly increasing d-tuple in [n]. */
class VariableScheme {
 public:
  enum class Kind { Tensor, DegreeD };

  static VariableScheme tensor(int rows);
  static VariableScheme degree_d(int degree);

  Kind kind() const { return kind_; }
  int rows() const { return rows_; }      // c, Tensor only
  int degree() const { return degree_; }  // d, DegreeD only

  /* Number of variables at a given width. */
  long variable_count(int width) const;

  bool operator==(const VariableScheme& o) const = default;
  auto operator<=>(const VariableScheme& o) const = default;

  std::string str() const;  // "tensor 2" / "degree 2"
  static VariableScheme parse(std::string_view text);

 private:
  VariableScheme(Kind kind, int rows, int degree) : kind_(kind), rows_(rows), degree_(degree) {}

  Kind kind_;
  int rows_;
  int degree_;
};

/* Canonical variable key: Tensor {row, column}; DegreeD the increasing image
 * tuple. Lexicographically smaller keys denote greater variables, matching
 * x[i,j] > x[i',j'] iff i < i', or i = i' and j < j'. */
struct VarKey {
  std::vector<int> idx;
  auto operator<=>(const VarKey&) const = default;
};

/* A monomial at a fixed width: sorted sparse exponent list, exponents >= 1. */
class RingMonomial {
 public:
  RingMonomial(VariableScheme scheme, int width);  // the unit monomial
  RingMonomial(VariableScheme scheme, int width, std::vector<std::pair<VarKey, int>> factors);

  static RingMonomial variable(VariableScheme scheme, int width, VarKey key, int exp = 1);

  const VariableScheme& scheme() const { return scheme_; }
  int width() const { return width_; }
  const std::vector<std::pair<VarKey, int>>& factors() const { return factors_; }

  bool is_unit() const { return factors_.empty(); }
  int total_degree() const;
  int exponent(const VarKey& key) const;

  RingMonomial operator*(const RingMonomial& o) const;
  bool divides(const RingMonomial& o) const;           // same width, componentwise
  RingMonomial divide_by(const RingMonomial& o) const;  // exact; o | *this required
  static RingMonomial lcm(const RingMonomial& a, const RingMonomial& b);

  bool operator==(const RingMonomial& o) const = default;
  /* Structural order (width, then factor list); no algebraic meaning. */
  auto operator<=>(const RingMonomial& o) const = default;

  std::string str() const;

 private:
  void validate() const;

  VariableScheme scheme_;
  int width_;
  std::vector<std::pair<VarKey, int>> factors_;
};

/* Exact polynomial in a width-n ring; term map never stores zeros. */
class Polynomial {
 public:
  Polynomial(VariableScheme scheme, int width, Field field);  // zero
  static Polynomial from_term(const RingMonomial& mono, const FieldElem& coeff);

  const VariableScheme& scheme() const { return scheme_; }
  int width() const { return width_; }
  const Field& field() const { return field_; }
  const std::map<RingMonomial, FieldElem>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  void add_term(const RingMonomial& mono, const FieldElem& coeff);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const FieldElem& c) const;

  bool operator==(const Polynomial& o) const;

  /* Internal degree when homogeneous; nullopt otherwise (0 for the zero
   * polynomial by convention). */
  std::optional<int> homogeneous_degree() const;

  std::string str() const;

 private:
  void check_compatible(const Polynomial& o) const;

  VariableScheme scheme_;
  int width_;
  Field field_;
  std::map<RingMonomial, FieldElem> terms_;
};

/* Induced ring maps: x[i,j] -> x[i,map(j)]; degree-d variables x_pi -> x_{map o pi}.
 * The FI action on degree-d variables keeps the canonical sorted key. */
RingMonomial apply_morphism(const OIMorphism& map, const RingMonomial& mono);
RingMonomial apply_morphism(const FIMorphism& map, const RingMonomial& mono);
Polynomial apply_morphism(const OIMorphism& map, const Polynomial& poly);
Polynomial apply_morphism(const FIMorphism& map, const Polynomial& poly);

/* OI-divisibility of ring monomials, with the witness nu = map*(mu) * cofactor.
 * First witness in enumerate_oi order; *_all lists every witness. */
struct OIDivWitness {
  OIMorphism map;
  RingMonomial cofactor;
};
std::optional<OIDivWitness> oi_divides(const RingMonomial& divisor, const RingMonomial& target);
std::vector<OIDivWitness> oi_divides_all(const RingMonomial& divisor, const RingMonomial& target);

struct FIDivWitness {
  FIMorphism map;
  RingMonomial cofactor;
};
std::optional<FIDivWitness> fi_divides(const RingMonomial& divisor, const RingMonomial& target);
std::vector<FIDivWitness> fi_divides_all(const RingMonomial& divisor, const RingMonomial& target);

/* Membership in the e-th Veronese subalgebra: every term degree divisible by e. */
bool in_veronese(const Polynomial& poly, int e);

/* Segre-type subalgebra of the tensor scheme: equal exponent mass per row. */
bool in_segre(const RingMonomial& mono);

/* All monomials of the given total degree, deterministic order. */
std::vector<RingMonomial> monomials_of_degree(const VariableScheme& scheme, int width, int degree);

/* All variable keys at a width, in canonical (decreasing-variable) order. */
std::vector<VarKey> variable_keys(const VariableScheme& scheme, int width);

}  // namespace oigb
