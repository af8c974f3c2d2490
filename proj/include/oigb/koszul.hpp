#pragma once

#include <map>
#include <optional>
#include <utility>

#include "oigb/resolution.hpp"

namespace oigb {

/* Images a_{n,t} of a width-1 element under the point maps 1 |-> t. */
std::vector<Polynomial> koszul_images(const Polynomial& element, int width);

/* The width-n component of the Koszul complex determined by one width-1
 * element a:  F(n) -> ... -> F(1) -> F(0), with
 * e_pi |-> sum_j (-1)^{j+1} a_{n,pi(j)} e_{pi_j} extended linearly; graded
 * with F(d) shifted by d*deg(a). */
class KoszulComplex {
 public:
  KoszulComplex(Polynomial element, int width);  // element at width 1; ZeroInput if zero

  const Polynomial& element() const { return element_; }
  int width() const { return width_; }
  int element_degree() const;  // NonHomogeneous when the element is not

  /* Single-slot signature of the F(d) component (shift d*deg). */
  SignaturePtr component_signature(int d) const;

  /* Apply the differential F(d)_n -> F(d-1)_n; 1 <= d <= width. */
  ModuleElement differential(int d, const ModuleElement& q) const;

  /* phi_{d-1} o phi_d = 0, checked symbolically on every basis symbol. */
  bool complex_property_holds() const;

  /* Homology dimensions by exact rank computation, nonzero entries only:
   * (p, j) -> dim for p <= max_p, j <= max_degree. */
  std::map<std::pair<int, int>, long> homology(int max_degree, int max_p) const;

 private:
  long rank_of_differential(int d, int degree) const;

  Polynomial element_;
  int width_;
  std::optional<int> degree_;  // set when the element is homogeneous
  std::vector<Polynomial> images_;
};

}  // namespace oigb
