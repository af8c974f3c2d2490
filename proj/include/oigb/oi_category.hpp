#pragma once

#include <compare>
#include <string>
#include <vector>

#include "oigb/errors.hpp"

namespace oigb {

/* Widths are dense image tuples; everything desk-scale lives far below this. */
inline constexpr int kMaxWidth = 64;

/* An order-preserving injection [m] -> [n], stored as its image tuple.
 * Values are 1-based. */
class OIMorphism {
 public:
  OIMorphism(int source_width, int target_width, std::vector<int> image);

  static OIMorphism identity(int n);

  int source_width() const { return source_; }
  int target_width() const { return target_; }
  const std::vector<int>& image() const { return image_; }

  /* Evaluation at j in [m]. */
  int operator()(int j) const { return image_[static_cast<size_t>(j) - 1]; }

  bool is_identity() const { return source_ == target_; }

  std::string str() const;  // [m->n: a1,...,am]

  auto operator<=>(const OIMorphism&) const = default;

 private:
  int source_;
  int target_;
  std::vector<int> image_;
};

/* An arbitrary injection [m] -> [n]. */
class FIMorphism {
 public:
  FIMorphism(int source_width, int target_width, std::vector<int> image);

  static FIMorphism identity(int n);

  int source_width() const { return source_; }
  int target_width() const { return target_; }
  const std::vector<int>& image() const { return image_; }
  int operator()(int j) const { return image_[static_cast<size_t>(j) - 1]; }

  std::string str() const;

  auto operator<=>(const FIMorphism&) const = default;

 private:
  int source_;
  int target_;
  std::vector<int> image_;
};

OIMorphism compose(const OIMorphism& outer, const OIMorphism& inner);
FIMorphism compose(const FIMorphism& outer, const FIMorphism& inner);

/* j |-> j as a map [m] -> [n]; requires m <= n. */
OIMorphism iota(int m, int n);

/* All order-preserving injections [m] -> [n], lexicographic by image tuple.
 * Empty when m > n. */
std::vector<OIMorphism> enumerate_oi(int m, int n);

/* All injections [m] -> [n], lexicographic by image tuple. */
std::vector<FIMorphism> enumerate_fi(int m, int n);

/* Factor an injection as monotone-after-permutation: map = monotone o perm,
 * where monotone has the same image set sorted increasingly. */
struct FIFactorization {
  OIMorphism monotone;
  FIMorphism perm;  // permutation of the source
};
FIFactorization fi_factor(const FIMorphism& map);

/* The canonical strictly increasing extension of an OI-morphism to all of N:
 * j |-> base(j) for j <= m, j |-> base(m) + j - m beyond. */
class IncExtension {
 public:
  explicit IncExtension(OIMorphism base);  // throws EmptySource when m = 0

  int operator()(int j) const;
  const OIMorphism& base() const { return base_; }

 private:
  OIMorphism base_;
};

}  // namespace oigb
