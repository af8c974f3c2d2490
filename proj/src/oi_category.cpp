#include "oigb/oi_category.hpp"

#include <algorithm>
#include <numeric>

namespace oigb {

namespace {

void check_widths(int source, int target) {
  if (source < 0 || target < 0 || source > kMaxWidth || target > kMaxWidth)
    throw WidthMismatch("width out of range [0, " + std::to_string(kMaxWidth) + "]");
}

std::string image_str(int m, int n, const std::vector<int>& image) {
  std::string s = "[" + std::to_string(m) + "->" + std::to_string(n) + ":";
  for (size_t i = 0; i < image.size(); ++i) s += (i ? "," : " ") + std::to_string(image[i]);
  return s + "]";
}

}  // namespace

OIMorphism::OIMorphism(int source_width, int target_width, std::vector<int> image)
    : source_(source_width), target_(target_width), image_(std::move(image)) {
  check_widths(source_, target_);
  if (static_cast<int>(image_.size()) != source_)
    throw WidthMismatch("image length " + std::to_string(image_.size()) +
                        " does not match source width " + std::to_string(source_));
  int prev = 0;
  for (int v : image_) {
    if (v <= prev || v > target_)
      throw WidthMismatch("image not strictly increasing into [" + std::to_string(target_) + "]");
    prev = v;
  }
}

OIMorphism OIMorphism::identity(int n) {
  std::vector<int> image(static_cast<size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return OIMorphism(n, n, std::move(image));
}

std::string OIMorphism::str() const { return image_str(source_, target_, image_); }

FIMorphism::FIMorphism(int source_width, int target_width, std::vector<int> image)
    : source_(source_width), target_(target_width), image_(std::move(image)) {
  check_widths(source_, target_);
  if (static_cast<int>(image_.size()) != source_)
    throw WidthMismatch("image length does not match source width");
  std::vector<int> seen = image_;
  std::sort(seen.begin(), seen.end());
  for (size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] < 1 || seen[i] > target_ || (i > 0 && seen[i] == seen[i - 1]))
      throw WidthMismatch("image not injective into [" + std::to_string(target_) + "]");
  }
}

FIMorphism FIMorphism::identity(int n) {
  std::vector<int> image(static_cast<size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return FIMorphism(n, n, std::move(image));
}

std::string FIMorphism::str() const { return image_str(source_, target_, image_); }

OIMorphism compose(const OIMorphism& outer, const OIMorphism& inner) {
  if (inner.target_width() != outer.source_width())
    throw WidthMismatch("compose: inner target " + std::to_string(inner.target_width()) +
                        " != outer source " + std::to_string(outer.source_width()));
  std::vector<int> image;
  image.reserve(inner.image().size());
  for (int v : inner.image()) image.push_back(outer(v));
  return OIMorphism(inner.source_width(), outer.target_width(), std::move(image));
}

FIMorphism compose(const FIMorphism& outer, const FIMorphism& inner) {
  if (inner.target_width() != outer.source_width())
    throw WidthMismatch("compose: width mismatch");
  std::vector<int> image;
  image.reserve(inner.image().size());
  for (int v : inner.image()) image.push_back(outer(v));
  return FIMorphism(inner.source_width(), outer.target_width(), std::move(image));
}

OIMorphism iota(int m, int n) {
  if (m > n) throw WidthMismatch("iota: m > n");
  std::vector<int> image(static_cast<size_t>(m));
  std::iota(image.begin(), image.end(), 1);
  return OIMorphism(m, n, std::move(image));
}

std::vector<OIMorphism> enumerate_oi(int m, int n) {
  std::vector<OIMorphism> out;
  if (m < 0 || n < 0 || m > n) return out;
  std::vector<int> image(static_cast<size_t>(m));
  std::iota(image.begin(), image.end(), 1);
  while (true) {
    out.emplace_back(m, n, image);
    // next m-combination of [n] in lex order
    int i = m - 1;
    while (i >= 0 && image[static_cast<size_t>(i)] == n - (m - 1 - i)) --i;
    if (i < 0) break;
    ++image[static_cast<size_t>(i)];
    for (int k = i + 1; k < m; ++k)
      image[static_cast<size_t>(k)] = image[static_cast<size_t>(k - 1)] + 1;
  }
  return out;
}

std::vector<FIMorphism> enumerate_fi(int m, int n) {
  std::vector<FIMorphism> out;
  if (m < 0 || n < 0 || m > n) return out;
  std::vector<int> image;
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(image.size()) == m) {
      out.emplace_back(m, n, image);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      used[static_cast<size_t>(v)] = true;
      image.push_back(v);
      self(self);
      image.pop_back();
      used[static_cast<size_t>(v)] = false;
    }
  };
  rec(rec);
  return out;
}

FIFactorization fi_factor(const FIMorphism& map) {
  std::vector<int> sorted = map.image();
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> perm;
  perm.reserve(sorted.size());
  for (int v : map.image()) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
    perm.push_back(static_cast<int>(it - sorted.begin()) + 1);
  }
  return FIFactorization{OIMorphism(map.source_width(), map.target_width(), std::move(sorted)),
                         FIMorphism(map.source_width(), map.source_width(), std::move(perm))};
}

IncExtension::IncExtension(OIMorphism base) : base_(std::move(base)) {
  if (base_.source_width() == 0) throw EmptySource("Inc extension needs a nonempty source");
}

int IncExtension::operator()(int j) const {
  int m = base_.source_width();
  if (j < 1) throw WidthMismatch("Inc extension evaluated at " + std::to_string(j));
  if (j <= m) return base_(j);
  return base_(m) + j - m;
}

}  // namespace oigb
