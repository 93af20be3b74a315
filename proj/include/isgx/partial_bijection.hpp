#ifndef ISGX_PARTIAL_BIJECTION_HPP
#define ISGX_PARTIAL_BIJECTION_HPP

#include <string>
#include <vector>

#include "isgx/ground_set.hpp"

namespace isgx {

/// An injective partial map on {0,...,n-1}: an element of the symmetric
/// inverse monoid I(X). image()[x] is the image of point x, or kUndefined
/// when x is outside the domain.
class PartialBijection {
 public:
  static constexpr int kUndefined = -1;

  /// Validates injectivity and entry range; throws StructureError otherwise.
  explicit PartialBijection(std::vector<int> image);

  static PartialBijection identity(int n);
  static PartialBijection empty_map(int n);
  /// The partial identity on the given points.
  static PartialBijection partial_identity(int n, const std::vector<int>& points);

  int size() const { return static_cast<int>(image_.size()); }
  bool defined_at(int x) const { return image_[x] != kUndefined; }
  int apply(int x) const { return image_[x]; }
  const std::vector<int>& image() const { return image_; }

  std::vector<int> domain() const;  // sorted point indices
  std::vector<int> range() const;   // sorted point indices
  int domain_size() const;

  PartialBijection inverse() const;
  bool is_identity() const;

  bool operator==(const PartialBijection& other) const { return image_ == other.image_; }
  bool operator!=(const PartialBijection& other) const { return !(*this == other); }
  /// Lexicographic order on image arrays (kUndefined first); the canonical
  /// element order used when generating semigroups.
  bool operator<(const PartialBijection& other) const { return image_ < other.image_; }

  /// Rendering like "(x0->x1)(x1->x0)"; "(empty)" for the empty map.
  std::string to_string(const GroundSet& ground) const;

 private:
  std::vector<int> image_;
};

/// Product in I(X): r(x) = s(t(x)), i.e. t is applied first.
PartialBijection compose(const PartialBijection& s, const PartialBijection& t);

PartialBijection invert(const PartialBijection& s);

}  // namespace isgx

#endif  // ISGX_PARTIAL_BIJECTION_HPP
