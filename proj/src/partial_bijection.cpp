#include "isgx/partial_bijection.hpp"

#include <algorithm>

#include "isgx/error.hpp"

namespace isgx {

PartialBijection::PartialBijection(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  if (n == 0) throw StructureError("partial bijection over empty ground set");
  std::vector<bool> seen(n, false);
  for (int x = 0; x < n; ++x) {
    const int y = image_[x];
    if (y == kUndefined) continue;
    if (y < 0 || y >= n) throw StructureError("partial bijection image entry out of range");
    if (seen[y]) throw StructureError("partial bijection not injective");
    seen[y] = true;
  }
}

PartialBijection PartialBijection::identity(int n) {
  std::vector<int> im(n);
  for (int x = 0; x < n; ++x) im[x] = x;
  return PartialBijection(std::move(im));
}

PartialBijection PartialBijection::empty_map(int n) {
  return PartialBijection(std::vector<int>(n, kUndefined));
}

PartialBijection PartialBijection::partial_identity(int n, const std::vector<int>& points) {
  std::vector<int> im(n, kUndefined);
  for (int x : points) {
    if (x < 0 || x >= n) throw StructureError("partial identity point out of range");
    im[x] = x;
  }
  return PartialBijection(std::move(im));
}

std::vector<int> PartialBijection::domain() const {
  std::vector<int> dom;
  for (int x = 0; x < size(); ++x)
    if (defined_at(x)) dom.push_back(x);
  return dom;
}

std::vector<int> PartialBijection::range() const {
  std::vector<int> ran;
  for (int x = 0; x < size(); ++x)
    if (defined_at(x)) ran.push_back(image_[x]);
  std::sort(ran.begin(), ran.end());
  return ran;
}

int PartialBijection::domain_size() const {
  int k = 0;
  for (int x = 0; x < size(); ++x)
    if (defined_at(x)) ++k;
  return k;
}

PartialBijection PartialBijection::inverse() const {
  std::vector<int> im(size(), kUndefined);
  for (int x = 0; x < size(); ++x)
    if (defined_at(x)) im[image_[x]] = x;
  return PartialBijection(std::move(im));
}

bool PartialBijection::is_identity() const {
  for (int x = 0; x < size(); ++x)
    if (image_[x] != x) return false;
  return true;
}

std::string PartialBijection::to_string(const GroundSet& ground) const {
  std::string out;
  for (int x = 0; x < size(); ++x) {
    if (!defined_at(x)) continue;
    out += "(" + ground.label(x) + "->" + ground.label(image_[x]) + ")";
  }
  return out.empty() ? "(empty)" : out;
}

PartialBijection compose(const PartialBijection& s, const PartialBijection& t) {
  if (s.size() != t.size())
    throw StructureError("compose: partial bijections over different ground sets");
  std::vector<int> im(t.size(), PartialBijection::kUndefined);
  for (int x = 0; x < t.size(); ++x) {
    const int y = t.apply(x);
    if (y == PartialBijection::kUndefined) continue;
    im[x] = s.apply(y);  // stays kUndefined when y is outside dom(s)
  }
  return PartialBijection(std::move(im));
}

PartialBijection invert(const PartialBijection& s) { return s.inverse(); }

}  // namespace isgx
