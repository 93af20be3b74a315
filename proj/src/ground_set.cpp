#include "isgx/ground_set.hpp"

#include "isgx/error.hpp"

namespace isgx {

GroundSet::GroundSet(std::vector<std::string> points) : points_(std::move(points)) {
  if (points_.empty()) throw StructureError("ground set must contain at least one point");
  for (int i = 0; i < size(); ++i) {
    if (!index_.emplace(points_[i], i).second)
      throw StructureError("duplicate ground-set label: " + points_[i]);
  }
}

int GroundSet::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw StructureError("unknown ground-set label: " + label);
  return it->second;
}

}  // namespace isgx
