#ifndef ISGX_GROUND_SET_HPP
#define ISGX_GROUND_SET_HPP

#include <map>
#include <string>
#include <vector>

namespace isgx {

/// The finite set X the partial bijections act on. Point order is fixed at
/// construction and used for all coordinate indexing.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> points);

  int size() const { return static_cast<int>(points_.size()); }
  const std::string& label(int i) const { return points_.at(i); }
  const std::vector<std::string>& labels() const { return points_; }

  /// Index of a labelled point; throws StructureError for unknown labels.
  int index_of(const std::string& label) const;
  bool contains(const std::string& label) const { return index_.count(label) > 0; }

  bool operator==(const GroundSet& other) const { return points_ == other.points_; }
  bool operator!=(const GroundSet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> points_;
  std::map<std::string, int> index_;
};

}  // namespace isgx

#endif  // ISGX_GROUND_SET_HPP
