#include "isgx/algebra.hpp"

#include "isgx/error.hpp"

namespace isgx {

Ideal::Ideal(std::vector<bool> support) : support_(std::move(support)) {
  if (support_.empty()) throw StructureError("ideal over empty ground set");
}

Ideal Ideal::full(int n) { return Ideal(std::vector<bool>(n, true)); }

Ideal Ideal::none(int n) { return Ideal(std::vector<bool>(n, false)); }

Ideal Ideal::from_points(int n, const std::vector<int>& points) {
  std::vector<bool> sup(n, false);
  for (int x : points) {
    if (x < 0 || x >= n) throw StructureError("ideal point out of range");
    sup[x] = true;
  }
  return Ideal(std::move(sup));
}

int Ideal::dim() const {
  int k = 0;
  for (bool b : support_) k += b ? 1 : 0;
  return k;
}

std::vector<int> Ideal::points() const {
  std::vector<int> ps;
  for (int x = 0; x < ambient_size(); ++x)
    if (support_[x]) ps.push_back(x);
  return ps;
}

Ideal Ideal::intersect(const Ideal& other) const {
  if (ambient_size() != other.ambient_size())
    throw StructureError("ideal intersection over different ground sets");
  std::vector<bool> sup(support_);
  for (int x = 0; x < ambient_size(); ++x) sup[x] = sup[x] && other.support_[x];
  return Ideal(std::move(sup));
}

bool Ideal::subset_of(const Ideal& other) const {
  for (int x = 0; x < ambient_size(); ++x)
    if (support_[x] && !other.support_[x]) return false;
  return true;
}

bool Ideal::is_full() const { return dim() == ambient_size(); }

AlgebraElement AlgebraElement::indicator(const Ideal& ideal) {
  Vec v = Vec::Zero(ideal.ambient_size());
  for (int x : ideal.points()) v(x) = 1.0;
  return AlgebraElement(std::move(v));
}

AlgebraElement AlgebraElement::point_mass(int n, int x, Complex value) {
  Vec v = Vec::Zero(n);
  v(x) = value;
  return AlgebraElement(std::move(v));
}

bool AlgebraElement::supported_in(const Ideal& ideal, double tol) const {
  return support_violations(ideal, tol).empty();
}

std::vector<int> AlgebraElement::support_violations(const Ideal& ideal, double tol) const {
  std::vector<int> bad;
  for (int x = 0; x < size(); ++x)
    if (!ideal.contains(x) && std::abs(values_(x)) > tol) bad.push_back(x);
  return bad;
}

AlgebraElement AlgebraElement::clip_to(const Ideal& ideal) const {
  Vec v = values_;
  for (int x = 0; x < size(); ++x)
    if (!ideal.contains(x)) v(x) = 0.0;
  return AlgebraElement(std::move(v));
}

}  // namespace isgx
