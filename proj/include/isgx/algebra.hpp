#ifndef ISGX_ALGEBRA_HPP
#define ISGX_ALGEBRA_HPP

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace isgx {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// A coordinate ideal of C(X): the functions vanishing off `support`.
class Ideal {
 public:
  explicit Ideal(std::vector<bool> support);
  static Ideal full(int n);
  static Ideal none(int n);
  static Ideal from_points(int n, const std::vector<int>& points);

  int ambient_size() const { return static_cast<int>(support_.size()); }
  bool contains(int x) const { return support_[x]; }
  int dim() const;  // number of supported points
  std::vector<int> points() const;

  Ideal intersect(const Ideal& other) const;
  bool subset_of(const Ideal& other) const;
  bool is_full() const;

  bool operator==(const Ideal& other) const { return support_ == other.support_; }
  bool operator!=(const Ideal& other) const { return !(*this == other); }

 private:
  std::vector<bool> support_;
};

/// An element of C(X): one complex value per ground point. The norm is the
/// max modulus.
class AlgebraElement {
 public:
  explicit AlgebraElement(Vec values) : values_(std::move(values)) {}
  static AlgebraElement zero(int n) { return AlgebraElement(Vec::Zero(n)); }
  /// Indicator function of the ideal's support (its exact unit).
  static AlgebraElement indicator(const Ideal& ideal);
  static AlgebraElement point_mass(int n, int x, Complex value = 1.0);

  int size() const { return static_cast<int>(values_.size()); }
  Complex at(int x) const { return values_(x); }
  const Vec& values() const { return values_; }

  double sup_norm() const { return values_.size() ? values_.cwiseAbs().maxCoeff() : 0.0; }
  AlgebraElement conjugate() const { return AlgebraElement(values_.conjugate()); }

  /// True when every entry off the ideal's support has modulus <= tol.
  bool supported_in(const Ideal& ideal, double tol) const;
  /// Points off the support with modulus > tol.
  std::vector<int> support_violations(const Ideal& ideal, double tol) const;
  /// Copy with off-support entries zeroed.
  AlgebraElement clip_to(const Ideal& ideal) const;

  AlgebraElement operator+(const AlgebraElement& o) const { return AlgebraElement(values_ + o.values_); }
  AlgebraElement operator-(const AlgebraElement& o) const { return AlgebraElement(values_ - o.values_); }
  /// Pointwise product, the multiplication of C(X).
  AlgebraElement operator*(const AlgebraElement& o) const {
    return AlgebraElement(values_.cwiseProduct(o.values_));
  }
  friend AlgebraElement operator*(Complex lambda, const AlgebraElement& a) {
    return AlgebraElement(lambda * a.values_);
  }

  bool approx_equal(const AlgebraElement& o, double tol) const {
    return (values_ - o.values_).cwiseAbs().maxCoeff() <= tol;
  }

 private:
  Vec values_;
};

}  // namespace isgx

#endif  // ISGX_ALGEBRA_HPP
