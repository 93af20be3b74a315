#ifndef ISGX_L_ALGEBRA_HPP
#define ISGX_L_ALGEBRA_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>

#include "isgx/partial_action.hpp"

namespace isgx {

/// A finitely supported element of L: coefficient a_g in D_g per semigroup
/// element, absent keys meaning zero.
struct LElement {
  std::map<int, AlgebraElement> coeffs;

  bool zero() const { return coeffs.empty(); }
  nlohmann::json to_json(const FiniteInverseSemigroup& sg) const;
};

LElement operator+(const LElement& x, const LElement& y);
LElement operator-(const LElement& x, const LElement& y);
LElement operator*(Complex lambda, const LElement& x);

/// The convolution *-algebra L = {x : x(g) in D_g} for a partial action on
/// C(X), with
///   (x ∗ y)(g) = Σ_{hk=g} beta_h(beta_{h*}(x(h)) y(k)),
///   x*(g)      = beta_g(x(g*)*),
///   ‖x‖        = Σ_g ‖x(g)‖_∞.
/// The basis is {1_x δ_g : x in supp D_g}; products of basis elements are a
/// single basis element or zero, materialized once as a structure-constant
/// table so convolution is a table lookup.
class LAlgebra {
 public:
  explicit LAlgebra(std::shared_ptr<const PartialAction> action);

  const PartialAction& action() const { return *action_; }
  std::shared_ptr<const PartialAction> action_ptr() const { return action_; }
  double tol() const { return action_->support_tol(); }

  struct BasisIndex {
    int g;
    int point;
  };
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisIndex>& basis() const { return basis_; }
  /// Position of 1_{point} δ_g in the basis, or -1 when point is off D_g.
  int basis_pos(int g, int point) const { return pos_.at(g).at(point); }
  /// Index of the basis product b_i b_j, or -1 when the product vanishes.
  int basis_product(int i, int j) const { return table_.at(i).at(j); }

  /// a δ_g; a must be supported in D_g within tol (small residues are
  /// zeroed, material violations raise DomainError).
  LElement delta(const AlgebraElement& a, int g) const;
  /// The two-sided unit 1 δ_e.
  LElement unit() const;

  LElement convolve(const LElement& x, const LElement& y) const;
  LElement star(const LElement& x) const;
  double l1_norm(const LElement& x) const;

  /// Coordinates in the basis; entries of x off the ideal supports must be
  /// below tol.
  Vec to_vector(const LElement& x) const;
  LElement from_vector(const Vec& v) const;
  double max_coeff_diff(const LElement& x, const LElement& y) const;

 private:
  std::shared_ptr<const PartialAction> action_;
  std::vector<BasisIndex> basis_;
  std::vector<std::vector<int>> pos_;    // [g][point] -> basis index or -1
  std::vector<std::vector<int>> table_;  // [i][j] -> basis index or -1
};

using MultiplyFn = std::function<LElement(const LElement&, const LElement&)>;

/// Banach-*-algebra law suite: associativity over all basis triples,
/// (x∗y)* = y*∗x*, star additivity/conjugate-homogeneity/involutivity and
/// norm isometry on seeded random elements, ‖x∗y‖ ≤ ‖x‖‖y‖ on `samples`
/// random pairs, the two-sided unit law, and the unit's left/right
/// multiplication operators equal to the identity matrix (rank dim L).
/// `multiply` overrides the product being examined (defaults to convolve).
ValidationReport verify_banach_star_laws(const LAlgebra& lalg, std::uint64_t seed = 0,
                                         int samples = 200, double tol = 1e-9,
                                         const MultiplyFn& multiply = {});

}  // namespace isgx

#endif  // ISGX_L_ALGEBRA_HPP
