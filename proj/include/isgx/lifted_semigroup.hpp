#ifndef ISGX_LIFTED_SEMIGROUP_HPP
#define ISGX_LIFTED_SEMIGROUP_HPP

#include <memory>
#include <vector>

#include "isgx/covariant_rep.hpp"
#include "isgx/partial_action.hpp"

namespace isgx {

/// A pair (alpha_{g1}...alpha_{gn}, u_{g1}...u_{gn}). Two pairs are equal
/// when the map parts coincide exactly and the matrix parts agree within the
/// builder's tolerance. witness_word is one generating word, kept for
/// reporting only.
struct LiftedElement {
  PartialBijection map_part;
  Mat mat_part;
  std::vector<int> witness_word;  // indices into the source semigroup

  /// E_s: the range ideal of the map part.
  Ideal range_ideal() const {
    return Ideal::from_points(map_part.size(), map_part.range());
  }
};

/// The inverse semigroup S_G of pairs generated by a covariant
/// representation, closed under coordinatewise products.
class LiftedSemigroup {
 public:
  int size() const { return static_cast<int>(elements_.size()); }
  const LiftedElement& element(int s) const { return elements_.at(s); }
  Ideal E(int s) const { return elements_.at(s).range_ideal(); }

  /// Abstract multiplication/involution tables over the lifted elements.
  const FiniteInverseSemigroup& abstract() const { return *abstract_; }
  std::shared_ptr<const FiniteInverseSemigroup> abstract_ptr() const { return abstract_; }

  /// Index of the generator pair (alpha_g, u_g) for g in the source semigroup.
  int lift_of(int g) const { return lift_of_.at(g); }

  const FiniteInverseSemigroup& source() const { return *source_; }
  const GroundSet& ground() const { return ground_; }
  int rep_dim() const { return rep_dim_; }
  double tol() const { return tol_; }

  nlohmann::json to_json() const;

 private:
  friend LiftedSemigroup build_sg(const PartialAction&, const MatrixRep&, double, int);

  std::vector<LiftedElement> elements_;
  std::shared_ptr<const FiniteInverseSemigroup> abstract_;
  std::shared_ptr<const FiniteInverseSemigroup> source_;
  std::vector<int> lift_of_;
  GroundSet ground_{{"?"}};
  int rep_dim_ = 0;
  double tol_ = 1e-9;
};

/// Worklist closure of {(alpha_g, u_g) : g in G} under coordinatewise
/// products. The inverse of (phi, W) is (phi^{-1}, W*) — located in the
/// closure and asserted, not assumed. Raises ResourceError when the closure
/// exceeds the element budget (possible only for non-covariant u).
LiftedSemigroup build_sg(const PartialAction& pa, const MatrixRep& rep, double tol = 1e-9,
                         int budget = 100000);

/// The action beta of S_G on C(X): D_s := E_s, alpha_s := map_part(s).
PartialAction beta_action(const LiftedSemigroup& sg);

/// beta is a genuine action, not merely a partial one: beta_s beta_t equals
/// beta_{st} with full composite domains, exhaustively over pairs.
ValidationReport check_beta_multiplicativity(const LiftedSemigroup& sg);

/// The representation (pi, nu) of (A, S_G, beta): nu_s is the matrix part.
MatrixRep nu_from_u(const LiftedSemigroup& sg, const MatrixRep& rep);

/// The semigroup identity s(s1 s2)* = s1 s2 (s1 s2)* for lifts of all pairs
/// g1, g2 — the key step behind the converse correspondence.
ValidationReport check_sg_key_identity(const LiftedSemigroup& sg);

/// Converse direction: omega_g := z at the lifted element (alpha_g, u_g).
/// pa must be the action sg was built from, and z covariant for
/// beta_action(sg); both validated, PreconditionError otherwise. The
/// returned rep is covariant for pa.
MatrixRep omega_from_z(const LiftedSemigroup& sg, const MatrixRep& z, const PartialAction& pa,
                       double tol = 1e-9);

}  // namespace isgx

#endif  // ISGX_LIFTED_SEMIGROUP_HPP
