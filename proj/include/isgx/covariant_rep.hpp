#ifndef ISGX_COVARIANT_REP_HPP
#define ISGX_COVARIANT_REP_HPP

#include <span>
#include <string>
#include <vector>

#include "isgx/partial_action.hpp"

namespace isgx {

/// A finite-dimensional covariant-representation candidate (pi, u, H) for a
/// partial action on C(X). pi is diagonal through a basis labeling:
/// pi(a) = diag(a(label(i))); every non-degenerate finite-dimensional
/// representation of C(X) is unitarily equivalent to one of this form.
struct MatrixRep {
  int dim = 0;
  std::vector<int> labeling;  // basis index -> ground point
  std::vector<Mat> u;         // per semigroup element, dim x dim
  std::string name = "rep";

  Mat pi(const AlgebraElement& a) const;
  /// Orthogonal projection onto pi(D)H: diagonal 0/1 by labeling.
  Mat ideal_projection(const Ideal& ideal) const;
  /// Basis indices labelled inside the ideal's support.
  std::vector<int> subspace_indices(const Ideal& ideal) const;
};

/// The canonical covariant representation on C^X: labeling is the identity
/// and u_g is the 0/1 partial-permutation matrix of alpha_g.
MatrixRep regular_rep(const PartialAction& pa, const std::string& name = "regular");

/// Blockwise direct sum; covariance is preserved.
MatrixRep direct_sum(const MatrixRep& a, const MatrixRep& b, const std::string& name = "sum");

/// Exhaustive covariance validation: u_g partial isometries with initial
/// space pi(D_{g*})H and final space pi(D_g)H (projection equality),
/// u_g pi(a) u_{g*} = pi(alpha_g(a)) on a basis of D_{g*},
/// u_{st} h = u_s u_t h on pi(D_{t*} D_{t*s*})H, u_{s*} = u_s^*, u_e = I.
ValidationReport validate_covariant(const PartialAction& pa, const MatrixRep& rep,
                                    double tol = 1e-9);

/// W = u_{s1}...u_{sn} is a partial isometry; WW* projects onto
/// pi(D_{s1} D_{s1 s2} ... D_{s1...sn})H and W*W onto
/// pi(D_{sn*} D_{sn* s_{n-1}*} ... D_{sn*...s1*})H. When WW* fails the
/// final-space formula but matches the initial-space one, the report says so.
ValidationReport word_isometry_check(const PartialAction& pa, const MatrixRep& rep,
                                     std::span<const int> word, double tol = 1e-9);

/// u_{s1...sn} h = u_{s1}...u_{sn} h on pi(D_{sn*}...D_{sn*...s1*})H, and
/// pi(a) u_{s1...sn} = pi(a) u_{s1}...u_{sn} for a in D_{s1}...D_{s1...sn}.
ValidationReport word_identity_check(const PartialAction& pa, const MatrixRep& rep,
                                     std::span<const int> word, double tol = 1e-9);

}  // namespace isgx

#endif  // ISGX_COVARIANT_REP_HPP
