#ifndef ISGX_CROSSED_PRODUCT_HPP
#define ISGX_CROSSED_PRODUCT_HPP

#include <cstdint>

#include "isgx/covariant_rep.hpp"
#include "isgx/l_algebra.hpp"
#include "isgx/linalg.hpp"

namespace isgx {

/// A nonempty family of covariant representations of one action. The
/// crossed product is computed relative to the family: its direct sum
/// stands in for the supremum over all covariant representations.
struct RepFamily {
  std::vector<MatrixRep> reps;

  int total_dim() const;
};

/// The integrated form (pi x nu)(x) = Σ_s pi(x(s)) nu_s.
Mat integrate(const MatrixRep& rep, const LElement& x);

/// Block-diagonal integrated form over the whole family.
Mat integrate_family(const RepFamily& family, const LElement& x);

/// The linear map L -> matrices as a (total_dim^2) x dim(L) matrix; column i
/// is the vectorized integrated image of the i-th basis element.
Mat integration_matrix(const RepFamily& family, const LAlgebra& lalg);

/// Multiplicativity and *-preservation of the integrated form over all
/// basis pairs, plus unitality (the non-degeneracy surrogate).
ValidationReport verify_integrated(const MatrixRep& rep, const LAlgebra& lalg, double tol = 1e-9);

/// ‖x‖_1 relative to the family: the max operator norm of the integrated
/// images. A C*-seminorm on L.
double seminorm(const RepFamily& family, const LElement& x);

/// Basis of N = {x : ‖x‖_1 = 0}, the kernel of the integrated direct sum.
std::vector<LElement> null_space(const RepFamily& family, const LAlgebra& lalg,
                                 double tol = 1e-9);

/// The image algebra Phi(L) with its Wedderburn block multiset: minimal
/// central projections are cut from a seeded random self-adjoint central
/// element, block dimension d_i = sqrt(rank of the corner), Σ d_i^2 = dim.
struct ImageAlgebra {
  int ambient_dim = 0;
  linalg::SpanBasis span;          // Frobenius-orthonormal basis of Phi(L)
  std::vector<int> blocks;         // sorted block dimensions
  std::vector<Vec> null_basis;     // kernel coordinates in the L basis
  int dim() const { return span.rank(); }
  int null_dim() const { return static_cast<int>(null_basis.size()); }
};

ImageAlgebra image_algebra(const RepFamily& family, const LAlgebra& lalg, double tol = 1e-9,
                           std::uint64_t seed = 0);

/// Phi(a δ_s) = Phi(a δ_t) for s ≤ t and a in a basis of D_s, per family
/// member. PreconditionError unless natural_leq(s, t).
ValidationReport order_collapse_check(const RepFamily& family, const LAlgebra& lalg, int s,
                                      int t, double tol = 1e-9);

/// For semilattices: the image algebra is C(X) itself — blocks all 1, total
/// dimension |X| — and the explicit maps psi1: a -> Phi(a δ_e) and
/// psi2: Phi(a δ_g) -> a are materialized and checked mutually inverse.
/// PreconditionError unless the semigroup is a semilattice.
ValidationReport semilattice_iso_check(const RepFamily& family, const LAlgebra& lalg,
                                       const ImageAlgebra& image, double tol = 1e-9);

/// A unital *-homomorphism of the image algebra into matrices, given by the
/// images of the orthonormal basis elements.
struct ImageHom {
  int dim = 0;
  std::vector<Mat> basis_images;
};

/// The identity inclusion of the image algebra.
ImageHom identity_hom(const ImageAlgebra& image);
/// Z -> diag(Z, Z), a doubled copy.
ImageHom doubled_hom(const ImageAlgebra& image);
/// Restriction of the family direct sum to one member's block.
ImageHom block_hom(const RepFamily& family, const ImageAlgebra& image, int member);

/// Checks that Pi is a unital *-homomorphism on the image algebra's basis;
/// PreconditionError otherwise.
void validate_hom(const ImageAlgebra& image, const ImageHom& Pi, double tol = 1e-9);

/// The covariant representation induced by Pi:
///   pi(a)  = Pi(Phi(a δ_e)),
///   nu_s   = Pi(Phi(1_{D_s} δ_s)) P_{s*},
/// with 1_{D_s} the exact ideal unit and P_{s*} the projection onto
/// pi(D_{s*})H'. Returned in diagonal labeling form.
MatrixRep induced_covariant(const RepFamily& family, const LAlgebra& lalg,
                            const ImageAlgebra& image, const ImageHom& Pi, double tol = 1e-9);

/// Both directions of the representation correspondence:
/// (a) inducing from a family member's own integrated representation
///     returns exactly that member;
/// (b) inducing from the identity inclusion and integrating again fixes
///     every generator Phi(a δ_s).
ValidationReport roundtrip_check(const RepFamily& family, const LAlgebra& lalg,
                                 const ImageAlgebra& image, double tol = 1e-12);

}  // namespace isgx

#endif  // ISGX_CROSSED_PRODUCT_HPP
