#ifndef ISGX_EQUIVALENCE_HPP
#define ISGX_EQUIVALENCE_HPP

#include "isgx/crossed_product.hpp"
#include "isgx/lifted_semigroup.hpp"

namespace isgx {

/// Comparison of the crossed product by G with the crossed product by the
/// lifted semigroup S_G.
struct EquivalenceReport {
  // Single-representation span comparison (the image-equality lemma).
  int span_dim_g = 0;
  int span_dim_s = 0;
  bool span_g_in_s = false;
  bool span_s_in_g = false;
  bool span_equal = false;
  bool generator_identities = false;  // rho(a) z_s = rho(a) omega_{g1...gn}

  // Theta between the relative crossed products.
  int dim_l_g = 0, dim_l_s = 0;
  int dim_image_g = 0, dim_image_s = 0;
  int dim_null_g = 0, dim_null_s = 0;
  bool theta_well_defined = false;
  bool theta_generator_match = false;
  bool theta_iso = false;
  bool hypothesis_failure = false;  // relative faithfulness failed: a diagnosis, not a bug
  std::vector<int> blocks_g, blocks_s;
  bool blocks_match = false;
  double max_residual = 0.0;

  bool passed() const {
    return span_equal && generator_identities && theta_well_defined && theta_generator_match &&
           theta_iso && blocks_match;
  }
  nlohmann::json to_json() const;
};

/// The image-equality lemma at the level of one covariant representation:
/// span{pi(a) u_g} over the G side equals span{pi(a) nu_s} over the S_G
/// side, with both containments verified separately, plus the generator
/// identities pi(a) nu_s = pi(a) u_{g1...gn} over a basis of each E_s.
EquivalenceReport span_equality(const PartialAction& pa, const MatrixRep& rep,
                                const LiftedSemigroup& sg, double tol = 1e-9);

/// Theta between the relative crossed products, realized through the basis
/// transfer a δ_g -> a δ_{(alpha_g, u_g)}:
///   (a) well-defined  <=> ker Phi_G ⊆ ker (Phi_S ∘ transfer)  (rank test;
///       failure is reported as a faithfulness-hypothesis diagnosis),
///   (b) Theta maps each generator class Phi_G(a δ_{g1...gn}) to
///       Phi_S(a δ_s) over a basis of E_s,
///   (c) bijective <=> the three ranks r_G, r_{S∘transfer}, r_S agree;
///       block multisets of both sides compared as a structural check.
/// The representation that built sg must be a member of family_g.
EquivalenceReport theta_check(const PartialAction& pa, const MatrixRep& rep,
                              const LiftedSemigroup& sg, const RepFamily& family_g,
                              const RepFamily& family_s, const LAlgebra& lalg_g,
                              const LAlgebra& lalg_s, double tol = 1e-9,
                              std::uint64_t seed = 0);

}  // namespace isgx

#endif  // ISGX_EQUIVALENCE_HPP
