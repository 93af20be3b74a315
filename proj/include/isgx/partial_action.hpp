#ifndef ISGX_PARTIAL_ACTION_HPP
#define ISGX_PARTIAL_ACTION_HPP

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "isgx/algebra.hpp"
#include "isgx/inverse_semigroup.hpp"
#include "isgx/validation.hpp"

namespace isgx {

/// A partial action of a finite unital inverse semigroup G on C(X): for each
/// g an ideal D_g (a subset of X) and a partial bijection alpha_g mapping
/// supp(D_{g*}) onto supp(D_g). On functions, alpha_g acts by
/// a |-> a ∘ alpha_g^{-1}.
class PartialAction {
 public:
  /// Shape checks only; the axioms and the ideal/bijection consistency are
  /// examined by validate_axioms, which reports rather than throws.
  PartialAction(std::shared_ptr<const FiniteInverseSemigroup> semigroup,
                GroundSet ground,
                std::vector<Ideal> ideal_of,
                std::vector<PartialBijection> map_of,
                double support_tol = 1e-9);

  /// The tautological action of a semigroup realized inside I(X): alpha_g is
  /// g itself and D_g its range.
  static PartialAction tautological(std::shared_ptr<const FiniteInverseSemigroup> semigroup,
                                    double support_tol = 1e-9);

  const FiniteInverseSemigroup& semigroup() const { return *semigroup_; }
  std::shared_ptr<const FiniteInverseSemigroup> semigroup_ptr() const { return semigroup_; }
  const GroundSet& ground() const { return ground_; }
  int n_points() const { return ground_.size(); }

  const Ideal& ideal(int g) const { return ideal_of_.at(g); }
  const PartialBijection& map(int g) const { return map_of_.at(g); }
  double support_tol() const { return support_tol_; }

  /// alpha_g applied to an algebra element supported in D_{g*}. Off-support
  /// entries of modulus <= tol are zeroed; larger ones raise DomainError
  /// naming the offending points.
  AlgebraElement apply(int g, const AlgebraElement& a) const;
  AlgebraElement apply(int g, const AlgebraElement& a, double tol) const;

 private:
  std::shared_ptr<const FiniteInverseSemigroup> semigroup_;
  GroundSet ground_;
  std::vector<Ideal> ideal_of_;
  std::vector<PartialBijection> map_of_;
  double support_tol_;
};

/// Exhaustive check of the partial-action axioms over all pairs and points:
///   (i)   alpha_s^{-1} = alpha_{s*}
///   (ii)  alpha_s(X_{s*} ∩ X_t) = X_s ∩ X_{st}
///   (iii) alpha_s(alpha_t(x)) = alpha_{st}(x) on X_{t*} ∩ X_{t*s*}
/// plus D_e = X and, as a theorem check, alpha_e = id. Structural defects
/// (ideal/bijection mismatches) are reported under "structure." distinctly
/// from axiom failures.
ValidationReport validate_axioms(const PartialAction& pa);

/// The literal composite alpha_{s1} ∘ ... ∘ alpha_{sn} (alpha_{sn} applied
/// first) as a partial bijection on X.
PartialBijection composite(const PartialAction& pa, std::span<const int> word);

struct DomainFormulaResult {
  bool ok = false;                       // composite dom/ran match the formulas
  std::optional<int> witness;            // a mismatching point, if any
  bool statement_variant_equal = true;   // starred vs literal-statement domain product
  Ideal domain_formula;                  // ∩_j D_{sn* s_{n-1}* ... s_j*}
  Ideal range_formula;                   // ∩_j D_{s1 s2 ... s_j}
};

/// Compares dom/ran of composite(pa, word) with the ideal-product formulas.
/// The domain product uses the all-starred form; the variant with the last
/// factor unstarred is also evaluated and flagged when it differs.
DomainFormulaResult check_domain_formula(const PartialAction& pa, std::span<const int> word);

struct TranslateLemmaResult {
  bool ok = false;
  std::optional<int> witness;
};

/// Verifies alpha_t(D_{t*} D_{s1} ... D_{sn}) = D_t D_{t s1} ... D_{t sn}
/// by direct image computation.
TranslateLemmaResult check_translate_lemma(const PartialAction& pa, int t,
                                           std::span<const int> s_list);

}  // namespace isgx

#endif  // ISGX_PARTIAL_ACTION_HPP
