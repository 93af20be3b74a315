#include "isgx/equivalence.hpp"

#include <algorithm>

#include "isgx/error.hpp"

namespace isgx {

nlohmann::json EquivalenceReport::to_json() const {
  return {{"span",
           {{"dim_g", span_dim_g},
            {"dim_s", span_dim_s},
            {"g_in_s", span_g_in_s},
            {"s_in_g", span_s_in_g},
            {"equal", span_equal},
            {"generator_identities", generator_identities}}},
          {"theta",
           {{"dim_l_g", dim_l_g},
            {"dim_l_s", dim_l_s},
            {"dim_image_g", dim_image_g},
            {"dim_image_s", dim_image_s},
            {"dim_null_g", dim_null_g},
            {"dim_null_s", dim_null_s},
            {"well_defined", theta_well_defined},
            {"generator_match", theta_generator_match},
            {"iso", theta_iso},
            {"hypothesis_failure", hypothesis_failure},
            {"blocks_g", blocks_g},
            {"blocks_s", blocks_s},
            {"blocks_match", blocks_match}}},
          {"max_residual", max_residual},
          {"passed", passed()}};
}

EquivalenceReport span_equality(const PartialAction& pa, const MatrixRep& rep,
                                const LiftedSemigroup& sg, double tol) {
  EquivalenceReport out;
  const auto& g_sg = pa.semigroup();
  const int n = pa.ground().size();

  std::vector<Mat> g_side;
  for (int g = 0; g < g_sg.size(); ++g)
    for (int x : pa.ideal(g).points())
      g_side.push_back(rep.pi(AlgebraElement::point_mass(n, x)) * rep.u[g]);

  std::vector<Mat> s_side;
  double worst = 0.0;
  bool gen_ok = true;
  for (int s = 0; s < sg.size(); ++s) {
    const auto& elem = sg.element(s);
    const int g_prod = g_sg.product_of_word(elem.witness_word);
    for (int x : sg.E(s).points()) {
      const Mat pia = rep.pi(AlgebraElement::point_mass(n, x));
      s_side.push_back(pia * elem.mat_part);
      // rho(a) z_s = rho(a) omega_{g1}...omega_{gn} = rho(a) omega_{g1...gn}.
      const double r = linalg::operator_norm(pia * elem.mat_part - pia * rep.u[g_prod]);
      worst = std::max(worst, r);
      if (r > tol) gen_ok = false;
    }
  }
  out.generator_identities = gen_ok;
  out.max_residual = worst;

  const auto g_span = linalg::orthonormal_span(g_side, tol);
  const auto s_span = linalg::orthonormal_span(s_side, tol);
  out.span_dim_g = g_span.rank();
  out.span_dim_s = s_span.rank();

  auto contained = [tol](const std::vector<Mat>& gens, const linalg::SpanBasis& span) {
    for (const auto& m : gens) {
      const double scale = std::max(1.0, m.norm());
      if (linalg::projection_residual(span, m) > tol * scale) return false;
    }
    return true;
  };
  out.span_g_in_s = contained(g_side, s_span);
  out.span_s_in_g = contained(s_side, g_span);
  out.span_equal = out.span_g_in_s && out.span_s_in_g && out.span_dim_g == out.span_dim_s;
  return out;
}

EquivalenceReport theta_check(const PartialAction& pa, const MatrixRep& rep,
                              const LiftedSemigroup& sg, const RepFamily& family_g,
                              const RepFamily& family_s, const LAlgebra& lalg_g,
                              const LAlgebra& lalg_s, double tol, std::uint64_t seed) {
  const auto& g_sg = pa.semigroup();

  // The pair that built sg must be declared on the G side.
  {
    bool found = false;
    for (const auto& member : family_g.reps) {
      if (member.dim != rep.dim || member.labeling != rep.labeling) continue;
      double diff = 0.0;
      for (int g = 0; g < g_sg.size(); ++g)
        diff = std::max(diff, linalg::operator_norm(member.u[g] - rep.u[g]));
      if (diff <= tol) {
        found = true;
        break;
      }
    }
    if (!found)
      throw PreconditionError(
          "theta_check: the representation that built S_G is not in family_G");
  }

  EquivalenceReport out = span_equality(pa, rep, sg, tol);
  out.dim_l_g = lalg_g.dim();
  out.dim_l_s = lalg_s.dim();

  const Mat m_g = integration_matrix(family_g, lalg_g);
  const Mat m_s = integration_matrix(family_s, lalg_s);

  // Basis transfer a δ_g -> a δ_{(alpha_g, u_g)} as a 0/1 matrix.
  Mat transfer = Mat::Zero(lalg_s.dim(), lalg_g.dim());
  for (int i = 0; i < lalg_g.dim(); ++i) {
    const auto [g, x] = lalg_g.basis()[i];
    const int j = lalg_s.basis_pos(sg.lift_of(g), x);
    if (j < 0)
      throw StructureError("theta_check: E_{lift(g)} lost a point of D_g");
    transfer(j, i) = 1.0;
  }
  const Mat m_s_transfer = m_s * transfer;

  const int r_g = linalg::rank_of(m_g, tol);
  const int r_st = linalg::rank_of(m_s_transfer, tol);
  const int r_s = linalg::rank_of(m_s, tol);
  Mat stacked(m_g.rows() + m_s_transfer.rows(), lalg_g.dim());
  stacked.topRows(m_g.rows()) = m_g;
  stacked.bottomRows(m_s_transfer.rows()) = m_s_transfer;
  const int r_stack = linalg::rank_of(stacked, tol);

  out.dim_image_g = r_g;
  out.dim_image_s = r_s;
  out.dim_null_g = lalg_g.dim() - r_g;
  out.dim_null_s = lalg_s.dim() - r_s;
  out.theta_well_defined = (r_stack == r_g);
  out.hypothesis_failure = !out.theta_well_defined;
  out.theta_iso = out.theta_well_defined && r_g == r_st && r_st == r_s;

  // Theta on generators: Phi_S(a δ_{lift(g1...gn)}) = Phi_S(a δ_s) over a
  // basis of E_s.
  {
    double worst = out.max_residual;
    bool ok = true;
    for (int s = 0; s < sg.size(); ++s) {
      const int g_prod = g_sg.product_of_word(sg.element(s).witness_word);
      for (int x : sg.E(s).points()) {
        const int i_s = lalg_s.basis_pos(s, x);
        const int i_g = lalg_g.basis_pos(g_prod, x);
        if (i_s < 0 || i_g < 0) {
          ok = false;
          continue;
        }
        const double r = (m_s.col(i_s) - m_s_transfer.col(i_g)).norm();
        worst = std::max(worst, r);
        if (r > tol * std::max(1.0, m_s.col(i_s).norm())) ok = false;
      }
    }
    out.theta_generator_match = ok;
    out.max_residual = worst;
  }

  out.blocks_g = image_algebra(family_g, lalg_g, tol, seed).blocks;
  out.blocks_s = image_algebra(family_s, lalg_s, tol, seed).blocks;
  out.blocks_match = out.blocks_g == out.blocks_s;
  return out;
}

}  // namespace isgx
