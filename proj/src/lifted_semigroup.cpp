#include "isgx/lifted_semigroup.hpp"

#include <map>
#include <set>
#include <sstream>

#include "isgx/error.hpp"
#include "isgx/linalg.hpp"

namespace isgx {

namespace {

std::string witness_name(const FiniteInverseSemigroup& source, const std::vector<int>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) out += (i ? "." : "") + source.name(word[i]);
  return out;
}

}  // namespace

nlohmann::json LiftedSemigroup::to_json() const {
  nlohmann::json elems = nlohmann::json::array();
  for (int s = 0; s < size(); ++s) {
    nlohmann::json witness = nlohmann::json::array();
    for (int g : elements_[s].witness_word) witness.push_back(source_->name(g));
    nlohmann::json support = nlohmann::json::array();
    for (int x : E(s).points()) support.push_back(ground_.label(x));
    elems.push_back({{"name", abstract_->name(s)},
                     {"witness", witness},
                     {"map", elements_[s].map_part.to_string(ground_)},
                     {"E_support", support},
                     {"idempotent", abstract_->is_idempotent(s)}});
  }
  nlohmann::json mult = nlohmann::json::array();
  for (int s = 0; s < size(); ++s) {
    nlohmann::json row = nlohmann::json::array();
    for (int t = 0; t < size(); ++t) row.push_back(abstract_->name(abstract_->mult(s, t)));
    mult.push_back(row);
  }
  return {{"size", size()},
          {"unit", abstract_->name(abstract_->unit())},
          {"elements", elems},
          {"mult", mult}};
}

LiftedSemigroup build_sg(const PartialAction& pa, const MatrixRep& rep, double tol, int budget) {
  const auto& sg = pa.semigroup();
  LiftedSemigroup out;
  out.source_ = pa.semigroup_ptr();
  out.ground_ = pa.ground();
  out.rep_dim_ = rep.dim;
  out.tol_ = tol;

  auto& elems = out.elements_;
  // Equality on pairs: exact map part, matrix part within tol (operator norm).
  auto find = [&elems, tol](const PartialBijection& map_part, const Mat& mat_part) -> int {
    for (std::size_t k = 0; k < elems.size(); ++k) {
      if (elems[k].map_part != map_part) continue;
      if (linalg::operator_norm(elems[k].mat_part - mat_part) <= tol)
        return static_cast<int>(k);
    }
    return -1;
  };
  auto add = [&](PartialBijection map_part, Mat mat_part, std::vector<int> witness) -> int {
    const int found = find(map_part, mat_part);
    if (found >= 0) return found;
    if (static_cast<int>(elems.size()) >= budget)
      throw ResourceError("S_G closure exceeded the element budget of " + std::to_string(budget));
    elems.push_back({std::move(map_part), std::move(mat_part), std::move(witness)});
    return static_cast<int>(elems.size()) - 1;
  };

  out.lift_of_.resize(sg.size());
  for (int g = 0; g < sg.size(); ++g)
    out.lift_of_[g] = add(pa.map(g), rep.u.at(g), {g});

  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      PartialBijection map_part = compose(elems[i].map_part, elems[j].map_part);
      Mat mat_part = elems[i].mat_part * elems[j].mat_part;
      if (find(map_part, mat_part) >= 0) continue;
      std::vector<int> witness = elems[i].witness_word;
      witness.insert(witness.end(), elems[j].witness_word.begin(), elems[j].witness_word.end());
      add(std::move(map_part), std::move(mat_part), std::move(witness));
    }
  }

  // Abstract tables. The inverse of (phi, W) must already be present as
  // (phi^{-1}, W*); its absence means the pair set is not inverse-closed.
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  std::vector<int> inv(n);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      const int st = find(compose(elems[s].map_part, elems[t].map_part),
                          elems[s].mat_part * elems[t].mat_part);
      if (st < 0) throw StructureError("S_G closure not closed under products");
      mult[s][t] = st;
    }
    inv[s] = find(elems[s].map_part.inverse(), elems[s].mat_part.adjoint());
    if (inv[s] < 0)
      throw StructureError("S_G is not closed under inverses: (phi^{-1}, W*) missing for " +
                           witness_name(sg, elems[s].witness_word));
  }
  const int unit = out.lift_of_[sg.unit()];

  std::vector<std::string> names(n);
  {
    std::set<std::string> used;
    for (int s = 0; s < n; ++s) {
      const std::string base = witness_name(sg, elems[s].witness_word);
      std::string name = base;
      for (int counter = 2; !used.insert(name).second; ++counter)
        name = base + "#" + std::to_string(counter);
      names[s] = name;
    }
  }

  // The ctor revalidates the inverse-semigroup laws exhaustively.
  out.abstract_ = std::make_shared<FiniteInverseSemigroup>(std::move(names), std::move(mult),
                                                           std::move(inv), unit);
  return out;
}

PartialAction beta_action(const LiftedSemigroup& sg) {
  std::vector<Ideal> ideals;
  std::vector<PartialBijection> maps;
  for (int s = 0; s < sg.size(); ++s) {
    ideals.push_back(sg.E(s));
    maps.push_back(sg.element(s).map_part);
  }
  return PartialAction(sg.abstract_ptr(), sg.ground(), std::move(ideals), std::move(maps),
                       sg.tol());
}

ValidationReport check_beta_multiplicativity(const LiftedSemigroup& sg) {
  ValidationReport report;
  const auto& abs = sg.abstract();
  for (int s = 0; s < sg.size(); ++s) {
    for (int t = 0; t < sg.size(); ++t) {
      const PartialBijection composed =
          compose(sg.element(s).map_part, sg.element(t).map_part);
      report.expect(composed == sg.element(abs.mult(s, t)).map_part, "beta-multiplicative",
                    "beta_" + abs.name(s) + " beta_" + abs.name(t) + " != beta_" +
                        abs.name(abs.mult(s, t)) + " as full-domain maps");
    }
  }
  return report;
}

MatrixRep nu_from_u(const LiftedSemigroup& sg, const MatrixRep& rep) {
  MatrixRep nu;
  nu.dim = rep.dim;
  nu.labeling = rep.labeling;
  nu.name = rep.name + "-nu";
  for (int s = 0; s < sg.size(); ++s) nu.u.push_back(sg.element(s).mat_part);
  return nu;
}

ValidationReport check_sg_key_identity(const LiftedSemigroup& sg) {
  ValidationReport report;
  const auto& abs = sg.abstract();
  const auto& src = sg.source();
  for (int g1 = 0; g1 < src.size(); ++g1) {
    for (int g2 = 0; g2 < src.size(); ++g2) {
      const int s = sg.lift_of(src.mult(g1, g2));
      const int s12 = abs.mult(sg.lift_of(g1), sg.lift_of(g2));
      const int lhs = abs.mult(s, abs.inv(s12));
      const int rhs = abs.mult(s12, abs.inv(s12));
      report.expect(lhs == rhs, "key-identity",
                    "g1=" + src.name(g1) + " g2=" + src.name(g2) +
                        ": s(s1s2)* != s1s2(s1s2)*");
    }
  }
  return report;
}

MatrixRep omega_from_z(const LiftedSemigroup& sg, const MatrixRep& z, const PartialAction& pa,
                       double tol) {
  if (pa.semigroup_ptr().get() != &sg.source())
    throw PreconditionError("omega_from_z: sg was not built from this action");
  {
    const PartialAction beta = beta_action(sg);
    const ValidationReport zcov = validate_covariant(beta, z, tol);
    if (!zcov.passed()) {
      std::ostringstream msg;
      msg << "omega_from_z: z is not covariant for (A, S_G, beta); first failure: "
          << zcov.failures().front().check << " [" << zcov.failures().front().witness << "]";
      throw PreconditionError(msg.str());
    }
  }
  const ValidationReport key = check_sg_key_identity(sg);
  if (!key.passed())
    throw StructureError("omega_from_z: key identity s(s1s2)* = s1s2(s1s2)* fails in S_G");

  MatrixRep omega;
  omega.dim = z.dim;
  omega.labeling = z.labeling;
  omega.name = z.name + "-omega";
  for (int g = 0; g < sg.source().size(); ++g) omega.u.push_back(z.u.at(sg.lift_of(g)));
  return omega;
}

}  // namespace isgx
