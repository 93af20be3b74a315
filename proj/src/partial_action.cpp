#include "isgx/partial_action.hpp"

#include <algorithm>
#include <sstream>

#include "isgx/error.hpp"

namespace isgx {

namespace {

std::string point_list(const GroundSet& ground, const std::vector<int>& points) {
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ",";
    out += ground.label(points[i]);
  }
  return out + "}";
}

Ideal image_of_set(const PartialBijection& map, const Ideal& set) {
  std::vector<int> img;
  for (int x : set.points())
    if (map.defined_at(x)) img.push_back(map.apply(x));
  return Ideal::from_points(set.ambient_size(), img);
}

}  // namespace

PartialAction::PartialAction(std::shared_ptr<const FiniteInverseSemigroup> semigroup,
                             GroundSet ground,
                             std::vector<Ideal> ideal_of,
                             std::vector<PartialBijection> map_of,
                             double support_tol)
    : semigroup_(std::move(semigroup)),
      ground_(std::move(ground)),
      ideal_of_(std::move(ideal_of)),
      map_of_(std::move(map_of)),
      support_tol_(support_tol) {
  if (!semigroup_) throw StructureError("partial action needs a semigroup");
  const int m = semigroup_->size();
  if (static_cast<int>(ideal_of_.size()) != m)
    throw StructureError("partial action: one ideal per semigroup element required");
  if (static_cast<int>(map_of_.size()) != m)
    throw StructureError("partial action: one bijection per semigroup element required");
  for (const auto& d : ideal_of_)
    if (d.ambient_size() != ground_.size())
      throw StructureError("partial action: ideal over wrong ground set");
  for (const auto& b : map_of_)
    if (b.size() != ground_.size())
      throw StructureError("partial action: bijection over wrong ground set");
}

PartialAction PartialAction::tautological(std::shared_ptr<const FiniteInverseSemigroup> semigroup,
                                          double support_tol) {
  if (!semigroup->has_realization())
    throw StructureError("tautological action needs a semigroup realized inside I(X)");
  const GroundSet& ground = semigroup->ground();
  std::vector<Ideal> ideals;
  std::vector<PartialBijection> maps;
  for (int g = 0; g < semigroup->size(); ++g) {
    const PartialBijection& b = semigroup->bijection_of(g);
    ideals.push_back(Ideal::from_points(ground.size(), b.range()));
    maps.push_back(b);
  }
  return PartialAction(std::move(semigroup), ground, std::move(ideals), std::move(maps),
                       support_tol);
}

AlgebraElement PartialAction::apply(int g, const AlgebraElement& a) const {
  return apply(g, a, support_tol_);
}

AlgebraElement PartialAction::apply(int g, const AlgebraElement& a, double tol) const {
  const Ideal& source = ideal_of_.at(semigroup_->inv(g));
  const auto bad = a.support_violations(source, tol);
  if (!bad.empty()) {
    std::ostringstream msg;
    msg << "alpha_" << semigroup_->name(g) << ": argument not supported in D_"
        << semigroup_->name(semigroup_->inv(g)) << "; offending points "
        << point_list(ground_, bad);
    throw DomainError(msg.str());
  }
  const PartialBijection& alpha = map_of_.at(g);
  Vec out = Vec::Zero(ground_.size());
  for (int x = 0; x < ground_.size(); ++x)
    if (alpha.defined_at(x)) out(alpha.apply(x)) = a.at(x);
  return AlgebraElement(std::move(out));
}

ValidationReport validate_axioms(const PartialAction& pa) {
  ValidationReport report;
  const auto& sg = pa.semigroup();
  const auto& ground = pa.ground();
  const int n = ground.size();

  // Structural layer: ideals and bijections must fit together before the
  // axioms mean anything.
  report.expect(pa.ideal(sg.unit()).is_full(), "structure.unit-ideal",
                "D_e must be all of X, got " + point_list(ground, pa.ideal(sg.unit()).points()));
  for (int g = 0; g < sg.size(); ++g) {
    const auto dom = Ideal::from_points(n, pa.map(g).domain());
    const auto ran = Ideal::from_points(n, pa.map(g).range());
    report.expect(dom == pa.ideal(sg.inv(g)), "structure.map-domain",
                  "dom(alpha_" + sg.name(g) + ") = " + point_list(ground, dom.points()) +
                      " but supp(D_" + sg.name(sg.inv(g)) + ") = " +
                      point_list(ground, pa.ideal(sg.inv(g)).points()));
    report.expect(ran == pa.ideal(g), "structure.map-range",
                  "ran(alpha_" + sg.name(g) + ") = " + point_list(ground, ran.points()) +
                      " but supp(D_" + sg.name(g) + ") = " +
                      point_list(ground, pa.ideal(g).points()));
  }
  if (!report.passed()) return report;  // axioms are evaluated on sound structure only

  // (i) alpha_s^{-1} = alpha_{s*}
  for (int s = 0; s < sg.size(); ++s)
    report.expect(pa.map(s).inverse() == pa.map(sg.inv(s)), "axiom-i",
                  "alpha_" + sg.name(s) + "^{-1} != alpha_" + sg.name(sg.inv(s)));

  // (ii) alpha_s(X_{s*} ∩ X_t) = X_s ∩ X_{st}
  for (int s = 0; s < sg.size(); ++s) {
    for (int t = 0; t < sg.size(); ++t) {
      const Ideal lhs = image_of_set(pa.map(s), pa.ideal(sg.inv(s)).intersect(pa.ideal(t)));
      const Ideal rhs = pa.ideal(s).intersect(pa.ideal(sg.mult(s, t)));
      report.expect(lhs == rhs, "axiom-ii",
                    "alpha_" + sg.name(s) + "(X_" + sg.name(sg.inv(s)) + " ∩ X_" + sg.name(t) +
                        ") = " + point_list(ground, lhs.points()) + " != " +
                        point_list(ground, rhs.points()));
    }
  }

  // (iii) alpha_s(alpha_t(x)) = alpha_{st}(x) for x in X_{t*} ∩ X_{t*s*}
  for (int s = 0; s < sg.size(); ++s) {
    for (int t = 0; t < sg.size(); ++t) {
      const Ideal dom =
          pa.ideal(sg.inv(t)).intersect(pa.ideal(sg.mult(sg.inv(t), sg.inv(s))));
      const int st = sg.mult(s, t);
      for (int x : dom.points()) {
        report.record_check();
        const int tx = pa.map(t).apply(x);
        const int stx = tx == PartialBijection::kUndefined ? PartialBijection::kUndefined
                                                           : pa.map(s).apply(tx);
        const int direct = pa.map(st).apply(x);
        if (stx == PartialBijection::kUndefined || direct == PartialBijection::kUndefined ||
            stx != direct) {
          report.fail("axiom-iii", "s=" + sg.name(s) + " t=" + sg.name(t) +
                                       " x=" + ground.label(x));
        }
      }
    }
  }

  // Theorem check: alpha_e = id on X. A failure here means (i)-(iii) are
  // already violated somewhere.
  report.expect(pa.map(sg.unit()).is_identity(), "alpha-e-identity",
                "alpha_e is not the identity map on X");

  return report;
}

PartialBijection composite(const PartialAction& pa, std::span<const int> word) {
  if (word.empty()) throw PreconditionError("composite of empty word");
  PartialBijection acc = pa.map(word.back());
  for (int i = static_cast<int>(word.size()) - 2; i >= 0; --i)
    acc = compose(pa.map(word[i]), acc);
  return acc;
}

DomainFormulaResult check_domain_formula(const PartialAction& pa, std::span<const int> word) {
  if (word.empty()) throw PreconditionError("domain formula of empty word");
  const auto& sg = pa.semigroup();
  const int n = pa.ground().size();
  const int len = static_cast<int>(word.size());

  // Domain: ∩_{j=n..1} D_{sn* s_{n-1}* ... s_j*}, all factors starred.
  Ideal dom_formula = Ideal::full(n);
  int prod = -1;
  for (int j = len - 1; j >= 0; --j) {
    prod = (prod < 0) ? sg.inv(word[j]) : sg.mult(prod, sg.inv(word[j]));
    dom_formula = dom_formula.intersect(pa.ideal(prod));
  }
  // Literal-statement variant: the final factor carries s1 unstarred.
  Ideal dom_statement = Ideal::full(n);
  prod = -1;
  for (int j = len - 1; j >= 0; --j) {
    const int factor = (j == 0) ? word[0] : sg.inv(word[j]);
    prod = (prod < 0) ? factor : sg.mult(prod, factor);
    dom_statement = dom_statement.intersect(pa.ideal(prod));
  }

  // Range: ∩_{j=1..n} D_{s1 s2 ... s_j}.
  Ideal ran_formula = Ideal::full(n);
  prod = -1;
  for (int j = 0; j < len; ++j) {
    prod = (prod < 0) ? word[j] : sg.mult(prod, word[j]);
    ran_formula = ran_formula.intersect(pa.ideal(prod));
  }

  const PartialBijection comp = composite(pa, word);
  const Ideal dom_actual = Ideal::from_points(n, comp.domain());
  const Ideal ran_actual = Ideal::from_points(n, comp.range());

  DomainFormulaResult result{false, std::nullopt, dom_formula == dom_statement, dom_formula,
                             ran_formula};
  result.ok = dom_actual == dom_formula && ran_actual == ran_formula;
  if (!result.ok) {
    for (int x = 0; x < n; ++x) {
      if (dom_actual.contains(x) != dom_formula.contains(x) ||
          ran_actual.contains(x) != ran_formula.contains(x)) {
        result.witness = x;
        break;
      }
    }
  }
  return result;
}

TranslateLemmaResult check_translate_lemma(const PartialAction& pa, int t,
                                           std::span<const int> s_list) {
  const auto& sg = pa.semigroup();
  const int n = pa.ground().size();

  Ideal lhs_arg = pa.ideal(sg.inv(t));
  for (int s : s_list) lhs_arg = lhs_arg.intersect(pa.ideal(s));
  const Ideal lhs = image_of_set(pa.map(t), lhs_arg);

  Ideal rhs = pa.ideal(t);
  for (int s : s_list) rhs = rhs.intersect(pa.ideal(sg.mult(t, s)));

  TranslateLemmaResult result;
  result.ok = lhs == rhs;
  if (!result.ok) {
    for (int x = 0; x < n; ++x)
      if (lhs.contains(x) != rhs.contains(x)) {
        result.witness = x;
        break;
      }
  }
  return result;
}

}  // namespace isgx
